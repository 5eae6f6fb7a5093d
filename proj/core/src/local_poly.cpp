#include "thetanull/local_poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thetanull {

LocalPoly::LocalPoly(long c) {
  if (c != 0) terms_[Exponents{}] = c;
}

LocalPoly LocalPoly::var(int index) {
  if (index < 0 || index >= kVars) throw std::out_of_range("LocalPoly variable index");
  Exponents e{};
  e[index] = 1;
  return monomial(e, 1);
}

LocalPoly LocalPoly::monomial(const Exponents& e, const BigInt& coeff) {
  LocalPoly p;
  p.add_term(e, coeff);
  return p;
}

void LocalPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int LocalPoly::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

bool LocalPoly::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  }
  return true;
}

LocalPoly LocalPoly::operator+(const LocalPoly& o) const {
  LocalPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LocalPoly LocalPoly::operator-() const {
  LocalPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LocalPoly LocalPoly::operator-(const LocalPoly& o) const { return *this + (-o); }

LocalPoly LocalPoly::operator*(const LocalPoly& o) const {
  LocalPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LocalPoly LocalPoly::pow(unsigned n) const {
  LocalPoly result(1);
  LocalPoly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

LocalPoly LocalPoly::substitute(int index, const BigInt& value) const {
  if (index < 0 || index >= kVars) throw std::out_of_range("LocalPoly variable index");
  LocalPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents reduced = e;
    reduced[index] = 0;
    out.add_term(reduced, c * boost::multiprecision::pow(value, static_cast<unsigned>(e[index])));
  }
  return out;
}

LocalPoly LocalPoly::permute(const std::array<int, kVars>& perm) const {
  LocalPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents moved{};
    for (int i = 0; i < kVars; ++i) moved[perm[i]] = e[i];
    out.add_term(moved, c);
  }
  return out;
}

BigInt LocalPoly::evaluate(const std::array<BigInt, kVars>& x) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (int i = 0; i < kVars; ++i) term *= boost::multiprecision::pow(x[i], static_cast<unsigned>(e[i]));
    sum += term;
  }
  return sum;
}

std::string LocalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int v : e) constant = constant && v == 0;
    if (mag != 1 || constant) os << mag;
    bool need_star = mag != 1;
    for (int i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace thetanull
