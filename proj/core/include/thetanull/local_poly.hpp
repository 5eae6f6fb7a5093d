#pragma once

#include <array>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetanull {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in the six local coordinates x1..x6 with exact integer
/// coefficients. Monomials are keyed by exponent vectors; zero coefficients
/// are never stored, so structural equality is polynomial equality.
class LocalPoly {
 public:
  static constexpr int kVars = 6;
  using Exponents = std::array<int, kVars>;

  LocalPoly() = default;
  /// Constant polynomial.
  LocalPoly(long c);  // NOLINT(google-explicit-constructor)

  /// x_{index+1}, 0-based index.
  static LocalPoly var(int index);
  static LocalPoly monomial(const Exponents& e, const BigInt& coeff);

  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;
  /// True iff every monomial has total degree d.
  bool is_homogeneous(int d) const;

  LocalPoly operator+(const LocalPoly& o) const;
  LocalPoly operator-(const LocalPoly& o) const;
  LocalPoly operator*(const LocalPoly& o) const;
  LocalPoly operator-() const;
  LocalPoly pow(unsigned n) const;

  /// Substitutes x_{index+1} := value.
  LocalPoly substitute(int index, const BigInt& value) const;
  /// Renames variables: x_i becomes x_{perm[i]}.
  LocalPoly permute(const std::array<int, kVars>& perm) const;
  BigInt evaluate(const std::array<BigInt, kVars>& x) const;

  bool operator==(const LocalPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  std::map<Exponents, BigInt> terms_;
};

}  // namespace thetanull
