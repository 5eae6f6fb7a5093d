#include "thetanull/characteristic.hpp"

#include <bit>

#include "thetanull/errors.hpp"

namespace thetanull {

namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus) {
    throw Error(ErrorKind::BadCharacteristic,
                "genus " + std::to_string(genus) + " outside 1.." + std::to_string(kMaxGenus));
  }
}

// Big-endian reading of the mask (coordinate 1 is the most significant bit).
unsigned big_endian(std::uint16_t mask, int genus) {
  unsigned out = 0;
  for (int i = 0; i < genus; ++i) out = (out << 1) | ((mask >> i) & 1u);
  return out;
}

std::uint16_t from_big_endian(unsigned value, int genus) {
  std::uint16_t mask = 0;
  for (int i = 0; i < genus; ++i) {
    if ((value >> (genus - 1 - i)) & 1u) mask |= static_cast<std::uint16_t>(1u << i);
  }
  return mask;
}

std::uint16_t parse_bits(std::string_view bits) {
  std::uint16_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask |= static_cast<std::uint16_t>(1u << i);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::BadCharacteristic, "expected a bit string, got '" + std::string(bits) + "'");
    }
  }
  return mask;
}

}  // namespace

Characteristic::Characteristic(int genus, std::uint16_t eps_mask, std::uint16_t delta_mask)
    : genus_(genus), eps_(eps_mask), delta_(delta_mask) {
  check_genus(genus);
  const auto valid = static_cast<std::uint16_t>((1u << genus) - 1);
  if ((eps_ & ~valid) || (delta_ & ~valid)) {
    throw Error(ErrorKind::BadCharacteristic, "bits set beyond the genus");
  }
}

Characteristic::Characteristic(const std::vector<int>& eps, const std::vector<int>& delta) {
  if (eps.size() != delta.size()) {
    throw Error(ErrorKind::BadCharacteristic, "eps and delta lengths differ");
  }
  genus_ = static_cast<int>(eps.size());
  check_genus(genus_);
  for (int i = 0; i < genus_; ++i) {
    if ((eps[i] & ~1) || (delta[i] & ~1)) {
      throw Error(ErrorKind::BadCharacteristic, "entries must be 0 or 1");
    }
    eps_ |= static_cast<std::uint16_t>(eps[i] << i);
    delta_ |= static_cast<std::uint16_t>(delta[i] << i);
  }
}

Characteristic Characteristic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorKind::BadCharacteristic, "expected 'eps/delta', got '" + std::string(text) + "'");
  }
  const auto eps = text.substr(0, slash);
  const auto delta = text.substr(slash + 1);
  if (eps.size() != delta.size()) {
    throw Error(ErrorKind::BadCharacteristic, "eps and delta lengths differ in '" + std::string(text) + "'");
  }
  return {static_cast<int>(eps.size()), parse_bits(eps), parse_bits(delta)};
}

Parity Characteristic::parity() const noexcept {
  return (std::popcount(static_cast<unsigned>(eps_ & delta_)) & 1) ? Parity::Odd : Parity::Even;
}

Characteristic Characteristic::concat(const Characteristic& other) const {
  const int g = genus_ + other.genus_;
  return {g, static_cast<std::uint16_t>(eps_ | (other.eps_ << genus_)),
          static_cast<std::uint16_t>(delta_ | (other.delta_ << genus_))};
}

Characteristic Characteristic::slice(int first, int count) const {
  if (first < 0 || count < 1 || first + count > genus_) {
    throw Error(ErrorKind::BadCharacteristic, "slice out of range");
  }
  const auto mask = static_cast<std::uint16_t>((1u << count) - 1);
  return {count, static_cast<std::uint16_t>((eps_ >> first) & mask),
          static_cast<std::uint16_t>((delta_ >> first) & mask)};
}

std::string Characteristic::to_string() const {
  std::string out;
  out.reserve(2 * genus_ + 1);
  for (int i = 0; i < genus_; ++i) out.push_back(eps(i) ? '1' : '0');
  out.push_back('/');
  for (int i = 0; i < genus_; ++i) out.push_back(delta(i) ? '1' : '0');
  return out;
}

std::strong_ordering Characteristic::operator<=>(const Characteristic& other) const noexcept {
  if (auto c = genus_ <=> other.genus_; c != 0) return c;
  if (auto c = big_endian(eps_, genus_) <=> big_endian(other.eps_, genus_); c != 0) return c;
  return big_endian(delta_, genus_) <=> big_endian(other.delta_, genus_);
}

namespace {

std::vector<Characteristic> enumerate_by_parity(int genus, Parity wanted) {
  check_genus(genus);
  std::vector<Characteristic> out;
  const unsigned n = 1u << genus;
  for (unsigned e = 0; e < n; ++e) {
    for (unsigned d = 0; d < n; ++d) {
      Characteristic ch(genus, from_big_endian(e, genus), from_big_endian(d, genus));
      if (ch.parity() == wanted) out.push_back(ch);
    }
  }
  return out;
}

}  // namespace

std::vector<Characteristic> enumerate_even_chars(int genus) {
  return enumerate_by_parity(genus, Parity::Even);
}

std::vector<Characteristic> enumerate_odd_chars(int genus) {
  return enumerate_by_parity(genus, Parity::Odd);
}

}  // namespace thetanull
