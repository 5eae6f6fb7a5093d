#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace thetanull {

inline constexpr int kMaxGenus = 8;

enum class Parity { Even, Odd };

/// A half-integer theta characteristic [eps, delta], stored as two length-g
/// bit vectors. Coordinate i lives in bit i of each mask.
class Characteristic {
 public:
  Characteristic() = default;
  Characteristic(int genus, std::uint16_t eps_mask, std::uint16_t delta_mask);
  Characteristic(const std::vector<int>& eps, const std::vector<int>& delta);

  static Characteristic zero(int genus) { return {genus, 0, 0}; }

  /// Parses "eps/delta" written as two bit strings, e.g. "1100/1100".
  static Characteristic parse(std::string_view text);

  int genus() const noexcept { return genus_; }
  int eps(int i) const noexcept { return (eps_ >> i) & 1; }
  int delta(int i) const noexcept { return (delta_ >> i) & 1; }
  std::uint16_t eps_mask() const noexcept { return eps_; }
  std::uint16_t delta_mask() const noexcept { return delta_; }

  Parity parity() const noexcept;
  bool is_even() const noexcept { return parity() == Parity::Even; }
  bool is_zero() const noexcept { return eps_ == 0 && delta_ == 0; }

  /// Concatenation (this || other), used for block-diagonal period matrices.
  Characteristic concat(const Characteristic& other) const;
  /// Coordinates [first, first + count).
  Characteristic slice(int first, int count) const;

  /// "eps/delta" with eps_1 first, e.g. "1100/1100".
  std::string to_string() const;

  bool operator==(const Characteristic&) const = default;
  /// Lexicographic: eps is the major key, delta the minor one, each read as a
  /// bit string with coordinate 1 first.
  std::strong_ordering operator<=>(const Characteristic& other) const noexcept;

 private:
  int genus_ = 0;
  std::uint16_t eps_ = 0;
  std::uint16_t delta_ = 0;
};

/// All even characteristics of genus g in lexicographic order; there are
/// 2^(g-1) (2^g + 1) of them.
std::vector<Characteristic> enumerate_even_chars(int genus);

/// All odd characteristics of genus g in lexicographic order.
std::vector<Characteristic> enumerate_odd_chars(int genus);

constexpr long even_char_count(int genus) noexcept {
  return (1L << (genus - 1)) * ((1L << genus) + 1);
}

}  // namespace thetanull
