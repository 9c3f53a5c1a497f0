#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace pathclass {

enum class Step : std::uint8_t { U = 0, D = 1 };

/// A lattice path: a finite word over the rise U = (1,1) and the fall
/// D = (1,-1).
///
/// Steps are packed most-significant-bit first into one 64-bit word, with
/// D stored as 1. Two paths of equal length therefore compare numerically in
/// lexicographic order with U < D, and (bits, length) ordering is the usual
/// lexicographic order on words of any length. Bits past size() are zero.
class Path {
 public:
  static constexpr std::size_t kMaxLength = 64;

  Path() = default;
  Path(std::initializer_list<Step> steps);

  /// `bits` is MSB-aligned; anything past `length` is discarded.
  static Path from_bits(std::uint64_t bits, std::size_t length);
  static Path rises(std::size_t n);
  static Path falls(std::size_t n);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }

  /// 0-based step access.
  Step operator[](std::size_t i) const noexcept {
    return static_cast<Step>((bits_ >> (kMaxLength - 1 - i)) & 1u);
  }

  std::size_t count(Step s) const noexcept;
  std::size_t rises_count() const noexcept { return count(Step::U); }

  Path operator+(const Path& rhs) const;
  Path& operator+=(const Path& rhs);
  Path repeated(std::size_t times) const;
  Path slice(std::size_t pos, std::size_t len) const;
  Path with_step(std::size_t i, Step s) const;
  Path appended(Step s) const;
  /// Drops the last `n` steps.
  Path truncated(std::size_t n = 1) const;

  bool starts_with(const Path& prefix) const noexcept;
  bool ends_with(const Path& suffix) const noexcept;

  std::string str() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) noexcept {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.length_ <=> b.length_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

/// A nonempty path word whose occurrences are tracked.
class Pattern {
 public:
  explicit Pattern(Path word);
  static Pattern parse(std::string_view text);

  const Path& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::string str() const { return word_.str(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Path word_;
};

/// Case-insensitive; throws InvalidCharacter on anything outside {U,u,D,d}.
Path parse_path(std::string_view text);
inline std::string render_path(const Path& p) { return p.str(); }

/// Heights of the |p|+1 points of p, starting at 0.
std::vector<int> height_profile(const Path& p);
int terminal_height(const Path& p) noexcept;
int min_height(const Path& p) noexcept;
bool is_ballot(const Path& p) noexcept;
bool is_dyck(const Path& p) noexcept;

/// Bit i (LSB first) is set iff tau occurs starting at step offset i, i.e. at
/// 1-based position i+1. Overlapping occurrences are all reported.
std::uint64_t occurrence_mask(const Path& p, const Pattern& tau) noexcept;
std::size_t count_string(const Path& p, const Pattern& tau) noexcept;

namespace literals {
inline Path operator""_path(const char* text, std::size_t len) {
  return parse_path(std::string_view(text, len));
}
}  // namespace literals

}  // namespace pathclass

template <>
struct std::hash<pathclass::Path> {
  std::size_t operator()(const pathclass::Path& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.bits() ^ (std::uint64_t{p.size()} * 0x9e3779b97f4a7c15ull));
  }
};
