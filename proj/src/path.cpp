#include "pathclass/path.hpp"

#include <algorithm>
#include <bit>

#include "pathclass/error.hpp"

namespace pathclass {
namespace {

constexpr std::uint64_t prefix_mask(std::size_t len) noexcept {
  return len == 0 ? 0 : (len >= Path::kMaxLength ? ~std::uint64_t{0} : ~std::uint64_t{0} << (Path::kMaxLength - len));
}

void check_length(std::size_t len) {
  if (len > Path::kMaxLength) {
    throw Error(ErrorCode::BoundExceeded,
                "path length " + std::to_string(len) + " exceeds " + std::to_string(Path::kMaxLength));
  }
}

}  // namespace

Path::Path(std::initializer_list<Step> steps) {
  check_length(steps.size());
  for (Step s : steps) *this = appended(s);
}

Path Path::from_bits(std::uint64_t bits, std::size_t length) {
  check_length(length);
  Path p;
  p.bits_ = bits & prefix_mask(length);
  p.length_ = static_cast<std::uint8_t>(length);
  return p;
}

Path Path::rises(std::size_t n) { return from_bits(0, n); }

Path Path::falls(std::size_t n) { return from_bits(~std::uint64_t{0}, n); }

std::size_t Path::count(Step s) const noexcept {
  const auto falls = static_cast<std::size_t>(std::popcount(bits_));
  return s == Step::D ? falls : length_ - falls;
}

Path Path::operator+(const Path& rhs) const {
  Path out = *this;
  out += rhs;
  return out;
}

Path& Path::operator+=(const Path& rhs) {
  if (rhs.empty()) return *this;
  check_length(size() + rhs.size());
  bits_ |= rhs.bits_ >> length_;
  length_ = static_cast<std::uint8_t>(length_ + rhs.length_);
  return *this;
}

Path Path::repeated(std::size_t times) const {
  Path out;
  for (std::size_t i = 0; i < times; ++i) out += *this;
  return out;
}

Path Path::slice(std::size_t pos, std::size_t len) const {
  if (pos > size()) pos = size();
  len = std::min(len, size() - pos);
  if (len == 0) return Path{};
  return from_bits(bits_ << pos, len);
}

Path Path::with_step(std::size_t i, Step s) const {
  Path out = *this;
  const std::uint64_t bit = std::uint64_t{1} << (kMaxLength - 1 - i);
  if (s == Step::D) {
    out.bits_ |= bit;
  } else {
    out.bits_ &= ~bit;
  }
  return out;
}

Path Path::appended(Step s) const {
  check_length(size() + 1);
  Path out = *this;
  out.length_ = static_cast<std::uint8_t>(length_ + 1);
  return out.with_step(length_, s);
}

Path Path::truncated(std::size_t n) const { return slice(0, n >= size() ? 0 : size() - n); }

bool Path::starts_with(const Path& prefix) const noexcept {
  if (prefix.size() > size()) return false;
  return (bits_ & prefix_mask(prefix.size())) == prefix.bits_;
}

bool Path::ends_with(const Path& suffix) const noexcept {
  if (suffix.size() > size()) return false;
  return ((bits_ << (size() - suffix.size())) & prefix_mask(suffix.size())) == suffix.bits_;
}

std::string Path::str() const {
  std::string out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i] == Step::U ? 'U' : 'D');
  return out;
}

Pattern::Pattern(Path word) : word_(word) {
  if (word_.empty()) throw Error(ErrorCode::EmptyPattern, "the occurrence string must be nonempty");
}

Pattern Pattern::parse(std::string_view text) { return Pattern(parse_path(text)); }

Path parse_path(std::string_view text) {
  if (text.size() > Path::kMaxLength) {
    throw Error(ErrorCode::BoundExceeded, "path text longer than " + std::to_string(Path::kMaxLength));
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U':
      case 'u':
        break;
      case 'D':
      case 'd':
        bits |= std::uint64_t{1} << (Path::kMaxLength - 1 - i);
        break;
      default:
        throw InvalidCharacter(i + 1, text[i]);
    }
  }
  return Path::from_bits(bits, text.size());
}

std::vector<int> height_profile(const Path& p) {
  std::vector<int> h(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) h[i + 1] = h[i] + (p[i] == Step::U ? 1 : -1);
  return h;
}

int terminal_height(const Path& p) noexcept {
  return static_cast<int>(p.count(Step::U)) - static_cast<int>(p.count(Step::D));
}

int min_height(const Path& p) noexcept {
  int h = 0;
  int lo = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    h += p[i] == Step::U ? 1 : -1;
    lo = std::min(lo, h);
  }
  return lo;
}

bool is_ballot(const Path& p) noexcept { return min_height(p) >= 0; }

bool is_dyck(const Path& p) noexcept { return is_ballot(p) && terminal_height(p) == 0; }

std::uint64_t occurrence_mask(const Path& p, const Pattern& tau) noexcept {
  const std::size_t m = tau.size();
  if (m > p.size()) return 0;
  const std::uint64_t window = prefix_mask(m);
  const std::uint64_t target = tau.word().bits();
  std::uint64_t mask = 0;
  std::uint64_t bits = p.bits();
  for (std::size_t i = 0; i + m <= p.size(); ++i, bits <<= 1) {
    if ((bits & window) == target) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::size_t count_string(const Path& p, const Pattern& tau) noexcept {
  return static_cast<std::size_t>(std::popcount(occurrence_mask(p, tau)));
}

}  // namespace pathclass
