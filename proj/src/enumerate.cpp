#include "pathclass/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pathclass/error.hpp"

namespace pathclass {

std::string_view to_string(PathMode mode) noexcept {
  return mode == PathMode::Ballot ? "ballot" : "dyck";
}

PathMode parse_mode(std::string_view text) {
  if (text == "ballot") return PathMode::Ballot;
  if (text == "dyck") return PathMode::Dyck;
  throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(text) + "' (expected ballot or dyck)");
}

EnumerationBounds EnumerationBounds::from_environment() {
  EnumerationBounds bounds;
  if (const char* env = std::getenv("PATHCLASS_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
      throw Error(ErrorCode::ParseError, std::string("PATHCLASS_MAX_N must be a positive integer, got '") + env + "'");
    }
    const std::size_t n = std::min<std::size_t>(value, Path::kMaxLength);
    bounds.max_ballot_length = n;
    bounds.max_dyck_semilength = n / 2;
  }
  return bounds;
}

std::size_t path_length(PathMode mode, std::size_t n) noexcept {
  return mode == PathMode::Ballot ? n : 2 * n;
}

void check_bounds(PathMode mode, std::size_t n, const EnumerationBounds& bounds) {
  const std::size_t limit = mode == PathMode::Ballot ? bounds.max_ballot_length : bounds.max_dyck_semilength;
  if (n > limit || path_length(mode, n) > Path::kMaxLength) {
    throw Error(ErrorCode::BoundExceeded, std::string(to_string(mode)) + " enumeration with n=" +
                                              std::to_string(n) + " exceeds the ceiling " +
                                              std::to_string(limit));
  }
}

std::vector<Path> enumerate_paths(PathMode mode, std::size_t n, const EnumerationBounds& bounds) {
  std::vector<Path> out;
  for_each_path(mode, n, [&](const Path& p) { out.push_back(p); }, bounds);
  return out;
}

std::vector<Path> enumerate_ballot(std::size_t n, const EnumerationBounds& bounds) {
  return enumerate_paths(PathMode::Ballot, n, bounds);
}

std::vector<Path> enumerate_dyck(std::size_t semilength, const EnumerationBounds& bounds) {
  return enumerate_paths(PathMode::Dyck, semilength, bounds);
}

std::vector<Path> enumeration_prefixes(PathMode mode, std::size_t n, std::size_t depth) {
  const std::size_t target = path_length(mode, n);
  depth = std::min(depth, target);
  std::vector<Path> out;
  // A prefix is kept iff it can still be completed to a path of the mode.
  const bool closed = mode == PathMode::Dyck;
  auto collect = [&](const Path& p) {
    if (!closed || static_cast<std::size_t>(terminal_height(p)) <= target - depth) out.push_back(p);
  };
  detail::extend(0, 0, 0, depth, false, collect);
  return out;
}

}  // namespace pathclass
