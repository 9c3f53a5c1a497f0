#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "pathclass/path.hpp"

namespace pathclass {

enum class PathMode { Ballot, Dyck };

std::string_view to_string(PathMode mode) noexcept;
PathMode parse_mode(std::string_view text);

/// Safety ceilings for exhaustive enumeration. Dyck bounds are semilengths.
struct EnumerationBounds {
  std::size_t max_ballot_length = 30;
  std::size_t max_dyck_semilength = 14;

  /// Defaults, overridden by PATHCLASS_MAX_N when set: the value becomes the
  /// ballot length ceiling and half of it the Dyck semilength ceiling.
  static EnumerationBounds from_environment();
};

/// Number of steps of an enumerated path: n for ballot, 2n for Dyck.
std::size_t path_length(PathMode mode, std::size_t n) noexcept;

/// Throws BoundExceeded when n is past the ceiling for `mode`.
void check_bounds(PathMode mode, std::size_t n, const EnumerationBounds& bounds);

namespace detail {

// Depth-first extension of a prefix, U before D, so paths come out in
// lexicographic order. In closed mode the path must end at height 0, so a
// rise is only taken while the remaining steps can still come back down.
template <class Visitor>
void extend(std::uint64_t bits, std::size_t len, std::size_t height, std::size_t target,
            bool closed, Visitor& visit) {
  if (len == target) {
    visit(Path::from_bits(bits, len));
    return;
  }
  const std::size_t remaining = target - len;
  if (!closed || height + 1 <= remaining - 1) {
    extend(bits, len + 1, height + 1, target, closed, visit);
  }
  if (height >= 1) {
    extend(bits | (std::uint64_t{1} << (Path::kMaxLength - 1 - len)), len + 1, height - 1,
           target, closed, visit);
  }
}

}  // namespace detail

/// Visits every path of `mode` and size n that starts with `prefix`, in
/// lexicographic order. Used to split an enumeration across workers.
template <class Visitor>
void for_each_completion(PathMode mode, std::size_t n, const Path& prefix, Visitor&& visit) {
  const std::size_t target = path_length(mode, n);
  if (prefix.size() > target || !is_ballot(prefix)) return;
  const int h = terminal_height(prefix);
  const bool closed = mode == PathMode::Dyck;
  if (closed && static_cast<std::size_t>(h) > target - prefix.size()) return;
  detail::extend(prefix.bits(), prefix.size(), static_cast<std::size_t>(h), target, closed, visit);
}

template <class Visitor>
void for_each_path(PathMode mode, std::size_t n, Visitor&& visit,
                   const EnumerationBounds& bounds = {}) {
  check_bounds(mode, n, bounds);
  for_each_completion(mode, n, Path{}, visit);
}

template <class Visitor>
void for_each_ballot(std::size_t n, Visitor&& visit, const EnumerationBounds& bounds = {}) {
  for_each_path(PathMode::Ballot, n, std::forward<Visitor>(visit), bounds);
}

template <class Visitor>
void for_each_dyck(std::size_t semilength, Visitor&& visit, const EnumerationBounds& bounds = {}) {
  for_each_path(PathMode::Dyck, semilength, std::forward<Visitor>(visit), bounds);
}

std::vector<Path> enumerate_ballot(std::size_t n, const EnumerationBounds& bounds = {});
std::vector<Path> enumerate_dyck(std::size_t semilength, const EnumerationBounds& bounds = {});
std::vector<Path> enumerate_paths(PathMode mode, std::size_t n, const EnumerationBounds& bounds = {});

/// All length-`depth` prefixes of paths of `mode` and size n, in
/// lexicographic order. Each path of the mode has exactly one of them.
std::vector<Path> enumeration_prefixes(PathMode mode, std::size_t n, std::size_t depth);

}  // namespace pathclass
