#pragma once

// Shape helpers shared by the canonical-representative sources.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pathclass/canonical.hpp"
#include "pathclass/equivalence.hpp"
#include "pathclass/path.hpp"

namespace pathclass::detail {

inline Path rises(std::ptrdiff_t n) { return Path::rises(static_cast<std::size_t>(n)); }
inline Path falls(std::ptrdiff_t n) { return Path::falls(static_cast<std::size_t>(n)); }
inline Path peaks(std::ptrdiff_t t) { return Path({Step::U, Step::D}).repeated(static_cast<std::size_t>(t)); }

inline std::ptrdiff_t len(const Path& p) { return static_cast<std::ptrdiff_t>(p.size()); }

inline bool all_rises(const Path& a) { return a.count(Step::D) == 0; }
inline bool all_falls(const Path& a) { return a.count(Step::U) == 0; }

/// t such that a == D^f (UD)^t, followed by one U when `trailing_rise`.
std::optional<std::ptrdiff_t> falls_then_peaks(const Path& a, std::ptrdiff_t f, bool trailing_rise);

/// (s, t) such that a == U^s D^t.
std::optional<std::pair<std::ptrdiff_t, std::ptrdiff_t>> rises_then_falls(const Path& a);

/// Components of p with the height at which each starts (h_0 = 0, then the
/// height after each cluster).
struct Layout {
  ClusterDecomposition decomposition;
  std::vector<int> start_height;

  std::size_t k() const { return decomposition.k(); }
  const Path& component(std::size_t i) const { return decomposition.components[i]; }
};

Layout layout_of(const Path& p, const Pattern& tau);

bool avoids(const Path& p, std::string_view word);
/// No occurrence of `word` whose occurrence height is strictly above `height`.
bool avoids_above(const Path& p, std::string_view word, int height);

void require_ballot(const Path& p, std::string_view op);

/// Reverse of a path followed by swapping U and D: its mirror image in a
/// vertical axis.
Path reverse_complement(const Path& p);

}  // namespace pathclass::detail
