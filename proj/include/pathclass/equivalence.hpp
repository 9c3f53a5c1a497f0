#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "pathclass/path.hpp"

namespace pathclass {

/// Equivalence-class key: path length plus the sorted 1-based positions at
/// which the pattern occurs.
struct Signature {
  std::size_t length = 0;
  std::size_t pattern_length = 0;
  std::vector<std::size_t> positions;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Converts an occurrence_mask() into sorted 1-based positions.
std::vector<std::size_t> positions_from_mask(std::uint64_t mask);

std::vector<std::size_t> occurrence_positions(const Path& p, const Pattern& tau);

/// Minimum height over the |tau|+1 points of the occurrence at 1-based `pos`.
/// Throws NoOccurrenceAtPosition if tau does not occur there.
int occurrence_height(const Path& p, std::size_t pos, const Pattern& tau);

Signature signature(const Path& p, const Pattern& tau);
bool are_equivalent(const Path& p, const Path& q, const Pattern& tau);

/// p = a_0 c_1 a_1 ... c_k a_k where each c_i is a maximal cluster: the
/// union of a chain of occurrences, each overlapping the next by at least one
/// step. Every occurrence of tau lies inside some cluster.
struct ClusterDecomposition {
  Pattern tau;
  std::vector<Path> components;  // a_0 .. a_k
  std::vector<Path> clusters;    // c_1 .. c_k

  std::size_t k() const noexcept { return clusters.size(); }

  friend bool operator==(const ClusterDecomposition&, const ClusterDecomposition&) = default;
};

ClusterDecomposition cluster_decompose(const Path& p, const Pattern& tau);

/// Concatenates a_0 c_1 ... c_k a_k. Throws IllFormedDecomposition unless
/// decomposing the result gives `d` back.
Path reassemble(const ClusterDecomposition& d);

/// h_0 = 0, h_i = height after cluster c_i, h_{k+1} = terminal height.
struct HeightVector {
  std::vector<int> h;

  friend bool operator==(const HeightVector&, const HeightVector&) = default;
};

HeightVector height_vector(const ClusterDecomposition& d);

/// For tau-equivalent p and q, checks
///   h_{i+1} - h'_{i+1} = h_i - h'_i + 2(|a_i|_U - |a'_i|_U)
/// for every i and that h_i and h'_i agree mod 2. Throws NotEquivalent.
bool parity_relation_check(const Path& p, const Path& q, const Pattern& tau);

}  // namespace pathclass

template <>
struct std::hash<pathclass::Signature> {
  std::size_t operator()(const pathclass::Signature& s) const noexcept {
    std::size_t h = s.length * 0x9e3779b97f4a7c15ull ^ s.pattern_length;
    for (std::size_t p : s.positions) h = (h ^ p) * 0x100000001b3ull;
    return h;
  }
};
