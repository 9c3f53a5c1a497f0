#include "pathclass/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pathclass/error.hpp"

namespace pathclass {

std::vector<std::size_t> positions_from_mask(std::uint64_t mask) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::size_t> occurrence_positions(const Path& p, const Pattern& tau) {
  return positions_from_mask(occurrence_mask(p, tau));
}

int occurrence_height(const Path& p, std::size_t pos, const Pattern& tau) {
  if (pos == 0 || pos + tau.size() - 1 > p.size() || p.slice(pos - 1, tau.size()) != tau.word()) {
    throw Error(ErrorCode::NoOccurrenceAtPosition,
                tau.str() + " does not occur at position " + std::to_string(pos) + " of " + p.str());
  }
  const auto h = height_profile(p);
  return *std::min_element(h.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                           h.begin() + static_cast<std::ptrdiff_t>(pos + tau.size()));
}

Signature signature(const Path& p, const Pattern& tau) {
  return Signature{p.size(), tau.size(), occurrence_positions(p, tau)};
}

bool are_equivalent(const Path& p, const Path& q, const Pattern& tau) {
  return p.size() == q.size() && occurrence_mask(p, tau) == occurrence_mask(q, tau);
}

ClusterDecomposition cluster_decompose(const Path& p, const Pattern& tau) {
  ClusterDecomposition d{tau, {}, {}};
  const std::size_t m = tau.size();
  std::uint64_t mask = occurrence_mask(p, tau);
  std::size_t cursor = 0;  // end of the previous cluster
  while (mask != 0) {
    const auto start = static_cast<std::size_t>(std::countr_zero(mask));
    std::size_t end = start + m;
    mask &= mask - 1;
    // Chain every following occurrence that starts before the current end.
    while (mask != 0 && static_cast<std::size_t>(std::countr_zero(mask)) < end) {
      end = static_cast<std::size_t>(std::countr_zero(mask)) + m;
      mask &= mask - 1;
    }
    d.components.push_back(p.slice(cursor, start - cursor));
    d.clusters.push_back(p.slice(start, end - start));
    cursor = end;
  }
  d.components.push_back(p.slice(cursor, p.size() - cursor));
  return d;
}

Path reassemble(const ClusterDecomposition& d) {
  if (d.components.size() != d.clusters.size() + 1) {
    throw Error(ErrorCode::IllFormedDecomposition,
                "expected k+1 components for k clusters, got " + std::to_string(d.components.size()) +
                    " components and " + std::to_string(d.clusters.size()) + " clusters");
  }
  std::size_t total = 0;
  for (const auto& a : d.components) total += a.size();
  for (const auto& c : d.clusters) total += c.size();
  if (total > Path::kMaxLength) throw Error(ErrorCode::IllFormedDecomposition, "decomposition too long");

  Path p = d.components.front();
  for (std::size_t i = 0; i < d.k(); ++i) p += d.clusters[i] + d.components[i + 1];
  if (cluster_decompose(p, d.tau) != d) {
    throw Error(ErrorCode::IllFormedDecomposition,
                "pieces do not form the maximal-cluster decomposition of " + p.str());
  }
  return p;
}

HeightVector height_vector(const ClusterDecomposition& d) {
  HeightVector hv;
  hv.h.reserve(d.k() + 2);
  hv.h.push_back(0);
  int height = 0;
  for (std::size_t i = 0; i < d.k(); ++i) {
    height += terminal_height(d.components[i]) + terminal_height(d.clusters[i]);
    hv.h.push_back(height);
  }
  height += terminal_height(d.components.back());
  hv.h.push_back(height);
  return hv;
}

bool parity_relation_check(const Path& p, const Path& q, const Pattern& tau) {
  if (!are_equivalent(p, q, tau)) {
    throw Error(ErrorCode::NotEquivalent, p.str() + " and " + q.str() + " are not " + tau.str() + "-equivalent");
  }
  const auto dp = cluster_decompose(p, tau);
  const auto dq = cluster_decompose(q, tau);
  const auto hp = height_vector(dp).h;
  const auto hq = height_vector(dq).h;
  for (std::size_t i = 0; i + 1 < hp.size(); ++i) {
    const int rise_gap = static_cast<int>(dp.components[i].rises_count()) -
                         static_cast<int>(dq.components[i].rises_count());
    if (hp[i + 1] - hq[i + 1] != hp[i] - hq[i] + 2 * rise_gap) return false;
  }
  for (std::size_t i = 0; i < hp.size(); ++i) {
    if ((hp[i] - hq[i]) % 2 != 0) return false;
  }
  return true;
}

}  // namespace pathclass
