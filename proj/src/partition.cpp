#include "pathclass/partition.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathclass {
namespace {

// Within one report every path has the same length, so the occurrence mask
// alone is the class key.
struct Bucket {
  std::uint64_t size = 0;
  Path witness;
};

using BucketMap = std::unordered_map<std::uint64_t, Bucket>;

void record(BucketMap& buckets, const Path& p, const Pattern& tau) {
  auto [it, inserted] = buckets.try_emplace(occurrence_mask(p, tau), Bucket{0, p});
  ++it->second.size;
  if (!inserted && p < it->second.witness) it->second.witness = p;
}

void merge_into(BucketMap& into, const BucketMap& from) {
  for (const auto& [key, bucket] : from) {
    auto [it, inserted] = into.try_emplace(key, bucket);
    if (!inserted) {
      it->second.size += bucket.size;
      if (bucket.witness < it->second.witness) it->second.witness = bucket.witness;
    }
  }
}

ClassReport make_report(std::size_t n, const Pattern& tau, PathMode mode, const BucketMap& buckets,
                        bool keep_classes) {
  ClassReport report{tau, mode, n, buckets.size(), 0, {}};
  for (const auto& [key, bucket] : buckets) report.path_count += bucket.size;
  if (keep_classes) {
    report.classes.reserve(buckets.size());
    const std::size_t length = path_length(mode, n);
    for (const auto& [key, bucket] : buckets) {
      report.classes.push_back(
          ClassInfo{Signature{length, tau.size(), positions_from_mask(key)}, bucket.size, bucket.witness});
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return a.signature < b.signature; });
  }
  return report;
}

}  // namespace

ClassReport partition_classes_serial(std::size_t n, const Pattern& tau, PathMode mode,
                                     const PartitionOptions& options) {
  BucketMap buckets;
  for_each_path(mode, n, [&](const Path& p) { record(buckets, p, tau); }, options.bounds);
  return make_report(n, tau, mode, buckets, options.keep_classes);
}

ClassReport partition_classes(std::size_t n, const Pattern& tau, PathMode mode,
                              const PartitionOptions& options) {
  check_bounds(mode, n, options.bounds);
  const std::size_t length = path_length(mode, n);
  // Small inputs are not worth the fan-out.
  if (length < 12) return partition_classes_serial(n, tau, mode, options);

  const std::vector<Path> prefixes = enumeration_prefixes(mode, n, std::min<std::size_t>(length / 2, 10));
  std::vector<BucketMap> partial(prefixes.size());
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());

#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    BucketMap& local = partial[static_cast<std::size_t>(i)];
    for_each_completion(mode, n, prefixes[static_cast<std::size_t>(i)],
                        [&](const Path& p) { record(local, p, tau); });
  }

  BucketMap merged;
  for (const auto& part : partial) merge_into(merged, part);
  return make_report(n, tau, mode, merged, options.keep_classes);
}

}  // namespace pathclass
