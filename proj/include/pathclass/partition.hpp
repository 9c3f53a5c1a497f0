#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pathclass/enumerate.hpp"
#include "pathclass/equivalence.hpp"
#include "pathclass/path.hpp"

namespace pathclass {

struct ClassInfo {
  Signature signature;
  std::uint64_t size = 0;
  Path witness;  // lexicographically least member

  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

/// Result of grouping every enumerated path by its signature. In Dyck mode n
/// is the semilength.
struct ClassReport {
  Pattern tau;
  PathMode mode = PathMode::Ballot;
  std::size_t n = 0;
  std::uint64_t class_count = 0;
  std::uint64_t path_count = 0;
  std::vector<ClassInfo> classes;  // sorted by signature; empty unless requested

  friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

struct PartitionOptions {
  EnumerationBounds bounds{};
  bool keep_classes = true;
  // 0 lets OpenMP choose.
  int threads = 0;
};

/// Brute-force class partition. Workers take disjoint enumeration prefixes
/// and their signature maps are merged afterwards, so the report does not
/// depend on the thread count.
ClassReport partition_classes(std::size_t n, const Pattern& tau, PathMode mode,
                              const PartitionOptions& options = {});

/// Single-threaded reference for partition_classes.
ClassReport partition_classes_serial(std::size_t n, const Pattern& tau, PathMode mode,
                                     const PartitionOptions& options = {});

}  // namespace pathclass
