#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "pathclass/enumerate.hpp"
#include "pathclass/path.hpp"

namespace pathclass {

/// One atom of a path filter. Text form: "avoid:DUD@1", "starts:UU",
/// "ends:U", "not_ends:UD". `avoid` without "@h" means height 0.
struct Constraint {
  enum class Kind { Avoid, StartsWith, EndsWith, NotEndsWith };

  Kind kind = Kind::Avoid;
  Path word;
  // Avoid only: forbids occurrences whose occurrence height is >= min_height.
  int min_height = 0;

  static Constraint avoid(std::string_view word, int min_height = 0);
  static Constraint starts_with(std::string_view word);
  static Constraint ends_with(std::string_view word);
  static Constraint not_ends_with(std::string_view word);
  static Constraint parse(std::string_view text);

  bool holds(const Path& p) const;
  std::string str() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Counts the paths of `mode` and size n satisfying every constraint.
std::uint64_t count_constrained(std::size_t n, PathMode mode, std::span<const Constraint> constraints,
                                const EnumerationBounds& bounds = {});

}  // namespace pathclass
