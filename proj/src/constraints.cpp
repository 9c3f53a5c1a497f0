#include "pathclass/constraints.hpp"

#include <charconv>

#include "pathclass/equivalence.hpp"
#include "pathclass/error.hpp"

namespace pathclass {

Constraint Constraint::avoid(std::string_view word, int min_height) {
  Pattern tau = Pattern::parse(word);
  return Constraint{Kind::Avoid, tau.word(), min_height};
}

Constraint Constraint::starts_with(std::string_view word) { return Constraint{Kind::StartsWith, parse_path(word), 0}; }

Constraint Constraint::ends_with(std::string_view word) { return Constraint{Kind::EndsWith, parse_path(word), 0}; }

Constraint Constraint::not_ends_with(std::string_view word) {
  return Constraint{Kind::NotEndsWith, parse_path(word), 0};
}

Constraint Constraint::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "constraint '" + std::string(text) + "' has no ':'");
  }
  const std::string_view head = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  try {
    if (head == "avoid") {
      int height = 0;
      if (const auto at = body.find('@'); at != std::string_view::npos) {
        const std::string_view digits = body.substr(at + 1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), height);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
          throw Error(ErrorCode::ParseError, "bad height in constraint '" + std::string(text) + "'");
        }
        body = body.substr(0, at);
      }
      return avoid(body, height);
    }
    if (head == "starts") return starts_with(body);
    if (head == "ends") return ends_with(body);
    if (head == "not_ends") return not_ends_with(body);
  } catch (const InvalidCharacter& e) {
    throw Error(ErrorCode::ParseError, "bad path in constraint '" + std::string(text) + "': " + e.what());
  }
  throw Error(ErrorCode::ParseError, "unknown constraint kind '" + std::string(head) + "'");
}

bool Constraint::holds(const Path& p) const {
  switch (kind) {
    case Kind::Avoid: {
      const Pattern tau(word);
      for (std::size_t pos : occurrence_positions(p, tau)) {
        if (occurrence_height(p, pos, tau) >= min_height) return false;
      }
      return true;
    }
    case Kind::StartsWith: return p.starts_with(word);
    case Kind::EndsWith: return p.ends_with(word);
    case Kind::NotEndsWith: return !p.ends_with(word);
  }
  return false;
}

std::string Constraint::str() const {
  switch (kind) {
    case Kind::Avoid: return "avoid:" + word.str() + (min_height != 0 ? "@" + std::to_string(min_height) : "");
    case Kind::StartsWith: return "starts:" + word.str();
    case Kind::EndsWith: return "ends:" + word.str();
    case Kind::NotEndsWith: return "not_ends:" + word.str();
  }
  return {};
}

std::uint64_t count_constrained(std::size_t n, PathMode mode, std::span<const Constraint> constraints,
                                const EnumerationBounds& bounds) {
  std::uint64_t count = 0;
  for_each_path(
      mode, n,
      [&](const Path& p) {
        for (const auto& c : constraints) {
          if (!c.holds(p)) return;
        }
        ++count;
      },
      bounds);
  return count;
}

}  // namespace pathclass
