#include <string>

#include "canonical_internal.hpp"
#include "pathclass/canonical.hpp"
#include "pathclass/error.hpp"

namespace pathclass {

MotzkinWord MotzkinWord::parse(std::string_view text) {
  std::vector<MotzkinStep> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': case 'u': steps.push_back(MotzkinStep::U); break;
      case 'H': case 'h': steps.push_back(MotzkinStep::H); break;
      case 'D': case 'd': steps.push_back(MotzkinStep::D); break;
      default:
        throw InvalidCharacter(i + 1, text[i]);
    }
  }
  return MotzkinWord(std::move(steps));
}

std::string MotzkinWord::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (MotzkinStep s : steps_) out += s == MotzkinStep::U ? 'U' : s == MotzkinStep::H ? 'H' : 'D';
  return out;
}

namespace {

template <class OnStep>
bool walk(const MotzkinWord& w, OnStep on_step) {
  int h = 0;
  for (MotzkinStep s : w.steps()) {
    if (!on_step(s, h)) return false;
    if (s == MotzkinStep::U) ++h;
    if (s == MotzkinStep::D && --h < 0) return false;
  }
  return h == 0;
}

}  // namespace

bool is_motzkin(const MotzkinWord& w) noexcept {
  return walk(w, [](MotzkinStep, int) { return true; });
}

bool is_motzkin_flat_at_zero(const MotzkinWord& w) noexcept {
  return walk(w, [](MotzkinStep s, int h) { return s != MotzkinStep::H || h == 0; });
}

bool ascents_at_least(const MotzkinWord& w, std::size_t mu) noexcept {
  std::size_t run = 0;
  for (MotzkinStep s : w.steps()) {
    if (s == MotzkinStep::U) {
      ++run;
      continue;
    }
    if (run > 0 && run < mu) return false;
    run = 0;
  }
  return run == 0 || run >= mu;
}

MotzkinWord phi_to_motzkin(const Path& p) {
  detail::require_ballot(p, "phi_to_motzkin");
  std::vector<MotzkinStep> out;
  out.reserve(p.size());
  std::size_t i = 0;
  while (i < p.size()) {
    // p[i] is a rise at the running minimum; find its matching fall if any.
    std::size_t j = i + 1;
    int depth = 1;
    for (; j < p.size(); ++j) {
      depth += p[j] == Step::U ? 1 : -1;
      if (depth == 0) break;
    }
    if (j >= p.size()) {
      out.push_back(MotzkinStep::H);
      ++i;
      continue;
    }
    out.push_back(MotzkinStep::U);
    const Path inner = detail::reverse_complement(p.slice(i + 1, j - i - 1));
    for (std::size_t m = 0; m < inner.size(); ++m) out.push_back(inner[m] == Step::U ? MotzkinStep::U : MotzkinStep::D);
    out.push_back(MotzkinStep::D);
    i = j + 1;
  }
  return MotzkinWord(std::move(out));
}

}  // namespace pathclass
