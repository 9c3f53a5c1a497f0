#include <string>

#include "canonical_internal.hpp"
#include "pathclass/canonical.hpp"
#include "pathclass/error.hpp"

namespace pathclass {

using namespace detail;

namespace {

std::ptrdiff_t ceil_half(std::ptrdiff_t x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

bool udu_dyck_component_ok(const Layout& lay, std::size_t i) {
  const Path& a = lay.component(i);
  if (a.empty()) return true;
  const std::size_t k = lay.k();
  const bool not_last = i < k;
  const auto shape = rises_then_falls(a);
  if (!shape) return false;
  const auto [s, t] = *shape;

  if (i == 0) {
    if (k == 0) return t == s || t == s - 1;
    if (t == 0) return s <= 3;
    return s >= 2 && (t == s || t == s - 1);
  }
  const int h = lay.start_height[i];
  if (t == 0) return not_last && (s == 1 || (s == 2 && h == 1));
  if (s == 0) return t >= 1 + (not_last ? 1 : 0);
  return t == s + h || t == s + h - 1;
}

}  // namespace

bool in_udu_dyck_set(const Path& p) {
  require_ballot(p, "in_udu_dyck_set");
  const Layout lay = layout_of(p, pattern_of(TauKind::UDU));
  for (std::size_t i = 0; i <= lay.k(); ++i) {
    if (!udu_dyck_component_ok(lay, i)) return false;
  }
  return true;
}

Path udu_dyck_normalize(const Path& p) {
  require_ballot(p, "udu_dyck_normalize");
  const auto d = cluster_decompose(p, pattern_of(TauKind::UDU));
  const std::size_t k = d.k();
  Path out;
  int h = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    const std::ptrdiff_t L = len(d.components[i]);
    std::ptrdiff_t s = 0;
    if (i == 0) {
      s = (k > 0 && L <= 3) ? L : ceil_half(L);
    } else {
      s = std::max<std::ptrdiff_t>(ceil_half(L - h), 0);
      if (i < k) s += (L == 2 && h == 1 ? 1 : 0) + (L == 1 ? 1 : 0);
    }
    const Path a = rises(s) + falls(L - s);
    out += a;
    h += terminal_height(a);
    if (i < k) {
      out += d.clusters[i];
      h += terminal_height(d.clusters[i]);
    }
  }
  return out;
}

std::string_view to_string(UduDyckForm::Kind kind) noexcept {
  switch (kind) {
    case UduDyckForm::Kind::DyckPath: return "dyck";
    case UduDyckForm::Kind::SecondForm: return "second-form";
    case UduDyckForm::Kind::NotRepresentative: return "none";
  }
  return "";
}

namespace {

bool alpha_condition(const Path& alpha) {
  if (!avoids(alpha, "DDD")) return true;
  const auto dd = occurrence_positions(alpha, Pattern::parse("DD"));
  if (dd.empty()) return false;
  for (std::size_t j : occurrence_positions(alpha, Pattern::parse("UUDD"))) {
    if (j > dd.front()) return true;
  }
  return false;
}

std::optional<UduSecondForm> second_form_of(const Path& p) {
  const auto heights = height_profile(p);
  const std::size_t n = p.size();
  // alpha is a nonempty Dyck prefix ending in DD; try every return to 0.
  for (std::size_t a = 2; a + 4 <= n; ++a) {
    if (heights[a] != 0 || p[a - 1] != Step::D || p[a - 2] != Step::D) continue;
    std::size_t pos = a;
    std::size_t r = 0;
    while (pos + 1 < n && p[pos] == Step::U && p[pos + 1] == Step::D) {
      pos += 2;
      ++r;
    }
    if (r == 0 || pos + 2 > n || p[pos] != Step::U || p[pos + 1] != Step::U) continue;
    const Path alpha = p.slice(0, a);
    const Path beta = p.slice(pos + 2, n - pos - 2);
    if (!is_dyck(beta) || !beta.starts_with(Path::rises(2))) continue;
    if (!alpha_condition(alpha)) continue;
    return UduSecondForm{alpha, r, beta};
  }
  return std::nullopt;
}

}  // namespace

UduDyckForm classify_udu_dyck_rep(const Path& p) {
  if (!is_ballot(p) || !in_udu_dyck_set(p)) {
    throw Error(ErrorCode::NotInRepresentativeSet, p.str() + " is not in the udu Dyck-class representative set");
  }
  if (is_dyck(p)) return {UduDyckForm::Kind::DyckPath, std::nullopt};
  if (auto form = second_form_of(p)) return {UduDyckForm::Kind::SecondForm, std::move(form)};
  return {UduDyckForm::Kind::NotRepresentative, std::nullopt};
}

Path lift_udu_to_dyck(const Path& p) {
  const auto form = is_ballot(p) ? second_form_of(p) : std::nullopt;
  if (!form) throw Error(ErrorCode::NotSecondForm, p.str() + " is not of the form alpha (UD)^r UU beta");

  Path gamma = form->alpha;
  const auto ddd = occurrence_positions(gamma, Pattern::parse("DDD"));
  if (!ddd.empty()) {
    gamma = gamma.with_step(ddd.front() - 1, Step::U);
  } else {
    // Occurrence positions are 1-based; i and j are the 0-based offsets.
    const std::size_t i = occurrence_positions(gamma, Pattern::parse("DD")).front() - 1;
    std::size_t j = 0;
    for (std::size_t cand : occurrence_positions(gamma, Pattern::parse("UUDD"))) {
      if (cand - 1 > i) {
        j = cand - 1;
        break;
      }
    }
    gamma = gamma.with_step(j + 1, Step::D).with_step(i, Step::U).with_step(i + 1, Step::U);
  }

  // beta = U beta1 D beta2 split at its first return to 0.
  const Path& beta = form->beta;
  const auto hb = height_profile(beta);
  std::size_t ret = 1;
  while (hb[ret] != 0) ++ret;
  const Path beta1 = beta.slice(1, ret - 2);
  const Path beta2 = beta.slice(ret, beta.size() - ret);

  return gamma + peaks(static_cast<std::ptrdiff_t>(form->r)) + parse_path("UDD") + beta1 + falls(1) + beta2;
}

}  // namespace pathclass
