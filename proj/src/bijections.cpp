#include <string>

#include "canonical_internal.hpp"
#include "pathclass/canonical.hpp"
#include "pathclass/error.hpp"

namespace pathclass {

using namespace detail;

namespace {

void require_member(const Path& p, TauKind tau, std::string_view op) {
  if (!is_ballot(p) || !is_canonical(p, tau)) {
    throw Error(ErrorCode::NotCanonical, std::string(op) + ": " + p.str() + " is not in A^(" + std::string(name(tau)) + ")");
  }
}

void require_nonempty(const Path& p, std::string_view op) {
  if (p.empty()) throw Error(ErrorCode::LengthTooSmall, std::string(op) + ": the empty path has no image");
}

Path drop_final_rise(const Path& p, TauKind tau, std::string_view op) {
  require_member(p, tau, op);
  require_nonempty(p, op);
  return p.truncated(1);
}

Path add_final_rise(const Path& q, TauKind tau, std::string_view op) {
  require_member(q, tau, op);
  return q.appended(Step::U);
}

Path replace_clusters(const Layout& lay, const std::vector<Path>& comps, const Path& cluster_word) {
  const std::size_t k = lay.k();
  Path out;
  for (std::size_t i = 0; i <= k; ++i) {
    out += comps[i];
    if (i < k) out += cluster_word;
  }
  return out;
}

// a_0 of a uud member with k > 0: (UD)^t or (UD)^t U.
Path uud_first_component(std::ptrdiff_t L) {
  return L % 2 == 0 ? peaks(L / 2) : peaks((L - 1) / 2).appended(Step::U);
}

}  // namespace

Path bijection_du_to_ud(const Path& p) { return drop_final_rise(p, TauKind::DU, "bijection_du_to_ud"); }
Path bijection_ud_to_du(const Path& q) { return add_final_rise(q, TauKind::UD, "bijection_ud_to_du"); }
Path bijection_ddu_to_udd(const Path& p) { return drop_final_rise(p, TauKind::DDU, "bijection_ddu_to_udd"); }
Path bijection_udd_to_ddu(const Path& q) { return add_final_rise(q, TauKind::UDD, "bijection_udd_to_ddu"); }

Path bijection_duu_to_uud(const Path& p) {
  require_member(p, TauKind::DUU, "bijection_duu_to_uud");
  require_nonempty(p, "bijection_duu_to_uud");
  const Layout lay = layout_of(p, pattern_of(TauKind::DUU));
  const std::size_t k = lay.k();
  if (k == 0) return p.truncated(1);

  std::vector<Path> comps = lay.decomposition.components;
  comps[0] = uud_first_component(len(comps[0]) - 1);
  const Path& last = comps[k];
  const int h = lay.start_height[k];
  if (all_falls(last) && len(last) <= h - 1) {
    // unchanged
  } else if (auto t = falls_then_peaks(last, h, true)) {
    comps[k] = falls(h - 1) + peaks(*t + 1);
  } else if (auto t2 = falls_then_peaks(last, h, false)) {
    comps[k] = (falls(h - 1) + peaks(*t2)).appended(Step::U);
  }
  return replace_clusters(lay, comps, parse_path("UUD"));
}

Path bijection_uud_to_duu(const Path& q) {
  require_member(q, TauKind::UUD, "bijection_uud_to_duu");
  const Layout lay = layout_of(q, pattern_of(TauKind::UUD));
  const std::size_t k = lay.k();
  if (k == 0) {
    // (UD)^t -> (UD)^t U and (UD)^t U -> (UD)^{t+1}
    return q.ends_with(Path::rises(1)) ? q.appended(Step::D) : q.appended(Step::U);
  }

  std::vector<Path> comps = lay.decomposition.components;
  comps[0] = comps[0].size() % 2 == 0 ? comps[0].appended(Step::U) : rises(1) + comps[0];
  const Path& last = comps[k];
  const int h = lay.start_height[k];
  if (all_falls(last) && len(last) <= h) {
    // unchanged
  } else if (auto t = falls_then_peaks(last, h, false); t && *t >= 1) {
    comps[k] = (falls(h + 1) + peaks(*t - 1)).appended(Step::U);
  } else if (auto t2 = falls_then_peaks(last, h, true)) {
    comps[k] = falls(h + 1) + peaks(*t2);
  }
  return replace_clusters(lay, comps, parse_path("DUU"));
}

Path bijection_duu_dyck_to_uud_dyck(const Path& p) {
  if (!is_dyck(p) || !is_canonical(p, TauKind::DUU)) {
    throw Error(ErrorCode::NotCanonical, "bijection_duu_dyck_to_uud_dyck: " + p.str() + " is not a Dyck member of A^(duu)");
  }
  require_nonempty(p, "bijection_duu_dyck_to_uud_dyck");
  const Layout lay = layout_of(p, pattern_of(TauKind::DUU));
  const std::size_t k = lay.k();
  if (k == 0) return p.truncated(2);

  std::vector<Path> comps = lay.decomposition.components;
  comps[0] = uud_first_component(len(comps[0]) - 1);
  comps[k] = comps[k].slice(1, comps[k].size() - 1);
  return replace_clusters(lay, comps, parse_path("UUD"));
}

}  // namespace pathclass
