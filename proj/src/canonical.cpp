#include "pathclass/canonical.hpp"

#include <algorithm>
#include <string>

#include "canonical_internal.hpp"
#include "pathclass/error.hpp"

namespace pathclass {
namespace detail {

std::optional<std::ptrdiff_t> falls_then_peaks(const Path& a, std::ptrdiff_t f, bool trailing_rise) {
  const std::ptrdiff_t rest = len(a) - f - (trailing_rise ? 1 : 0);
  if (f < 0 || rest < 0 || rest % 2 != 0) return std::nullopt;
  Path expected = falls(f) + peaks(rest / 2);
  if (trailing_rise) expected = expected.appended(Step::U);
  if (expected != a) return std::nullopt;
  return rest / 2;
}

std::optional<std::pair<std::ptrdiff_t, std::ptrdiff_t>> rises_then_falls(const Path& a) {
  const auto s = static_cast<std::ptrdiff_t>(a.count(Step::U));
  if (rises(s) + falls(len(a) - s) != a) return std::nullopt;
  return std::pair{s, len(a) - s};
}

Layout layout_of(const Path& p, const Pattern& tau) {
  Layout out{cluster_decompose(p, tau), {}};
  out.start_height = height_vector(out.decomposition).h;
  out.start_height.pop_back();
  return out;
}

bool avoids(const Path& p, std::string_view word) { return count_string(p, Pattern::parse(word)) == 0; }

bool avoids_above(const Path& p, std::string_view word, int height) {
  const Pattern tau = Pattern::parse(word);
  for (std::size_t pos : occurrence_positions(p, tau)) {
    if (occurrence_height(p, pos, tau) > height) return false;
  }
  return true;
}

void require_ballot(const Path& p, std::string_view op) {
  if (!is_ballot(p)) {
    throw Error(ErrorCode::NotBallot, std::string(op) + ": " + p.str() + " is not a ballot path");
  }
}

Path reverse_complement(const Path& p) {
  Path out;
  for (std::size_t i = p.size(); i-- > 0;) out = out.appended(p[i] == Step::U ? Step::D : Step::U);
  return out;
}

}  // namespace detail

using namespace detail;

std::string_view name(TauKind tau) noexcept {
  switch (tau) {
    case TauKind::UD: return "ud";
    case TauKind::DU: return "du";
    case TauKind::UU: return "uu";
    case TauKind::DD: return "dd";
    case TauKind::UUU: return "uuu";
    case TauKind::DDD: return "ddd";
    case TauKind::UUD: return "uud";
    case TauKind::DUU: return "duu";
    case TauKind::UDD: return "udd";
    case TauKind::DDU: return "ddu";
    case TauKind::UDU: return "udu";
    case TauKind::DUD: return "dud";
  }
  return "";
}

TauKind parse_tau(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (TauKind tau : kAllTauKinds) {
    if (name(tau) == lower) return tau;
  }
  throw Error(ErrorCode::UnsupportedTau, "'" + std::string(text) + "' is not a string of length 2 or 3 over {u,d}");
}

Pattern pattern_of(TauKind tau) { return Pattern::parse(name(tau)); }

TauKind mirror(TauKind tau) noexcept {
  switch (tau) {
    case TauKind::UD: return TauKind::UD;
    case TauKind::DU: return TauKind::DU;
    case TauKind::UU: return TauKind::DD;
    case TauKind::DD: return TauKind::UU;
    case TauKind::UUU: return TauKind::DDD;
    case TauKind::DDD: return TauKind::UUU;
    case TauKind::UUD: return TauKind::UDD;
    case TauKind::UDD: return TauKind::UUD;
    case TauKind::DUU: return TauKind::DDU;
    case TauKind::DDU: return TauKind::DUU;
    case TauKind::UDU: return TauKind::DUD;
    case TauKind::DUD: return TauKind::UDU;
  }
  return tau;
}

// ---------------------------------------------------------------------------
// Component shapes of A^(tau). `h` is the height at which component i starts.

namespace {

// uu and uuu, i >= 1: D^s, D^h (UD)^t or D^{h-1} (UD)^t with s, t >= 1; only
// the last component may be empty.
bool rise_run_component(const Path& a, int h, bool last) {
  if (a.empty()) return last;
  if (all_falls(a)) return true;
  const auto full = falls_then_peaks(a, h, false);
  if (full && *full >= 1) return true;
  const auto short_by_one = falls_then_peaks(a, h - 1, false);
  return short_by_one && *short_by_one >= 1;
}

bool component_ok(TauKind tau, const Layout& lay, std::size_t i) {
  const Path& a = lay.component(i);
  const int h = lay.start_height[i];
  const std::size_t k = lay.k();
  const bool first = i == 0;
  const bool last = i == k;
  const bool middle = !first && !last;

  switch (tau) {
    case TauKind::UD:
    case TauKind::DU:
    case TauKind::DD:
    case TauKind::DDD:
    case TauKind::UDD:
    case TauKind::DDU:
    case TauKind::UDU:
      return all_rises(a);

    case TauKind::UU:
      if (first) return falls_then_peaks(a, 0, false) || (k == 0 && falls_then_peaks(a, 0, true));
      return rise_run_component(a, h, last);

    case TauKind::UUU:
      if (first) {
        // eps, (UD)^t or U (UD)^t; the bare U only occurs when p = U.
        return falls_then_peaks(a, 0, false) || (a.starts_with(Path::rises(1)) && falls_then_peaks(a.slice(1, a.size() - 1), 0, false));
      }
      return rise_run_component(a, h, last);

    case TauKind::UUD:
      if (all_falls(a) && len(a) <= h - 1) return true;
      return falls_then_peaks(a, h, false) || falls_then_peaks(a, h, true);

    case TauKind::DUU:
      if (first) {
        if (k == 0) return falls_then_peaks(a, 0, false) || falls_then_peaks(a, 0, true);
        // (UD)^t U or U (UD)^t U; both end above height 0 before the first cluster.
        return falls_then_peaks(a, 0, true) ||
               (a.size() >= 2 && a[0] == Step::U && falls_then_peaks(a.slice(1, a.size() - 1), 0, true));
      }
      if (middle) {
        if (all_falls(a) && len(a) <= h - 2) return true;
        return falls_then_peaks(a, h - 1, false) || falls_then_peaks(a, h - 1, true);
      }
      if (all_falls(a) && len(a) <= h - 1) return true;
      return falls_then_peaks(a, h, false) || falls_then_peaks(a, h, true);

    case TauKind::DUD:
      if (middle) return a.empty() || a == Path::falls(1) || (all_rises(a) && a.size() >= 2);
      return all_rises(a);
  }
  return false;
}

// The member of A^(tau) with the same length, given the component length and
// the height `h` reached so far in the path being built.
Path canonical_component(TauKind tau, std::ptrdiff_t L, int h, std::size_t i, std::size_t k) {
  const bool first = i == 0;
  const bool last = i == k;
  switch (tau) {
    case TauKind::UD:
    case TauKind::DU:
    case TauKind::DD:
    case TauKind::DDD:
    case TauKind::UDD:
    case TauKind::DDU:
    case TauKind::UDU:
      return rises(L);

    case TauKind::DUD:
      return (!first && !last && L == 1) ? falls(1) : rises(L);

    case TauKind::UU:
    case TauKind::UUU: {
      if (first) {
        // Only reached for uuu; uu keeps a_0, which is forced anyway.
        return L % 2 == 0 ? peaks(L / 2) : rises(1) + peaks((L - 1) / 2);
      }
      std::ptrdiff_t s = 0;
      if (L <= h) {
        s = L;
      } else if ((L - h) % 2 == 0) {
        s = h;
      } else {
        s = h - 1;
      }
      return falls(s) + peaks((L - s) / 2);
    }

    case TauKind::UUD: {
      if (L <= h - 1) return falls(L);
      const std::ptrdiff_t excess = L - h;
      Path a = falls(h) + peaks(excess / 2);
      return excess % 2 == 0 ? a : a.appended(Step::U);
    }

    case TauKind::DUU: {
      if (first) {
        if (L % 2 == 1) return peaks((L - 1) / 2).appended(Step::U);
        return k == 0 ? peaks(L / 2) : (rises(1) + peaks((L - 2) / 2)).appended(Step::U);
      }
      if (!last) {
        if (L <= h - 1) return falls(L);
        const std::ptrdiff_t excess = L - h;
        return excess % 2 == 0 ? (falls(h - 1) + peaks(excess / 2)).appended(Step::U)
                               : falls(h - 1) + peaks((excess + 1) / 2);
      }
      if (L <= h) return falls(L);
      const std::ptrdiff_t excess = L - h;
      return excess % 2 == 0 ? falls(h) + peaks(excess / 2)
                             : (falls(h) + peaks((excess - 1) / 2)).appended(Step::U);
    }
  }
  return rises(L);
}

}  // namespace

Path normalize(const Path& p, TauKind tau) {
  require_ballot(p, "normalize");
  const auto d = cluster_decompose(p, pattern_of(tau));
  const std::size_t k = d.k();
  Path out;
  int h = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    const Path& a = d.components[i];
    const Path rep = (tau == TauKind::UU && i == 0) ? a : canonical_component(tau, len(a), h, i, k);
    out += rep;
    h += terminal_height(rep);
    if (i < k) {
      out += d.clusters[i];
      h += terminal_height(d.clusters[i]);
    }
  }
  return out;
}

bool is_canonical(const Path& p, TauKind tau) {
  require_ballot(p, "is_canonical");
  const Layout lay = layout_of(p, pattern_of(tau));
  for (std::size_t i = 0; i <= lay.k(); ++i) {
    if (!component_ok(tau, lay, i)) return false;
  }
  return true;
}

std::optional<bool> matches_avoidance_characterization(const Path& p, TauKind tau) {
  require_ballot(p, "matches_avoidance_characterization");
  if (tau == TauKind::UUD || tau == TauKind::DUU) return std::nullopt;
  if (p.empty()) return true;
  const auto ends = [&](std::string_view w) { return p.ends_with(parse_path(w)); };
  const auto starts = [&](std::string_view w) { return p.starts_with(parse_path(w)); };

  switch (tau) {
    case TauKind::UD:
      return avoids(p, "DD");
    case TauKind::DU:
    case TauKind::UDU:
      return avoids(p, "DD") && ends("U");
    case TauKind::UU: {
      const bool up_peaks = p.size() >= 3 && p.size() % 2 == 1 && p == peaks(len(p) / 2).appended(Step::U);
      return avoids(p, "DUDD") && avoids_above(p, "DUD", 1) && (!ends("DU") || up_peaks);
    }
    case TauKind::DD:
      return avoids(p, "UDU") && !ends("UD");
    case TauKind::UUU:
      if (p == Path::rises(1)) return true;
      return !starts("UUDD") && avoids(p, "DUDD") && avoids(p, "DUUD") && avoids_above(p, "DUD", 1) &&
             (ends("UUU") || ends("D"));
    case TauKind::DDD:
      return avoids(p, "UDU") && avoids(p, "UDDU") && (ends("U") || ends("DDD"));
    case TauKind::UDD:
      return avoids(p, "UDU") && avoids(p, "DDD") && (ends("UDD") || ends("U"));
    case TauKind::DDU:
      return avoids(p, "UDU") && avoids(p, "DDD") && ends("U");
    case TauKind::DUD:
      if (p == Path::rises(1)) return true;
      return avoids(p, "DDDD") && avoids(p, "UUDD") && avoids(p, "DDUU") && avoids(p, "UUDUU") &&
             (starts("UU") || starts("UDUD")) && (ends("UU") || ends("DUD") || ends("DUDU"));
    case TauKind::UUD:
    case TauKind::DUU:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Path> representatives(std::size_t n, TauKind tau, const EnumerationBounds& bounds) {
  std::vector<Path> out;
  for_each_ballot(n, [&](const Path& p) { if (is_canonical(p, tau)) out.push_back(p); }, bounds);
  return out;
}

std::vector<Path> dyck_representatives(std::size_t semilength, TauKind tau, const EnumerationBounds& bounds) {
  if (tau != TauKind::UUU && tau != TauKind::UUD && tau != TauKind::DUU) {
    throw Error(ErrorCode::UnsupportedTau,
                "Dyck-class representatives inside A^(tau) exist only for uuu, uud and duu, not " + std::string(name(tau)));
  }
  std::vector<Path> out;
  for_each_dyck(semilength, [&](const Path& p) { if (is_canonical(p, tau)) out.push_back(p); }, bounds);
  return out;
}

}  // namespace pathclass
