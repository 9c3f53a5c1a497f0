// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathclass/canonical.hpp"
#include "pathclass/generating_functions.hpp"
#include "pathclass/harness.hpp"
#include "pathclass/partition.hpp"

using namespace pathclass;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::uint64_t brute(std::size_t n, TauKind t, PathMode mode) {
  PartitionOptions opt;
  opt.keep_classes = false;
  return partition_classes(n, pattern_of(t), mode, opt).class_count;
}

std::map<Signature, std::vector<Path>> classes_of(std::size_t n, TauKind t) {
  std::map<Signature, std::vector<Path>> out;
  for_each_ballot(n, [&](const Path& p) { out[signature(p, pattern_of(t))].push_back(p); });
  return out;
}

Outcome ballot_table() {
  Outcome o;
  for (TauKind t : kAllTauKinds) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto want = golden_tables().expected(t, PathMode::Ballot, n);
      if (!want || brute(n, t, PathMode::Ballot) != *want) o.fail(std::string(name(t)) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome dyck_table() {
  Outcome o;
  for (TauKind t : kAllTauKinds) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto want = golden_tables().expected(t, PathMode::Dyck, n);
      if (!want || brute(n, t, PathMode::Dyck) != *want) o.fail(std::string(name(t)) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome series_agreement() {
  Outcome o;
  for (TauKind t : kAllTauKinds) {
    const auto gf = gf_ballot(t, 16);
    for (std::size_t n = 1; n <= 16; ++n) {
      const mpq_class want = n <= 12 ? mpq_class(*golden_tables().expected(t, PathMode::Ballot, n))
                                     : mpq_class(brute(n, t, PathMode::Ballot));
      if (gf[n] != want) o.fail("ballot " + std::string(name(t)) + " n=" + std::to_string(n));
    }
  }
  for (TauKind t : {TauKind::UUU, TauKind::DDD, TauKind::UUD, TauKind::UDD, TauKind::DUU, TauKind::DDU,
                    TauKind::UDU, TauKind::DUD}) {
    const auto gf = gf_dyck(t, 12);
    for (std::size_t n = 1; n <= 12; ++n) {
      if (gf[n] != mpq_class(*golden_tables().expected(t, PathMode::Dyck, n))) {
        o.fail("dyck " + std::string(name(t)) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  const auto udd = gf_ballot(TauKind::UDD, 32);
  const auto uud = gf_dyck(TauKind::UUD, 32);
  for (long n = 0; n <= 32; ++n) {
    if (udd[n] != closed_form_udd(n)) o.fail("udd n=" + std::to_string(n));
    if (n >= 1 && uud[n] != closed_form_uud_dyck(n)) o.fail("uud dyck n=" + std::to_string(n));
  }
  return o;
}

Outcome canonical_soundness() {
  Outcome o;
  for (TauKind t : kAllTauKinds) {
    for (std::size_t n = 0; n <= 14; ++n) {
      const auto classes = classes_of(n, t);
      std::set<Path> image;
      const std::string where = std::string(name(t)) + " n=" + std::to_string(n);
      for (const auto& [sig, members] : classes) {
        const Path rep = normalize(members.front(), t);
        if (!is_canonical(rep, t)) o.fail(where + " not canonical " + rep.str());
        if (signature(rep, pattern_of(t)) != sig) o.fail(where + " changes class " + members.front().str());
        if (normalize(rep, t) != rep) o.fail(where + " not idempotent " + rep.str());
        for (const Path& p : members) {
          if (normalize(p, t) != rep) o.fail(where + " not constant on class " + p.str());
        }
        image.insert(rep);
      }
      if (image.size() != classes.size()) o.fail(where + " image size");
      std::set<Signature> seen;
      const auto reps = representatives(n, t);
      for (const Path& p : reps) {
        if (!seen.insert(signature(p, pattern_of(t))).second) o.fail(where + " equivalent pair at " + p.str());
      }
      if (reps.size() != classes.size()) o.fail(where + " representative count");
    }
  }
  return o;
}

Outcome dyck_representative_sets() {
  Outcome o;
  for (TauKind t : {TauKind::UUU, TauKind::UUD, TauKind::DUU}) {
    for (std::size_t n = 0; n <= 8; ++n) {
      std::set<Signature> with_dyck, from_reps;
      for_each_dyck(n, [&](const Path& p) { with_dyck.insert(signature(p, pattern_of(t))); });
      for (const Path& p : dyck_representatives(n, t)) from_reps.insert(signature(p, pattern_of(t)));
      if (with_dyck != from_reps) o.fail(std::string(name(t)) + " n=" + std::to_string(n));
    }
  }
  // Second-form representatives first occur at semilength 8, so the udu check
  // runs past 7 to exercise the lift.
  const Pattern udu = pattern_of(TauKind::UDU);
  std::size_t lifted = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    std::set<Signature> with_dyck, accepted;
    for_each_dyck(n, [&](const Path& p) { with_dyck.insert(signature(p, udu)); });
    for_each_ballot(2 * n, [&](const Path& p) {
      if (!in_udu_dyck_set(p)) return;
      const auto form = classify_udu_dyck_rep(p);
      if (form.kind == UduDyckForm::Kind::DyckPath) accepted.insert(signature(p, udu));
      if (form.kind == UduDyckForm::Kind::SecondForm) {
        const Path q = lift_udu_to_dyck(p);
        if (!is_dyck(q) || signature(q, udu) != signature(p, udu)) o.fail("udu lift " + p.str());
        accepted.insert(signature(p, udu));
        ++lifted;
      }
    });
    if (with_dyck != accepted) o.fail("udu n=" + std::to_string(n));
  }
  if (lifted == 0) o.fail("no second-form instance reached");
  if (o.ok) o.detail = std::to_string(lifted) + " lifts";
  return o;
}

Outcome bijections() {
  Outcome o;
  struct Map {
    TauKind from, to;
    Path (*f)(const Path&);
  };
  for (const Map m : {Map{TauKind::DU, TauKind::UD, bijection_du_to_ud},
                      Map{TauKind::DUU, TauKind::UUD, bijection_duu_to_uud},
                      Map{TauKind::DDU, TauKind::UDD, bijection_ddu_to_udd}}) {
    for (std::size_t n = 0; n <= 14; ++n) {
      const auto src = representatives(n + 1, m.from);
      const auto dst = representatives(n, m.to);
      std::set<Path> image;
      for (const Path& p : src) image.insert(m.f(p));
      if (image.size() != src.size() || image != std::set<Path>(dst.begin(), dst.end())) {
        o.fail(std::string(name(m.from)) + " n=" + std::to_string(n));
      }
    }
  }
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto src = dyck_representatives(n + 1, TauKind::DUU);
    const auto dst = dyck_representatives(n, TauKind::UUD);
    std::set<Path> image;
    for (const Path& p : src) image.insert(bijection_duu_dyck_to_uud_dyck(p));
    if (image.size() != src.size() || image != std::set<Path>(dst.begin(), dst.end())) {
      o.fail("duu dyck n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome parity() {
  Outcome o;
  for (TauKind t : kAllTauKinds) {
    for (std::size_t n = 0; n <= 10; ++n) {
      for (const auto& [sig, members] : classes_of(n, t)) {
        for (const Path& p : members) {
          for (const Path& q : members) {
            if (!parity_relation_check(p, q, pattern_of(t))) o.fail(std::string(name(t)) + " " + p.str() + " " + q.str());
          }
        }
      }
    }
  }
  return o;
}

// Flat-at-zero Motzkin words of length n, optionally with every ascent run >= mu.
std::set<MotzkinWord> motzkin_words(std::size_t n, std::size_t mu) {
  std::set<MotzkinWord> out;
  std::vector<MotzkinStep> w(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long h) {
    if (h < 0 || h > static_cast<long>(n - i)) return;
    if (i == n) {
      const MotzkinWord word(w);
      if (is_motzkin_flat_at_zero(word) && (mu == 0 || ascents_at_least(word, mu))) out.insert(word);
      return;
    }
    w[i] = MotzkinStep::U;
    rec(i + 1, h + 1);
    w[i] = MotzkinStep::H;
    rec(i + 1, h);
    w[i] = MotzkinStep::D;
    rec(i + 1, h - 1);
  };
  rec(0, 0);
  return out;
}

Outcome phi() {
  Outcome o;
  for (std::size_t n = 0; n <= 12; ++n) {
    std::set<MotzkinWord> image;
    std::size_t count = 0;
    for_each_ballot(n, [&](const Path& p) {
      const auto w = phi_to_motzkin(p);
      if (w.size() != n) o.fail("length at " + p.str());
      image.insert(w);
      ++count;
    });
    if (image.size() != count || image != motzkin_words(n, 0)) o.fail("ballot n=" + std::to_string(n));
    for (auto [t, mu] : {std::pair{TauKind::DD, 2u}, std::pair{TauKind::DDD, 3u}}) {
      const auto reps = representatives(n, t);
      std::set<MotzkinWord> sub;
      for (const Path& p : reps) sub.insert(phi_to_motzkin(p));
      if (sub.size() != reps.size() || sub != motzkin_words(n, mu)) {
        o.fail(std::string(name(t)) + " n=" + std::to_string(n));
      }
    }
  }
  return o;
}

Outcome residuals() {
  Outcome o;
  for (const auto& e : defining_equations(32)) {
    if (!e.residual().is_zero()) o.fail(e.name);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ballot table reproduced by brute force", ballot_table},
      {"Dyck table reproduced by brute force", dyck_table},
      {"generating functions match tables and brute force", series_agreement},
      {"closed forms equal series coefficients to order 32", closed_forms},
      {"normalize is sound and unique for n <= 14", canonical_soundness},
      {"Dyck-class representative sets and udu lift", dyck_representative_sets},
      {"explicit bijections", bijections},
      {"parity relation inside every class", parity},
      {"phi onto flat Motzkin words", phi},
      {"zero residuals at order 32", residuals},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %-52s %7.2fs%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
