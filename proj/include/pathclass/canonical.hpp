#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathclass/enumerate.hpp"
#include "pathclass/equivalence.hpp"
#include "pathclass/path.hpp"

namespace pathclass {

/// The twelve occurrence strings of length 2 and 3.
enum class TauKind { UD, DU, UU, DD, UUU, DDD, UUD, DUU, UDD, DDU, UDU, DUD };

inline constexpr std::array<TauKind, 12> kAllTauKinds = {
    TauKind::UD,  TauKind::DU,  TauKind::UU,  TauKind::DD,  TauKind::UUU, TauKind::DDD,
    TauKind::UUD, TauKind::DUU, TauKind::UDD, TauKind::DDU, TauKind::UDU, TauKind::DUD};

/// Lowercase word, e.g. "uud".
std::string_view name(TauKind tau) noexcept;
/// Accepts either case. Throws UnsupportedTau for anything else.
TauKind parse_tau(std::string_view text);
Pattern pattern_of(TauKind tau);
/// Reverse-complement (uud <-> udd, udu <-> dud, ...). Dyck class counts of
/// a string and its mirror agree.
TauKind mirror(TauKind tau) noexcept;

// ---------------------------------------------------------------------------
// Ballot representatives A^(tau).
//
// Each set is described twice: by the shapes its tau-components may take
// (is_canonical) and, for every string except uud and duu, by an avoidance
// characterization (matches_avoidance_characterization). normalize() builds
// the member of a class component by component.

/// Pre: is_ballot(p). Throws NotBallot.
Path normalize(const Path& p, TauKind tau);

/// Component-shape membership in A^(tau). Pre: is_ballot(p).
bool is_canonical(const Path& p, TauKind tau);

/// The avoidance/boundary description of A^(tau); nullopt for uud and duu,
/// which only have a component description. Pre: is_ballot(p).
std::optional<bool> matches_avoidance_characterization(const Path& p, TauKind tau);

std::vector<Path> representatives(std::size_t n, TauKind tau, const EnumerationBounds& bounds = {});

/// A^(tau) intersected with Dyck paths of semilength n, for uuu, uud and duu.
/// These are exactly the representatives of classes that contain a Dyck path.
/// Throws UnsupportedTau for other strings.
std::vector<Path> dyck_representatives(std::size_t semilength, TauKind tau,
                                       const EnumerationBounds& bounds = {});

// ---------------------------------------------------------------------------
// udu on Dyck paths. The ballot set A^(udu) contains no Dyck path, so a second
// representative set is used whose height sequence is lexicographically least.

/// Membership in the udu Dyck-class representative set. Pre: is_ballot(p).
bool in_udu_dyck_set(const Path& p);

/// The member of the udu Dyck-class representative set equivalent to p.
Path udu_dyck_normalize(const Path& p);

/// p = alpha (UD)^r UU beta with alpha, beta Dyck, r >= 1.
struct UduSecondForm {
  Path alpha;
  std::size_t r = 0;
  Path beta;

  friend bool operator==(const UduSecondForm&, const UduSecondForm&) = default;
};

struct UduDyckForm {
  enum class Kind { DyckPath, SecondForm, NotRepresentative };

  Kind kind = Kind::NotRepresentative;
  std::optional<UduSecondForm> second;  // set iff kind == SecondForm

  friend bool operator==(const UduDyckForm&, const UduDyckForm&) = default;
};

std::string_view to_string(UduDyckForm::Kind kind) noexcept;

/// Decides whether a member of the udu Dyck-class set represents a class with
/// a Dyck path. Throws NotInRepresentativeSet.
UduDyckForm classify_udu_dyck_rep(const Path& p);

/// A Dyck path udu-equivalent to a SecondForm representative. Throws
/// NotSecondForm.
Path lift_udu_to_dyck(const Path& p);

// ---------------------------------------------------------------------------
// Explicit bijections between representative sets.

/// A^(du)_{n+1} -> A^(ud)_n: drop the final rise.
Path bijection_du_to_ud(const Path& p);
Path bijection_ud_to_du(const Path& q);

/// A^(duu)_{n+1} -> A^(uud)_n. a_0 is shortened by one step, every DUU cluster
/// becomes UUD, and the last component is reshaped for the lower heights.
Path bijection_duu_to_uud(const Path& p);
Path bijection_uud_to_duu(const Path& q);

/// A^(ddu)_{n+1} -> A^(udd)_n: drop the final rise.
Path bijection_ddu_to_udd(const Path& p);
Path bijection_udd_to_ddu(const Path& q);

/// Dyck members of A^(duu) of semilength n+1 -> Dyck members of A^(uud) of
/// semilength n.
Path bijection_duu_dyck_to_uud_dyck(const Path& p);

// ---------------------------------------------------------------------------
// Motzkin words.

enum class MotzkinStep : unsigned char { U, H, D };

class MotzkinWord {
 public:
  MotzkinWord() = default;
  explicit MotzkinWord(std::vector<MotzkinStep> steps) : steps_(std::move(steps)) {}
  static MotzkinWord parse(std::string_view text);

  const std::vector<MotzkinStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  std::string str() const;

  friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;
  friend auto operator<=>(const MotzkinWord&, const MotzkinWord&) = default;

 private:
  std::vector<MotzkinStep> steps_;
};

/// Weakly above 0 and ending at 0.
bool is_motzkin(const MotzkinWord& w) noexcept;
/// Motzkin, and every H step lies at height 0.
bool is_motzkin_flat_at_zero(const MotzkinWord& w) noexcept;
/// Every maximal run of U steps has length >= mu.
bool ascents_at_least(const MotzkinWord& w, std::size_t mu) noexcept;

/// phi(eps) = eps, phi(U p) = H phi(p) for an unmatched first rise, and
/// phi(U alpha D p) = U reverse(alpha) D phi(p) with alpha Dyck.
MotzkinWord phi_to_motzkin(const Path& p);

}  // namespace pathclass
