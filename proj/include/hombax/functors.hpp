#pragma once

// Conversions between left non-degenerate involutive Hom-quadratic sets and
// left Hom-quasigroups, and the twist and duality operations built on them.
//
//   G : (X, r, a) -> (X, ., a)      with x.y = lam_x^{-1}(y)
//   S : (X, ., a) -> (X, r, a)      with lam_x = sigma_x^{-1},
//                                        rho_y(x) = sigma_x^{-1}(y).x
//   T : (X, ., a) -> (X, .', a)     with x.'y = a(x).y
//
// G and S are mutually inverse; the twist of a solution is S(T(G(-))).

#include <stdexcept>
#include <string>
#include <vector>

#include "hombax/quadset.hpp"
#include "hombax/quasigroup.hpp"

namespace hombax {

/// An identity that is a theorem under the checked preconditions failed.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// G. Throws DegenerateError (witness {x, y1, y2}: lam_x(y1) == lam_x(y2)) when
/// some lam_x is not bijective, and DomainError when alpha is not an
/// endomorphism of the resulting quasigroup.
HomQuasigroup to_hom_quasigroup(const HomQuadraticSet& h);
/// S. The result is always left non-degenerate and involutive.
HomQuadraticSet to_hom_quadratic_set(const HomQuasigroup& x);

/// S(G(h)) == h. Not applicable unless h is left non-degenerate, involutive
/// and hom-compatible.
CheckReport round_trip_check(const HomQuadraticSet& h);
/// G(S(x)) == x.
CheckReport round_trip_check(const HomQuasigroup& x);

HomQuasigroup twist(const HomQuasigroup& x);

/// The twist S(T(G(h))) of a left non-degenerate involutive Hom-quadratic set.
/// Throws DomainError when h is not left non-degenerate, involutive and
/// hom-compatible, and TheoremViolation if the closed forms below disagree
/// with the composite.
HomQuadraticSet twist_solution(const HomQuadraticSet& h);

/// Compares `twisted` against
///   r'(x, y) = (lam_{a x}(y), lam^{-1}_{lam_{a^2 x}(a y)}(x))   (route "general")
///   r'(x, y) = (lam_{a x}(y), rho_{a y}(x))                    (route "hybe")
/// The second route is evaluated only when h is a HYBE solution. Verdict is
/// the "general" route.
CheckReport twist_formula_report(const HomQuadraticSet& h, const HomQuadraticSet& twisted);

/// r^o = tau r tau for a non-degenerate involutive HYBE solution. Throws
/// DegenerateError carrying the Delta collision of G(h) when h is degenerate,
/// DomainError when h is not an involutive HYBE solution, and TheoremViolation
/// if r^o differs from S of the dual Hom-cycle set or is not again a
/// non-degenerate involutive HYBE solution.
HomQuadraticSet dual_solution(const HomQuadraticSet& h);

/// For 0 <= j - i <= 2 evaluates
///   clause-1  r(a^{i+2} x a^j) = (1 x a^2) r(a^i x a^j)
///   clause-2  lam_{a^{i+2}(x)} a^j = lam_{a^i(x)} a^j
/// Holds iff both hold; both are recorded as routes. Throws DomainError when
/// j - i is out of range or h is not a left non-degenerate involutive
/// hom-compatible set.
CheckReport shift_identity(const HomQuadraticSet& h, std::size_t i, std::size_t j);

/// A Hom-quadratic set restricted to alpha(X), relabelled onto {0..k-1}.
struct QuadraticImageRestriction {
  HomQuadraticSet restricted;
  std::vector<Elem> labels;
};

/// Throws DomainError when alpha(X) is not closed under r.
QuadraticImageRestriction restrict_to_image(const HomQuadraticSet& h);

/// r(a^2 x id) = (id x a^2) r on the whole carrier.
bool alpha_square_shift(const HomQuadraticSet& h);
/// r(a^3 x a) = (a x a^3) r
bool alpha_cube_shift(const HomQuadraticSet& h);

/// Facts about a left non-degenerate involutive Hom-quadratic set h and its
/// twist r', enough to decide the three statements relating them on alpha(X).
struct ImageTwistFacts {
  bool h_is_hybe = false;
  bool twisted_image_ybe = false;         // (alpha(X), r') satisfies YBE
  bool twisted_image_shift = false;       // r'(a^2 x id) = (id x a^2) r' on alpha(X)
  bool twisted_is_hybe = false;           // (X, r', a) satisfies HYBE
  bool original_image_ybe = false;        // (alpha(X), r) satisfies YBE
  bool original_image_shift = false;      // r(a^2 x id) = (id x a^2) r on alpha(X)
  bool original_ybe = false;              // (X, r) satisfies YBE
  bool original_cube_shift = false;       // r(a^3 x a) = (a x a^3) r

  /// HYBE solution => twisted restriction is a YBE solution with the shift.
  bool restriction_statement() const {
    return !h_is_hybe || (twisted_image_ybe && twisted_image_shift);
  }
  /// Twist is HYBE <=> original restriction is YBE with the shift.
  bool equivalence_statement() const {
    return twisted_is_hybe == (original_image_ybe && original_image_shift);
  }
  /// YBE plus the cubic shift => twist is HYBE.
  bool sufficiency_statement() const {
    return !(original_ybe && original_cube_shift) || twisted_is_hybe;
  }
};

/// Requires h left non-degenerate, involutive and hom-compatible.
ImageTwistFacts image_twist_facts(const HomQuadraticSet& h);

}  // namespace hombax
