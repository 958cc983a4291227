#pragma once

// Quadratic sets (X, r) with r(x, y) = (lam_x(y), rho_y(x)), Hom-quadratic sets
// (X, r, alpha), and the predicates of the (Hom-)Yang-Baxter theory on them.
//
// Storage convention: lam_table()(x, y) = lam_x(y) and rho_table()(y, x) =
// rho_y(x). In both tables the first index is the subscript, so the rho table
// is the transpose of what "r(x, y) second component" would suggest.

#include <optional>
#include <span>

#include "hombax/core.hpp"
#include "hombax/report.hpp"

namespace hombax {

class QuadraticSet {
 public:
  QuadraticSet() = default;
  QuadraticSet(SquareTable lam, SquareTable rho);
  static QuadraticSet from_pair_map(const PairMap& r);

  std::size_t size() const noexcept { return lam_.size(); }
  /// lam_x(y)
  Elem lam(Elem x, Elem y) const noexcept { return lam_(x, y); }
  /// rho_y(x)
  Elem rho(Elem y, Elem x) const noexcept { return rho_(y, x); }
  ElemPair operator()(Elem x, Elem y) const noexcept { return {lam_(x, y), rho_(y, x)}; }

  const SquareTable& lam_table() const noexcept { return lam_; }
  const SquareTable& rho_table() const noexcept { return rho_; }
  PairMap as_pair_map() const;
  /// Table (x, y) -> lam_x^{-1}(y), or nullopt if some lam_x is not bijective.
  std::optional<SquareTable> lam_inverse() const;

  friend auto operator<=>(const QuadraticSet&, const QuadraticSet&) = default;
  friend bool operator==(const QuadraticSet&, const QuadraticSet&) = default;

 private:
  SquareTable lam_;
  SquareTable rho_;
};

/// A quadratic set with a self-map alpha. Compatibility r(a x a) = (a x a)r is
/// reported by is_hom_compatible, never enforced here.
class HomQuadraticSet {
 public:
  HomQuadraticSet() = default;
  HomQuadraticSet(QuadraticSet base, FiniteMap alpha);

  std::size_t size() const noexcept { return base_.size(); }
  const QuadraticSet& base() const noexcept { return base_; }
  const FiniteMap& alpha() const noexcept { return alpha_; }
  Elem lam(Elem x, Elem y) const noexcept { return base_.lam(x, y); }
  Elem rho(Elem y, Elem x) const noexcept { return base_.rho(y, x); }
  ElemPair operator()(Elem x, Elem y) const noexcept { return base_(x, y); }

  friend auto operator<=>(const HomQuadraticSet&, const HomQuadraticSet&) = default;
  friend bool operator==(const HomQuadraticSet&, const HomQuadraticSet&) = default;

 private:
  QuadraticSet base_;
  FiniteMap alpha_;
};

/// Range-checked r(x, y).
ElemPair r_apply(const QuadraticSet& q, Elem x, Elem y);

CheckReport is_hom_compatible(const HomQuadraticSet& h);
CheckReport is_involutive(const QuadraticSet& q);
CheckReport is_left_nondegenerate(const QuadraticSet& q);
CheckReport is_right_nondegenerate(const QuadraticSet& q);
CheckReport is_nondegenerate(const QuadraticSet& q);

/// rho_y(x) = lam^{-1}_{lam_x(y)}(x) for all x, y. Not applicable unless left
/// non-degenerate; the route "left-nd-and-involutive" must agree.
CheckReport involutivity_rho_formula(const QuadraticSet& q);

/// Braid relation on all triples, cross-checked against its three component
/// identities.
CheckReport is_ybe_solution(const QuadraticSet& q);

/// Hom-compatibility plus the mixed braid relation
/// (a x r)(r x a)(a x r) = (r x a)(a x r)(r x a), cross-checked against the
/// componentwise conditions:
///   c1  a lam_x = lam_{a x} a  and  a rho_x = rho_{a x} a
///   c2  a lam_{a x} lam_y = lam_{a lam_x(y)} lam_{rho_y(x)} a
///   c3  rho_{lam_{rho_y(x)} a(z)} a lam_x(y) = lam_{rho_{lam_y(z)} a(x)} a rho_z(y)
///   c4  a rho_{a y} rho_x = rho_{a rho_y(x)} rho_{lam_x(y)} a
CheckReport is_hybe_solution(const HomQuadraticSet& h);

/// Left non-degenerate involutive HYBE solution, via six conditions on lam:
///   c1  lam_x bijective
///   c2  rho_y(x) = lam^{-1}_{lam_x(y)}(x)
///   c3  a lam_x = lam_{a x} a
///   c4  a lam_{a x} lam_{lam_x^{-1}(y)} = lam_{a y} lam_{lam_y^{-1}(x)} a
///   c5  a lam_x lam_{lam_{a x}^{-1}(y)} = lam_{a y} lam_{lam_y^{-1}(a x)} a
///   c6  a lam_x lam_{lam_{a x}^{-1}(a y)} = lam_y lam_{lam_{a y}^{-1}(a x)} a
CheckReport is_lndi_hybe_six_conditions(const HomQuadraticSet& h);

/// Same class via five conditions: c1-c3 as above, then
///   c4  lam_x a = a lam_{a x}
///   c5  a lam_x lam_{lam_{a x}^{-1}(y)} = lam_{a y} lam_{lam_y^{-1}(a x)} a
CheckReport is_lndi_hybe_five_conditions(const HomQuadraticSet& h);

/// lam_x a = lam_{a^2 x} a and lam_x a^2 = a^2 lam_x. Not applicable unless the
/// five conditions hold.
CheckReport alpha_square_identities(const HomQuadraticSet& h);

/// f : X -> X' intertwines lam, rho and alpha. For two left non-degenerate
/// involutive inputs the lam-only and lam-inverse criteria are recorded as
/// extra routes.
CheckReport is_morphism(std::span<const Elem> f, const HomQuadraticSet& from,
                        const HomQuadraticSet& to);

}  // namespace hombax
