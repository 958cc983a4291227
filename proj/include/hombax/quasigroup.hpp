#pragma once

// Left quasigroups (every left multiplication x -> x.y is a bijection), left
// Hom-quasigroups (X, ., alpha) with alpha an endomorphism, and the cycle-set
// family of predicates on them.

#include <vector>

#include "hombax/core.hpp"
#include "hombax/report.hpp"

namespace hombax {

class LeftQuasigroup {
 public:
  LeftQuasigroup() = default;
  /// Throws DomainError naming the first row that is not a permutation.
  explicit LeftQuasigroup(SquareTable op);

  std::size_t size() const noexcept { return op_.size(); }
  Elem operator()(Elem x, Elem y) const noexcept { return op_(x, y); }
  /// sigma_x^{-1}(y): the unique z with x.z = y.
  Elem ldiv(Elem x, Elem y) const noexcept { return ldiv_(x, y); }
  const SquareTable& table() const noexcept { return op_; }

  friend auto operator<=>(const LeftQuasigroup& a, const LeftQuasigroup& b) {
    return a.op_ <=> b.op_;
  }
  friend bool operator==(const LeftQuasigroup& a, const LeftQuasigroup& b) {
    return a.op_ == b.op_;
  }

 private:
  SquareTable op_;
  SquareTable ldiv_;
};

class HomQuasigroup {
 public:
  HomQuasigroup() = default;
  /// Throws DomainError with the first pair violating alpha(x.y) = alpha(x).alpha(y).
  HomQuasigroup(LeftQuasigroup base, FiniteMap alpha);
  /// Skips the endomorphism check; is_endomorphism re-validates on demand.
  static HomQuasigroup unchecked(LeftQuasigroup base, FiniteMap alpha);

  std::size_t size() const noexcept { return base_.size(); }
  const LeftQuasigroup& base() const noexcept { return base_; }
  const FiniteMap& alpha() const noexcept { return alpha_; }
  Elem operator()(Elem x, Elem y) const noexcept { return base_(x, y); }

  friend auto operator<=>(const HomQuasigroup&, const HomQuasigroup&) = default;
  friend bool operator==(const HomQuasigroup&, const HomQuasigroup&) = default;

 private:
  struct Unchecked {};
  HomQuasigroup(LeftQuasigroup base, FiniteMap alpha, Unchecked);

  LeftQuasigroup base_;
  FiniteMap alpha_;
};

CheckReport is_endomorphism(const FiniteMap& alpha, const LeftQuasigroup& x);
CheckReport is_endomorphism(const HomQuasigroup& h);

/// (xy)(xz) = (yx)(yz)
CheckReport is_cycle_set(const LeftQuasigroup& x);

/// One of the three defining Hom-cycle-set axioms:
///   1  a((xy)(a(x)z))        = (yx)(a(y)a(z))
///   2  a((a(x)y)(xz))        = (y a(x))(a(y)a(z))
///   3  a((a(x)a(y))(xz))     = (a(y)a(x))(y a(z))
CheckReport hom_cycle_axiom(const HomQuasigroup& h, int which);

/// a^2(x)a(y) = x a(y)
CheckReport alpha_square_left_identity(const HomQuasigroup& h);

/// (x a^2(y)) a(z) = (xy) a(z)
CheckReport derived_shift_identity(const HomQuasigroup& h);

/// Decided by the three axioms; route "two-equations" evaluates
/// a^2(x)a(y) = x a(y) together with
/// (x a(y))(a(x)a(z)) = (y a(x))(a(y)a(z)).
CheckReport is_hom_cycle_set(const HomQuasigroup& h);

/// a^3(x)a(y) = a(x)a(y) and (a(x)a(y))(a(x)a(z)) = (a(y)a(x))(a(y)a(z));
/// route "image" checks the restriction to alpha(X) is a cycle set instead of
/// the second identity.
CheckReport is_im_cycle_set(const HomQuasigroup& h);

/// Delta(x, y) = (xy, yx).
PairMap delta_map(const LeftQuasigroup& x);

/// Witness on failure: {x1, y1, x2, y2} with Delta(x1, y1) = Delta(x2, y2),
/// taken at the least image point that has two preimages.
CheckReport is_delta_bijective(const LeftQuasigroup& x);
inline CheckReport is_nondegenerate(const HomQuasigroup& h) { return is_delta_bijective(h.base()); }

/// The dual operation: Delta^{-1}(x, y) = (x o y, y o x). Throws DegenerateError
/// with the Delta collision witness when Delta is not bijective.
LeftQuasigroup dual_op(const LeftQuasigroup& x);

/// q(x) = x.x
FiniteMap square_map(const LeftQuasigroup& x);
/// q'(x) = a(x).x
FiniteMap twisted_square_map(const HomQuasigroup& h);
bool is_square_free(const LeftQuasigroup& x);

/// Sub-quasigroup on alpha(X), relabelled onto {0..k-1}. labels[i] is the
/// original element carrying new label i (ascending).
struct ImageRestriction {
  HomQuasigroup restricted;
  std::vector<Elem> labels;
};

/// Requires alpha(X) closed under the operation (true for endomorphisms);
/// throws DomainError otherwise.
ImageRestriction restrict_to_image(const HomQuasigroup& h);

}  // namespace hombax
