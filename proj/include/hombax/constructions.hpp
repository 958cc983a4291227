#pragma once

// Concrete families of solutions and Hom-cycle sets.

#include <utility>
#include <vector>

#include "hombax/functors.hpp"
#include "hombax/quadset.hpp"
#include "hombax/quasigroup.hpp"

namespace hombax {

/// d x d matrix over Z_m. Acts on column vectors.
class ModMatrix {
 public:
  ModMatrix() = default;
  /// Entries are reduced mod m; negative entries are allowed.
  ModMatrix(Elem m, const std::vector<std::vector<long long>>& rows);
  static ModMatrix identity(Elem m, std::size_t d);
  static ModMatrix zero(Elem m, std::size_t d);

  Elem modulus() const noexcept { return m_; }
  std::size_t dim() const noexcept { return d_; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * d_ + j]; }
  std::vector<std::vector<long long>> rows() const;
  std::vector<Elem> apply(const std::vector<Elem>& v) const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
  friend ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  Elem m_ = 2;
  std::size_t d_ = 0;
  std::vector<Elem> a_;
};

/// x.y = phi(x) + psi(y) on (Z_m)^d, with alpha linear. Elements are encoded
/// little-endian mixed radix: index = sum_k v_k m^k.
struct LinearSpec {
  Elem m = 2;
  std::size_t d = 1;
  ModMatrix phi;
  ModMatrix psi;
  ModMatrix alpha;

  friend bool operator==(const LinearSpec&, const LinearSpec&) = default;
};

std::size_t linear_carrier_size(const LinearSpec& spec);
std::vector<Elem> decode_vector(Elem index, Elem m, std::size_t d);
Elem encode_vector(const std::vector<Elem>& v, Elem m);

struct LinearStructure {
  /// Built unchecked: alpha is an endomorphism only when the commuting
  /// condition holds.
  HomQuasigroup structure;
  /// Matrix conditions psi-bijective, alpha-commutes, phi-alpha-square,
  /// phi-square (phi^2 = phi psi alpha - psi phi alpha), with routes "matrix"
  /// and "table" (alpha endomorphism and Hom-cycle axioms on the table).
  CheckReport conditions;
};

/// Throws DomainError when psi is singular mod m or the matrices do not fit.
LinearStructure linear_structure(const LinearSpec& spec);

/// lam_x = id, rho_y = id, i.e. r = tau.
HomQuadraticSet trivial_solution(std::size_t n, const FiniteMap& alpha);

/// r(x, y) = (f(y), g(x)). Throws TheoremViolation if the HYBE verdict differs
/// from "a f = f a, a g = g a and f g a = g f a" (implied by pairwise
/// commuting, equivalent to it for bijective alpha), or left-nd-involutive
/// differs from "f bijective and g = f^{-1}".
HomQuadraticSet permutation_solution(const FiniteMap& f, const FiniteMap& g, const FiniteMap& alpha);

/// alpha constant at theta = 0, lam rows given, rho_y(x) = lam^{-1}_{lam_x(y)}(x).
/// Throws DomainError when a row is not a permutation fixing 0.
HomQuadraticSet theta_solution(const SquareTable& lam_rows);

/// x.y = y with any alpha.
HomQuasigroup right_zero_hom_cycle_set(std::size_t n, const FiniteMap& alpha);

/// Square-free degenerate Hom-cycle set of order 4 with alpha constant at 0.
HomQuasigroup example_4order();

/// The three matrices (phi, psi, alpha) of the GF(p)^3 example.
struct MatrixExample {
  ModMatrix phi;
  ModMatrix psi;
  ModMatrix alpha;
};
MatrixExample example_matrices(Elem p);

/// (X, ., alpha) over GF(p)^3 and its twist. Throws DomainError unless p is an
/// odd prime.
std::pair<HomQuasigroup, HomQuasigroup> example_matrix(Elem p);

}  // namespace hombax
