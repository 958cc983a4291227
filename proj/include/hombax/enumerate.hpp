#pragma once

// Exhaustive search over left Hom-quasigroups and LNDI Hom-quadratic sets of
// small order, isomorphism reduction and the theorem sweep.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hombax/quadset.hpp"
#include "hombax/quasigroup.hpp"

namespace hombax {

enum class Predicate { cycle_set, hom_cycle_set, im_cycle_set, non_degenerate, square_free };
enum class AlphaClass { any, identity, constant, bijective };

const char* to_string(Predicate p) noexcept;
const char* to_string(AlphaClass a) noexcept;
std::optional<Predicate> parse_predicate(const std::string& name);
std::optional<AlphaClass> parse_alpha_class(const std::string& name);
/// "all", "cycle-set", ... in a fixed order, for help texts.
std::vector<std::string> predicate_names();

/// Conjunction of predicates and an alpha class. An empty predicate list is
/// the "all" filter.
struct EnumerationFilter {
  std::vector<Predicate> predicates;
  AlphaClass alpha = AlphaClass::any;
  bool up_to_iso = false;

  bool accepts(const HomQuasigroup& h) const;
};

/// Enumeration refused because n is over the cap.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

constexpr std::size_t kDefaultCap = 4;
constexpr std::size_t kHardCap = 5;
/// kDefaultCap, or HOMBAX_MAX_N clamped to [1, kHardCap].
std::size_t enumeration_cap();
/// Upper bound on search leaves: (n!)^n tables times n^n maps.
double estimated_leaves(std::size_t n);
/// Throws CapExceeded with the cost estimate when n > enumeration_cap() or n == 0.
void require_within_cap(std::size_t n);

/// table'[pi x][pi y] = pi(op[x][y]), alpha' = pi alpha pi^{-1}.
HomQuasigroup relabel(const HomQuasigroup& h, const std::vector<Elem>& pi);
HomQuadraticSet relabel(const HomQuadraticSet& h, const std::vector<Elem>& pi);

struct CanonicalKey {
  SquareTable table;
  FiniteMap alpha;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  HomQuasigroup structure() const;
};

struct QuadraticCanonicalKey {
  SquareTable lam;
  SquareTable rho;
  FiniteMap alpha;
  friend auto operator<=>(const QuadraticCanonicalKey&, const QuadraticCanonicalKey&) = default;
  friend bool operator==(const QuadraticCanonicalKey&, const QuadraticCanonicalKey&) = default;
  HomQuadraticSet structure() const;
};

/// Least relabelling over all n! permutations.
CanonicalKey canonical_form(const HomQuasigroup& h);
QuadraticCanonicalKey canonical_form(const HomQuadraticSet& h);
std::size_t automorphism_count(const HomQuasigroup& h);

/// Every structure of order n passing the filter. Raw mode lists them
/// ascending by (table, alpha); up-to-iso mode lists the canonical
/// representatives ascending. The first row is split across `jobs` threads;
/// the result does not depend on `jobs`.
std::vector<HomQuasigroup> enumerate_hom_quasigroups(std::size_t n, const EnumerationFilter& filter,
                                                     std::size_t jobs = 1);

struct CountTable {
  std::size_t n = 0;
  std::size_t raw = 0;
  std::size_t classes = 0;
  /// Sum over classes of n! / |Aut|; equals raw.
  std::size_t orbit_sum = 0;
};
CountTable count_up_to_iso(std::size_t n, const EnumerationFilter& filter, std::size_t jobs = 1);

/// Left non-degenerate involutive HYBE solutions of order n with alpha in the
/// given class, found by searching lam rows and alpha directly on the
/// quadratic side (no quasigroup code involved). Ascending by (lam, rho, alpha).
std::vector<HomQuadraticSet> enumerate_lndi_hybe_solutions(std::size_t n, AlphaClass alpha,
                                                           std::size_t jobs = 1);

struct TheoremResult {
  std::string name;
  std::string statement;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// At most kMaxCounterexamples, sorted.
  std::vector<std::string> counterexamples;
};

struct SuiteReport {
  std::size_t n = 0;
  std::vector<TheoremResult> theorems;
  bool passed() const;
};

constexpr std::size_t kMaxCounterexamples = 5;
/// Orders up to kFullSweepOrder sweep every Hom-quasigroup, higher orders the
/// Hom-cycle sets only. Both censuses (any alpha, alpha = id) run at every order.
constexpr std::size_t kFullSweepOrder = 3;

SuiteReport verify_theorem_suite(std::size_t n, std::size_t jobs = 1);

/// Runs fn(worker, i) for i in [0, count) over `jobs` threads, strided.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace hombax
