#include <algorithm>
#include <exception>
#include <set>
#include <sstream>

#include "hombax/enumerate.hpp"
#include "hombax/functors.hpp"

namespace hombax {

namespace {

enum Theorem : std::size_t {
  kTwoEquations,
  kDerivedShift,
  kCorrespondence,
  kCharacterizations,
  kAlphaSquare,
  kNondegeneracyTransfer,
  kDual,
  kTwistImCycle,
  kImCycleRoutes,
  kTwistOfHomCycle,
  kTwistNondegenerate,
  kSingletonImage,
  kTwistClosedForm,
  kShiftIdentity,
  kImageTwist,
  kIdempotentAlpha,
  kCensus,
  kTheoremCount
};

struct Spec {
  const char* name;
  const char* statement;
};

constexpr Spec kSpecs[kTheoremCount] = {
    {"hom-cycle-two-equations",
     "the three Hom-cycle axioms hold iff a^2(x)a(y) = x a(y) and (x a(y))(a(x)a(z)) = (y a(x))(a(y)a(z))"},
    {"hom-cycle-derived-shift", "every Hom-cycle set satisfies (x a^2(y)) a(z) = (xy) a(z)"},
    {"g-s-correspondence",
     "S and G are mutually inverse, and (X, ., a) is a Hom-cycle set iff S(X, ., a) is a HYBE solution"},
    {"hybe-characterizations",
     "for LNDI Hom-quadratic sets the braid relation, its component identities, the six conditions and the "
     "five conditions give the same verdict"},
    {"alpha-square-identities",
     "an LNDI HYBE solution satisfies lam_x a = lam_{a^2 x} a and lam_x a^2 = a^2 lam_x"},
    {"nondegeneracy-transfer", "a Hom-cycle set is non-degenerate iff its solution S(X) is non-degenerate"},
    {"dual-hom-cycle-set",
     "for a non-degenerate Hom-cycle set, (X, o, a) is a non-degenerate Hom-cycle set and its solution is tau r tau"},
    {"twist-im-cycle-equivalence", "a left Hom-quasigroup is an im-cycle set iff its twist is a Hom-cycle set"},
    {"im-cycle-routes",
     "the im-cycle identities agree with: alpha(X) is a cycle set and a^3(x)a(y) = a(x)a(y)"},
    {"twist-of-hom-cycle", "the twist of a Hom-cycle set is an im-cycle set"},
    {"twist-nondegenerate",
     "the twist of a non-degenerate Hom-cycle set is non-degenerate and q'(x) = a(x)x is bijective"},
    {"singleton-image-twist", "if alpha(X) is a single point the twist is non-degenerate"},
    {"twisted-solution-closed-form",
     "S(T(G(r))) has r'(x, y) = (lam_{a x}(y), lam^{-1}_{lam_{a^2 x}(a y)}(x)), and (lam_{a x}(y), rho_{a y}(x)) "
     "for HYBE solutions"},
    {"shift-identity",
     "for 0 <= j - i <= 2, r(a^{i+2} x a^j) = (1 x a^2) r(a^i x a^j) iff lam_{a^{i+2} x} a^j = lam_{a^i x} a^j; "
     "HYBE solutions satisfy the case i = 0, j = 1"},
    {"image-twist",
     "HYBE implies (alpha(X), r') is a YBE solution with r'(a^2 x id) = (id x a^2) r'; r' is HYBE iff "
     "(alpha(X), r) is YBE with the a^2 shift; YBE with r(a^3 x a) = (a x a^3) r implies r' is HYBE"},
    {"idempotent-alpha", "r = id on X x X gives a HYBE solution iff a^2 = a"},
    {"census-correspondence",
     "Hom-cycle sets and LNDI HYBE solutions have equal iso-class counts and G maps one set of classes onto "
     "the other"},
};

std::string render(const std::vector<std::vector<Elem>>& rows) {
  std::ostringstream o;
  o << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    o << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) o << (j ? "," : "") << rows[i][j];
    o << ']';
  }
  o << ']';
  return o.str();
}

std::string render(const FiniteMap& f) {
  std::ostringstream o;
  o << '[';
  for (std::size_t i = 0; i < f.size(); ++i) o << (i ? "," : "") << f(static_cast<Elem>(i));
  o << ']';
  return o.str();
}

std::string describe(const HomQuasigroup& h) {
  return "op=" + render(h.base().table().rows()) + " alpha=" + render(h.alpha());
}

std::string describe(const HomQuadraticSet& h) {
  return "lam=" + render(h.base().lam_table().rows()) + " rho=" + render(h.base().rho_table().rows()) +
         " alpha=" + render(h.alpha());
}

class Recorder {
 public:
  Recorder() : results_(kTheoremCount) {
    for (std::size_t t = 0; t < kTheoremCount; ++t) {
      results_[t].name = kSpecs[t].name;
      results_[t].statement = kSpecs[t].statement;
    }
  }

  void record(Theorem t, bool ok, const std::string& what) {
    auto& r = results_[t];
    ++r.instances;
    if (ok) return;
    ++r.failures;
    keep(r.counterexamples, what);
  }

  // Evaluates check(); exceptions count as failures.
  template <class F>
  void run(Theorem t, const std::string& what, F&& check) {
    try {
      record(t, check(), what);
    } catch (const std::exception& e) {
      record(t, false, what + " threw: " + e.what());
    }
  }

  void merge(const Recorder& other) {
    for (std::size_t t = 0; t < kTheoremCount; ++t) {
      results_[t].instances += other.results_[t].instances;
      results_[t].failures += other.results_[t].failures;
      for (const auto& c : other.results_[t].counterexamples) keep(results_[t].counterexamples, c);
    }
  }

  std::vector<TheoremResult> results() const { return results_; }

 private:
  static void keep(std::vector<std::string>& list, const std::string& c) {
    list.insert(std::upper_bound(list.begin(), list.end(), c), c);
    if (list.size() > kMaxCounterexamples) list.pop_back();
  }

  std::vector<TheoremResult> results_;
};

bool holds(const CheckReport& r) { return r.holds(); }

void sweep_structure(const HomQuasigroup& x, Recorder& rec) {
  const auto what = describe(x);
  const auto hcs_report = is_hom_cycle_set(x);
  const bool hcs = hcs_report.holds();
  const auto sol = to_hom_quadratic_set(x);

  rec.run(kTwoEquations, what, [&] { return hcs_report.routes_agree(); });
  if (hcs) rec.run(kDerivedShift, what, [&] { return holds(derived_shift_identity(x)); });

  rec.run(kCorrespondence, what, [&] {
    return to_hom_quasigroup(sol) == x && round_trip_check(sol).holds() && round_trip_check(x).holds() &&
           is_hom_compatible(sol).holds() && is_left_nondegenerate(sol.base()).holds() &&
           is_involutive(sol.base()).holds() && is_hybe_solution(sol).holds() == hcs;
  });

  rec.run(kCharacterizations, what, [&] {
    const auto hybe = is_hybe_solution(sol);
    const auto six = is_lndi_hybe_six_conditions(sol);
    const auto five = is_lndi_hybe_five_conditions(sol);
    return hybe.routes_agree() && six.verdict == hybe.verdict && five.verdict == hybe.verdict;
  });

  if (hcs) {
    rec.run(kAlphaSquare, what, [&] { return holds(alpha_square_identities(sol)); });
    const bool nd = is_delta_bijective(x.base()).holds();
    rec.run(kNondegeneracyTransfer, what, [&] { return nd == is_nondegenerate(sol.base()).holds(); });
    if (nd) {
      rec.run(kDual, what, [&] {
        const HomQuasigroup dual(dual_op(x.base()), x.alpha());
        const auto dual_sol = dual_solution(sol);
        return is_hom_cycle_set(dual).holds() && is_delta_bijective(dual.base()).holds() &&
               to_hom_quadratic_set(dual) == dual_sol;
      });
    }
  }

  const auto tw = twist(x);
  const auto im = is_im_cycle_set(x);
  rec.run(kTwistImCycle, what, [&] { return im.holds() == is_hom_cycle_set(tw).holds(); });
  rec.run(kImCycleRoutes, what, [&] { return im.routes_agree(); });
  if (hcs) {
    rec.run(kTwistOfHomCycle, what, [&] { return is_im_cycle_set(tw).holds(); });
    if (is_delta_bijective(x.base()).holds())
      rec.run(kTwistNondegenerate, what, [&] {
        return is_delta_bijective(tw.base()).holds() && twisted_square_map(x).is_bijective();
      });
  }
  if (image(x.alpha()).size() == 1)
    rec.run(kSingletonImage, what, [&] { return is_delta_bijective(tw.base()).holds(); });

  rec.run(kTwistClosedForm, what, [&] { return twist_solution(sol) == to_hom_quadratic_set(tw); });

  rec.run(kShiftIdentity, what, [&] {
    for (std::size_t i = 0; i <= 2; ++i)
      for (std::size_t j = i; j <= i + 2; ++j)
        if (!shift_identity(sol, i, j).routes_agree()) return false;
    return !hcs || shift_identity(sol, 0, 1).holds();
  });

  rec.run(kImageTwist, what, [&] {
    const auto f = image_twist_facts(sol);
    return f.restriction_statement() && f.equivalence_statement() && f.sufficiency_statement();
  });
}

void sweep_idempotent_alpha(std::size_t n, Recorder& rec) {
  auto lam = SquareTable::tabulate(n, [](Elem x, Elem) { return x; });
  auto rho = SquareTable::tabulate(n, [](Elem y, Elem) { return y; });
  const QuadraticSet identity(lam, rho);
  std::vector<Elem> a(n, 0);
  while (true) {
    const FiniteMap alpha(a);
    const HomQuadraticSet h(identity, alpha);
    rec.run(kIdempotentAlpha, describe(h), [&] {
      return is_hybe_solution(h).holds() == (compose(alpha, alpha) == alpha);
    });
    std::size_t pos = 0;
    while (pos < n && ++a[pos] == n) a[pos++] = 0;
    if (pos == n) break;
  }
}

void sweep_census(std::size_t n, AlphaClass alpha, const std::vector<HomQuasigroup>& hom_cycle_sets,
                  std::size_t jobs, Recorder& rec) {
  std::set<CanonicalKey> direct;
  for (const auto& h : hom_cycle_sets)
    if (is_hom_cycle_set(h).holds() && (alpha != AlphaClass::identity || h.alpha().is_identity()))
      direct.insert(canonical_form(h));
  const auto solutions = enumerate_lndi_hybe_solutions(n, alpha, jobs);
  std::set<QuadraticCanonicalKey> solution_classes;
  std::set<CanonicalKey> via_g;
  for (const auto& s : solutions) {
    solution_classes.insert(canonical_form(s));
    via_g.insert(canonical_form(to_hom_quasigroup(s)));
  }
  std::ostringstream what;
  what << "order " << n << " alpha " << to_string(alpha) << ": " << direct.size()
       << " Hom-cycle set classes, " << solution_classes.size() << " solution classes, " << via_g.size()
       << " G-image classes";
  rec.record(kCensus, direct.size() == solution_classes.size() && direct == via_g, what.str());
}

}  // namespace

SuiteReport verify_theorem_suite(std::size_t n, std::size_t jobs) {
  require_within_cap(n);
  jobs = std::max<std::size_t>(jobs, 1);
  Recorder total;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool full = k <= kFullSweepOrder;
    EnumerationFilter filter;
    if (!full) filter.predicates = {Predicate::hom_cycle_set};
    const auto structures = enumerate_hom_quasigroups(k, filter, jobs);
    std::vector<Recorder> parts(std::min(jobs, std::max<std::size_t>(structures.size(), 1)));
    parallel_for(structures.size(), parts.size(),
                 [&](std::size_t w, std::size_t i) { sweep_structure(structures[i], parts[w]); });
    for (const auto& p : parts) total.merge(p);
    if (full) sweep_idempotent_alpha(k, total);
    sweep_census(k, AlphaClass::any, structures, jobs, total);
    sweep_census(k, AlphaClass::identity, structures, jobs, total);
  }
  SuiteReport report;
  report.n = n;
  report.theorems = total.results();
  return report;
}

}  // namespace hombax
