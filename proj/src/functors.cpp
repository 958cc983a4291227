#include "hombax/functors.hpp"

#include "scan.hpp"

namespace hombax {

using detail::scan2;

namespace {

bool is_lndi_compatible(const HomQuadraticSet& h) {
  return is_left_nondegenerate(h.base()).holds() && is_involutive(h.base()).holds() &&
         is_hom_compatible(h).holds();
}

void require_lndi_compatible(const HomQuadraticSet& h, const char* who) {
  if (!is_left_nondegenerate(h.base()).holds())
    throw DomainError(std::string(who) + ": input is not left non-degenerate");
  if (!is_involutive(h.base()).holds())
    throw DomainError(std::string(who) + ": input is not involutive");
  if (!is_hom_compatible(h).holds())
    throw DomainError(std::string(who) + ": alpha is not compatible with r");
}

std::string pair_str(Elem x, Elem y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

HomQuasigroup to_hom_quasigroup(const HomQuadraticSet& h) {
  auto inv = h.base().lam_inverse();
  if (!inv) {
    auto left = is_left_nondegenerate(h.base());
    throw DegenerateError("G: lam_" + std::to_string(left.witness[0]) + " is not bijective",
                          left.witness);
  }
  return HomQuasigroup(LeftQuasigroup(std::move(*inv)), h.alpha());
}

HomQuadraticSet to_hom_quadratic_set(const HomQuasigroup& x) {
  const auto n = x.size();
  const auto& m = x.base();
  auto lam = SquareTable::tabulate(n, [&](Elem a, Elem b) { return m.ldiv(a, b); });
  auto rho = SquareTable::tabulate(n, [&](Elem b, Elem a) { return m(m.ldiv(a, b), a); });
  return HomQuadraticSet(QuadraticSet(std::move(lam), std::move(rho)), x.alpha());
}

CheckReport round_trip_check(const HomQuadraticSet& h) {
  const char* name = "round-trip-sg";
  if (!is_lndi_compatible(h)) return CheckReport::inapplicable(name, "precondition", {});
  const auto back = to_hom_quadratic_set(to_hom_quasigroup(h));
  auto w = scan2(h.size(), [&](Elem x, Elem y) { return back(x, y) == h(x, y); });
  if (w) return CheckReport::fail(name, "r", *w);
  if (back.alpha() != h.alpha()) return CheckReport::fail(name, "alpha", {});
  return CheckReport::pass(name);
}

CheckReport round_trip_check(const HomQuasigroup& x) {
  const char* name = "round-trip-gs";
  const auto back = to_hom_quasigroup(to_hom_quadratic_set(x));
  auto w = scan2(x.size(), [&](Elem a, Elem b) { return back(a, b) == x(a, b); });
  if (w) return CheckReport::fail(name, "op", *w);
  if (back.alpha() != x.alpha()) return CheckReport::fail(name, "alpha", {});
  return CheckReport::pass(name);
}

HomQuasigroup twist(const HomQuasigroup& x) {
  const auto& a = x.alpha();
  auto op = SquareTable::tabulate(x.size(), [&](Elem u, Elem v) { return x(a(u), v); });
  return HomQuasigroup::unchecked(LeftQuasigroup(std::move(op)), a);
}

CheckReport twist_formula_report(const HomQuadraticSet& h, const HomQuadraticSet& twisted) {
  const auto& A = h.alpha();
  const auto inv = h.base().lam_inverse();
  if (!inv) throw DomainError("twist_formula_report: input is not left non-degenerate");
  const auto& Li = *inv;
  auto general = scan2(h.size(), [&](Elem x, Elem y) {
    const ElemPair expected{h.lam(A(x), y), Li(h.lam(A(A(x)), A(y)), x)};
    return twisted(x, y) == expected;
  });
  CheckReport report = general ? CheckReport::fail("twist-formula", "general", *general)
                               : CheckReport::pass("twist-formula");
  report.routes = {{"general", report.verdict}};
  if (is_hybe_solution(h).holds()) {
    auto hybe = scan2(h.size(), [&](Elem x, Elem y) {
      return twisted(x, y) == ElemPair{h.lam(A(x), y), h.rho(A(y), x)};
    });
    report.routes.push_back({"hybe", hybe ? Verdict::fails : Verdict::holds});
  }
  return report;
}

HomQuadraticSet twist_solution(const HomQuadraticSet& h) {
  require_lndi_compatible(h, "twist_solution");
  auto twisted = to_hom_quadratic_set(twist(to_hom_quasigroup(h)));
  auto check = twist_formula_report(h, twisted);
  if (!check.holds() || !check.routes_agree())
    throw TheoremViolation("twist_solution: closed form disagrees with S(T(G(h)))");
  return twisted;
}

HomQuadraticSet dual_solution(const HomQuadraticSet& h) {
  const auto x = to_hom_quasigroup(h);
  const auto dual = dual_op(x.base());
  if (!is_involutive(h.base()).holds() || !is_hybe_solution(h).holds())
    throw DomainError("dual_solution: input is not an involutive HYBE solution");

  const auto& q = h.base();
  QuadraticSet swapped(q.rho_table(), q.lam_table());
  HomQuadraticSet result(std::move(swapped), h.alpha());

  const auto n = h.size();
  const PairMap tau = PairMap::swap(n);
  if (compose(tau, compose(q.as_pair_map(), tau)) != result.base().as_pair_map())
    throw TheoremViolation("dual_solution: tau r tau differs from the swapped tables");
  if (auto w = scan2(n, [&](Elem a, Elem b) {
        return result(a, b) == ElemPair{h.rho(a, b), h.lam(b, a)};
      }))
    throw TheoremViolation("dual_solution: component formula fails at " +
                           pair_str((*w)[0], (*w)[1]));
  const HomQuasigroup dual_hom = HomQuasigroup::unchecked(dual, h.alpha());
  if (to_hom_quadratic_set(dual_hom) != result)
    throw TheoremViolation("dual_solution: r^o differs from S of the dual operation");
  if (!is_nondegenerate(result.base()).holds() || !is_involutive(result.base()).holds() ||
      !is_hybe_solution(result).holds())
    throw TheoremViolation("dual_solution: r^o is not a non-degenerate involutive HYBE solution");
  return result;
}

CheckReport shift_identity(const HomQuadraticSet& h, std::size_t i, std::size_t j) {
  if (j < i || j - i > 2) throw DomainError("shift_identity: requires 0 <= j - i <= 2");
  require_lndi_compatible(h, "shift_identity");
  const MapPowers powers(h.alpha());
  const auto& ai = powers[i];
  const auto& ai2 = powers[i + 2];
  const auto& aj = powers[j];
  const auto& a2 = powers[2];
  auto c1 = scan2(h.size(), [&](Elem x, Elem y) {
    auto [u, v] = h(ai(x), aj(y));
    return h(ai2(x), aj(y)) == ElemPair{u, a2(v)};
  });
  auto c2 = scan2(h.size(), [&](Elem x, Elem y) { return h.lam(ai2(x), aj(y)) == h.lam(ai(x), aj(y)); });
  CheckReport report;
  if (c1)
    report = CheckReport::fail("shift-identity", "clause-1", *c1);
  else if (c2)
    report = CheckReport::fail("shift-identity", "clause-2", *c2);
  else
    report = CheckReport::pass("shift-identity");
  report.routes = {{"clause-1", c1 ? Verdict::fails : Verdict::holds},
                   {"clause-2", c2 ? Verdict::fails : Verdict::holds}};
  return report;
}

QuadraticImageRestriction restrict_to_image(const HomQuadraticSet& h) {
  const auto labels = image(h.alpha());
  const std::size_t k = labels.size();
  constexpr Elem absent = ~Elem{0};
  std::vector<Elem> relabel(h.size(), absent);
  for (Elem i = 0; i < k; ++i) relabel[labels[i]] = i;
  auto lookup = [&](Elem v) {
    if (relabel[v] == absent) throw DomainError("restrict_to_image: alpha(X) is not closed under r");
    return relabel[v];
  };
  auto lam = SquareTable::tabulate(k, [&](Elem a, Elem b) { return lookup(h.lam(labels[a], labels[b])); });
  auto rho = SquareTable::tabulate(k, [&](Elem b, Elem a) { return lookup(h.rho(labels[b], labels[a])); });
  std::vector<Elem> alpha(k);
  for (Elem a = 0; a < k; ++a) alpha[a] = lookup(h.alpha()(labels[a]));
  return {HomQuadraticSet(QuadraticSet(std::move(lam), std::move(rho)), FiniteMap(std::move(alpha))),
          labels};
}

bool alpha_square_shift(const HomQuadraticSet& h) {
  const auto& A = h.alpha();
  return !scan2(h.size(), [&](Elem x, Elem y) {
    auto [u, v] = h(x, y);
    return h(A(A(x)), y) == ElemPair{u, A(A(v))};
  });
}

bool alpha_cube_shift(const HomQuadraticSet& h) {
  const auto& A = h.alpha();
  auto cube = [&](Elem v) { return A(A(A(v))); };
  return !scan2(h.size(), [&](Elem x, Elem y) {
    auto [u, v] = h(x, y);
    return h(cube(x), A(y)) == ElemPair{A(u), cube(v)};
  });
}

ImageTwistFacts image_twist_facts(const HomQuadraticSet& h) {
  require_lndi_compatible(h, "image_twist_facts");
  const auto twisted = to_hom_quadratic_set(twist(to_hom_quasigroup(h)));
  ImageTwistFacts f;
  f.h_is_hybe = is_hybe_solution(h).holds();
  const auto twisted_image = restrict_to_image(twisted).restricted;
  f.twisted_image_ybe = is_ybe_solution(twisted_image.base()).holds();
  f.twisted_image_shift = alpha_square_shift(twisted_image);
  f.twisted_is_hybe = is_hybe_solution(twisted).holds();
  const auto original_image = restrict_to_image(h).restricted;
  f.original_image_ybe = is_ybe_solution(original_image.base()).holds();
  f.original_image_shift = alpha_square_shift(original_image);
  f.original_ybe = is_ybe_solution(h.base()).holds();
  f.original_cube_shift = alpha_cube_shift(h);
  return f;
}

}  // namespace hombax
