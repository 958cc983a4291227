#include "hombax/quasigroup.hpp"

#include "scan.hpp"

namespace hombax {

using detail::run_clauses;
using detail::scan2;
using detail::scan3;

namespace {

SquareTable left_division(const SquareTable& op) {
  const std::size_t n = op.size();
  std::vector<Elem> inv(n * n);
  std::vector<bool> hit(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (Elem y = 0; y < n; ++y) {
      const Elem v = op(x, y);
      if (hit[v])
        throw DomainError("LeftQuasigroup: row " + std::to_string(x) +
                          " is not a permutation (value " + std::to_string(v) + " repeats)");
      hit[v] = true;
      inv[x * n + v] = y;
    }
  }
  return SquareTable(n, std::move(inv));
}

}  // namespace

LeftQuasigroup::LeftQuasigroup(SquareTable op) : op_(std::move(op)), ldiv_(left_division(op_)) {}

HomQuasigroup::HomQuasigroup(LeftQuasigroup base, FiniteMap alpha, Unchecked)
    : base_(std::move(base)), alpha_(std::move(alpha)) {
  if (alpha_.size() != base_.size())
    throw DomainError("HomQuasigroup: alpha size differs from carrier size");
}

HomQuasigroup::HomQuasigroup(LeftQuasigroup base, FiniteMap alpha)
    : HomQuasigroup(std::move(base), std::move(alpha), Unchecked{}) {
  auto endo = is_endomorphism(alpha_, base_);
  if (!endo.holds())
    throw DomainError("HomQuasigroup: alpha is not an endomorphism at (" +
                      std::to_string(endo.witness[0]) + ", " + std::to_string(endo.witness[1]) +
                      ")");
}

HomQuasigroup HomQuasigroup::unchecked(LeftQuasigroup base, FiniteMap alpha) {
  return HomQuasigroup(std::move(base), std::move(alpha), Unchecked{});
}

CheckReport is_endomorphism(const FiniteMap& alpha, const LeftQuasigroup& x) {
  if (alpha.size() != x.size()) throw DomainError("is_endomorphism: size mismatch");
  return run_clauses("endomorphism", {{"alpha-multiplicative", [&] {
                                         return scan2(x.size(), [&](Elem a, Elem b) {
                                           return alpha(x(a, b)) == x(alpha(a), alpha(b));
                                         });
                                       }}});
}

CheckReport is_endomorphism(const HomQuasigroup& h) { return is_endomorphism(h.alpha(), h.base()); }

CheckReport is_cycle_set(const LeftQuasigroup& x) {
  return run_clauses("cycle-set", {{"cycle-identity", [&] {
                                      return scan3(x.size(), [&](Elem a, Elem b, Elem c) {
                                        return x(x(a, b), x(a, c)) == x(x(b, a), x(b, c));
                                      });
                                    }}});
}

namespace {

detail::Witness axiom_witness(const HomQuasigroup& h, int which) {
  const auto& A = h.alpha();
  const auto& m = h.base();
  switch (which) {
    case 1:
      return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
        return A(m(m(x, y), m(A(x), z))) == m(m(y, x), m(A(y), A(z)));
      });
    case 2:
      return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
        return A(m(m(A(x), y), m(x, z))) == m(m(y, A(x)), m(A(y), A(z)));
      });
    case 3:
      return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
        return A(m(m(A(x), A(y)), m(x, z))) == m(m(A(y), A(x)), m(y, A(z)));
      });
    default:
      throw DomainError("hom_cycle_axiom: axiom index must be 1, 2 or 3");
  }
}

const char* const kAxiomLabels[] = {"axiom-1", "axiom-2", "axiom-3"};

}  // namespace

CheckReport hom_cycle_axiom(const HomQuasigroup& h, int which) {
  auto w = axiom_witness(h, which);
  if (w) return CheckReport::fail("hom-cycle-axiom", kAxiomLabels[which - 1], *w);
  return CheckReport::pass("hom-cycle-axiom");
}

CheckReport alpha_square_left_identity(const HomQuasigroup& h) {
  const auto& A = h.alpha();
  return run_clauses("alpha-square-left", {{"alpha-square-left", [&] {
                                              return scan2(h.size(), [&](Elem x, Elem y) {
                                                return h(A(A(x)), A(y)) == h(x, A(y));
                                              });
                                            }}});
}

CheckReport derived_shift_identity(const HomQuasigroup& h) {
  const auto& A = h.alpha();
  return run_clauses("derived-shift", {{"derived-shift", [&] {
                                          return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
                                            return h(h(x, A(A(y))), A(z)) == h(h(x, y), A(z));
                                          });
                                        }}});
}

CheckReport is_hom_cycle_set(const HomQuasigroup& h) {
  auto report = run_clauses("hom-cycle-set", {{kAxiomLabels[0], [&] { return axiom_witness(h, 1); }},
                                              {kAxiomLabels[1], [&] { return axiom_witness(h, 2); }},
                                              {kAxiomLabels[2], [&] { return axiom_witness(h, 3); }}});
  const auto& A = h.alpha();
  auto two = run_clauses(
      "hom-cycle-set",
      {{"alpha-square-left", [&] {
          return scan2(h.size(), [&](Elem x, Elem y) { return h(A(A(x)), A(y)) == h(x, A(y)); });
        }},
       {"mixed", [&] {
          return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
            return h(h(x, A(y)), h(A(x), A(z))) == h(h(y, A(x)), h(A(y), A(z)));
          });
        }}});
  report.routes = {{"axioms", report.verdict}, {"two-equations", two.verdict}};
  return report;
}

CheckReport is_im_cycle_set(const HomQuasigroup& h) {
  const auto& A = h.alpha();
  auto cube = [&] {
    return scan2(h.size(), [&](Elem x, Elem y) { return h(A(A(A(x))), A(y)) == h(A(x), A(y)); });
  };
  auto report = run_clauses(
      "im-cycle-set",
      {{"alpha-cube", cube},
       {"image-cycle", [&] {
          return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
            return h(h(A(x), A(y)), h(A(x), A(z))) == h(h(A(y), A(x)), h(A(y), A(z)));
          });
        }}});
  Verdict image_route = Verdict::fails;
  try {
    auto sub = restrict_to_image(h);
    const bool cube_holds = !cube().has_value();
    if (cube_holds && is_cycle_set(sub.restricted.base()).holds()) image_route = Verdict::holds;
  } catch (const DomainError&) {
    // alpha(X) is not closed under the operation
  }
  report.routes = {{"identities", report.verdict}, {"image", image_route}};
  return report;
}

PairMap delta_map(const LeftQuasigroup& x) {
  return PairMap::tabulate(x.size(), [&](Elem a, Elem b) { return ElemPair{x(a, b), x(b, a)}; });
}

CheckReport is_delta_bijective(const LeftQuasigroup& x) {
  if (auto c = delta_map(x).collision())
    return CheckReport::fail("delta-bijective", "delta-collision",
                             {(*c)[2], (*c)[3], (*c)[4], (*c)[5]});
  return CheckReport::pass("delta-bijective");
}

LeftQuasigroup dual_op(const LeftQuasigroup& x) {
  const std::size_t n = x.size();
  const PairMap delta = delta_map(x);
  if (auto c = delta.collision())
    throw DegenerateError("dual_op: Delta(" + std::to_string((*c)[2]) + "," +
                              std::to_string((*c)[3]) + ") = Delta(" + std::to_string((*c)[4]) +
                              "," + std::to_string((*c)[5]) + ")",
                          {(*c)[2], (*c)[3], (*c)[4], (*c)[5]});
  // Delta(a, b) = (ab, ba) and Delta^{-1}(u, v) = (u o v, v o u), so (ab) o (ba) = a.
  std::vector<Elem> cells(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) cells[x(a, b) * n + x(b, a)] = a;
  SquareTable table(n, std::move(cells));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (x(table(a, b), table(b, a)) != a)
        throw std::logic_error("dual_op: (x o y)(y o x) = x failed");
  return LeftQuasigroup(std::move(table));
}

FiniteMap square_map(const LeftQuasigroup& x) {
  std::vector<Elem> q(x.size());
  for (Elem a = 0; a < q.size(); ++a) q[a] = x(a, a);
  return FiniteMap(std::move(q));
}

FiniteMap twisted_square_map(const HomQuasigroup& h) {
  std::vector<Elem> q(h.size());
  for (Elem a = 0; a < q.size(); ++a) q[a] = h(h.alpha()(a), a);
  return FiniteMap(std::move(q));
}

bool is_square_free(const LeftQuasigroup& x) { return square_map(x).is_identity(); }

ImageRestriction restrict_to_image(const HomQuasigroup& h) {
  const auto labels = image(h.alpha());
  const std::size_t k = labels.size();
  constexpr Elem absent = ~Elem{0};
  std::vector<Elem> relabel(h.size(), absent);
  for (Elem i = 0; i < k; ++i) relabel[labels[i]] = i;
  std::vector<Elem> cells(k * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) {
      const Elem v = relabel[h(labels[i], labels[j])];
      if (v == absent) throw DomainError("restrict_to_image: alpha(X) is not closed");
      cells[i * k + j] = v;
    }
  std::vector<Elem> alpha(k);
  for (Elem i = 0; i < k; ++i) alpha[i] = relabel[h.alpha()(labels[i])];
  return {HomQuasigroup::unchecked(LeftQuasigroup(SquareTable(k, std::move(cells))),
                                   FiniteMap(std::move(alpha))),
          labels};
}

}  // namespace hombax
