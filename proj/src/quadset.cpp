#include "hombax/quadset.hpp"

#include <array>

#include "scan.hpp"

namespace hombax {

using detail::NamedClause;
using detail::run_clauses;
using detail::scan1;
using detail::scan2;
using detail::scan3;
using detail::Witness;

QuadraticSet::QuadraticSet(SquareTable lam, SquareTable rho)
    : lam_(std::move(lam)), rho_(std::move(rho)) {
  if (lam_.size() != rho_.size()) throw DomainError("QuadraticSet: lam and rho sizes differ");
}

QuadraticSet QuadraticSet::from_pair_map(const PairMap& r) {
  const std::size_t n = r.size();
  auto lam = SquareTable::tabulate(n, [&](Elem x, Elem y) { return r(x, y).first; });
  auto rho = SquareTable::tabulate(n, [&](Elem y, Elem x) { return r(x, y).second; });
  return QuadraticSet(std::move(lam), std::move(rho));
}

PairMap QuadraticSet::as_pair_map() const {
  return PairMap::tabulate(size(), [&](Elem x, Elem y) { return (*this)(x, y); });
}

std::optional<SquareTable> QuadraticSet::lam_inverse() const {
  const std::size_t n = size();
  std::vector<Elem> inv(n * n, 0);
  std::vector<bool> hit(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), false);
    for (Elem y = 0; y < n; ++y) {
      const Elem v = lam(x, y);
      if (hit[v]) return std::nullopt;
      hit[v] = true;
      inv[x * n + v] = y;
    }
  }
  return SquareTable(n, std::move(inv));
}

HomQuadraticSet::HomQuadraticSet(QuadraticSet base, FiniteMap alpha)
    : base_(std::move(base)), alpha_(std::move(alpha)) {
  if (alpha_.size() != base_.size())
    throw DomainError("HomQuadraticSet: alpha size differs from carrier size");
}

ElemPair r_apply(const QuadraticSet& q, Elem x, Elem y) {
  if (x >= q.size() || y >= q.size()) throw DomainError("r_apply: element out of range");
  return q(x, y);
}

CheckReport is_hom_compatible(const HomQuadraticSet& h) {
  const auto n = h.size();
  const auto& a = h.alpha();
  auto report = run_clauses(
      "hom-compatible",
      {{"alpha-lam", [&] {
          return scan2(n, [&](Elem x, Elem y) { return a(h.lam(x, y)) == h.lam(a(x), a(y)); });
        }},
       {"alpha-rho", [&] {
          return scan2(n, [&](Elem x, Elem y) { return a(h.rho(x, y)) == h.rho(a(x), a(y)); });
        }}});
  Witness pairs = scan2(n, [&](Elem x, Elem y) {
    auto [u, v] = h(x, y);
    return h(a(x), a(y)) == ElemPair{a(u), a(v)};
  });
  report.routes = {{"components", report.verdict},
                   {"pairs", pairs ? Verdict::fails : Verdict::holds}};
  return report;
}

CheckReport is_involutive(const QuadraticSet& q) {
  const auto n = q.size();
  auto report = run_clauses("involutive", {{"r-squared", [&] {
                                              return scan2(n, [&](Elem x, Elem y) {
                                                auto [u, v] = q(x, y);
                                                return q(u, v) == ElemPair{x, y};
                                              });
                                            }}});
  auto components = run_clauses(
      "involutive",
      {{"lam-identity", [&] {
          return scan2(n, [&](Elem x, Elem y) { return q.lam(q.lam(x, y), q.rho(y, x)) == x; });
        }},
       {"rho-identity", [&] {
          return scan2(n, [&](Elem x, Elem y) { return q.rho(q.rho(x, y), q.lam(y, x)) == x; });
        }}});
  report.routes = {{"r-squared", report.verdict}, {"components", components.verdict}};
  return report;
}

namespace {

CheckReport rows_bijective(const char* name, const char* clause, const SquareTable& t) {
  for (Elem x = 0; x < t.size(); ++x)
    if (auto c = t.row_map(x).collision())
      return CheckReport::fail(name, clause, {x, c->first, c->second});
  return CheckReport::pass(name);
}

}  // namespace

CheckReport is_left_nondegenerate(const QuadraticSet& q) {
  return rows_bijective("left-nondegenerate", "lam-bijective", q.lam_table());
}

CheckReport is_right_nondegenerate(const QuadraticSet& q) {
  return rows_bijective("right-nondegenerate", "rho-bijective", q.rho_table());
}

CheckReport is_nondegenerate(const QuadraticSet& q) {
  auto left = is_left_nondegenerate(q);
  if (!left.holds()) {
    left.name = "nondegenerate";
    return left;
  }
  auto right = is_right_nondegenerate(q);
  right.name = "nondegenerate";
  return right;
}

CheckReport involutivity_rho_formula(const QuadraticSet& q) {
  const char* name = "involutivity-rho-formula";
  auto left = is_left_nondegenerate(q);
  if (!left.holds()) return CheckReport::inapplicable(name, "lam-bijective", left.witness);
  const auto inv = *q.lam_inverse();
  auto report = run_clauses(name, {{"rho-formula", [&] {
                                      return scan2(q.size(), [&](Elem x, Elem y) {
                                        return q.rho(y, x) == inv(q.lam(x, y), x);
                                      });
                                    }}});
  report.routes = {{"rho-formula", report.verdict},
                   {"left-nd-and-involutive", is_involutive(q).verdict}};
  return report;
}

CheckReport is_ybe_solution(const QuadraticSet& q) {
  const auto n = q.size();
  auto braid = run_clauses("ybe", {{"braid", [&] {
                                      return scan3(n, [&](Elem x, Elem y, Elem z) {
                                        // (r x id)(id x r)(r x id)
                                        auto [a, b] = q(x, y);
                                        auto [d, e] = q(b, z);
                                        auto [f, g] = q(a, d);
                                        std::array<Elem, 3> lhs{f, g, e};
                                        // (id x r)(r x id)(id x r)
                                        auto [b2, c2] = q(y, z);
                                        auto [d2, e2] = q(x, b2);
                                        auto [f2, g2] = q(e2, c2);
                                        std::array<Elem, 3> rhs{d2, f2, g2};
                                        return lhs == rhs;
                                      });
                                    }}});
  auto L = [&](Elem x, Elem y) { return q.lam(x, y); };
  auto R = [&](Elem y, Elem x) { return q.rho(y, x); };
  auto components = run_clauses(
      "ybe",
      {{"c1", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem z) {
            return L(L(x, y), L(R(y, x), z)) == L(x, L(y, z));
          });
        }},
       {"c2", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem z) {
            return R(L(R(y, x), z), L(x, y)) == L(R(L(y, z), x), R(z, y));
          });
        }},
       {"c3", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem z) {
            return R(z, R(y, x)) == R(R(z, y), R(L(y, z), x));
          });
        }}});
  braid.routes = {{"braid", braid.verdict}, {"components", components.verdict}};
  return braid;
}

CheckReport is_hybe_solution(const HomQuadraticSet& h) {
  const auto n = h.size();
  const auto& A = h.alpha();
  auto L = [&](Elem x, Elem y) { return h.lam(x, y); };
  auto R = [&](Elem y, Elem x) { return h.rho(y, x); };

  auto direct = run_clauses(
      "hybe",
      {{"hom-compatibility", [&] {
          return scan2(n, [&](Elem x, Elem y) {
            auto [u, v] = h(x, y);
            return h(A(x), A(y)) == ElemPair{A(u), A(v)};
          });
        }},
       {"braid", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem z) {
            // (a x r)(r x a)(a x r)
            auto [b, c] = h(y, z);
            auto [d, e] = h(A(x), b);
            auto [g, k] = h(e, A(c));
            std::array<Elem, 3> lhs{A(d), g, k};
            // (r x a)(a x r)(r x a)
            auto [a2, b2] = h(x, y);
            auto [e2, f2] = h(b2, A(z));
            auto [g2, k2] = h(A(a2), e2);
            std::array<Elem, 3> rhs{g2, k2, A(f2)};
            return lhs == rhs;
          });
        }}});

  auto components = run_clauses(
      "hybe",
      {{"c1", [&] {
          auto w = scan2(n, [&](Elem x, Elem y) { return A(L(x, y)) == L(A(x), A(y)); });
          if (w) return w;
          return scan2(n, [&](Elem x, Elem y) { return A(R(x, y)) == R(A(x), A(y)); });
        }},
       {"c2", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem z) {
            return A(L(A(x), L(y, z))) == L(A(L(x, y)), L(R(y, x), A(z)));
          });
        }},
       {"c3", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem z) {
            return R(L(R(y, x), A(z)), A(L(x, y))) == L(R(L(y, z), A(x)), A(R(z, y)));
          });
        }},
       {"c4", [&] {
          return scan3(n, [&](Elem x, Elem y, Elem w) {
            return A(R(A(y), R(x, w))) == R(A(R(y, x)), R(L(x, y), A(w)));
          });
        }}});
  direct.routes = {{"braid", direct.verdict}, {"components", components.verdict}};
  return direct;
}

namespace {

/// c1-c3 shared by both characterizations; returns the lam-inverse table when
/// they hold.
std::optional<SquareTable> lndi_common(const HomQuadraticSet& h, const char* name,
                                       CheckReport& out) {
  const auto n = h.size();
  const auto& A = h.alpha();
  auto inv = h.base().lam_inverse();
  if (!inv) {
    auto left = is_left_nondegenerate(h.base());
    out = CheckReport::fail(name, "c1", left.witness);
    return std::nullopt;
  }
  out = run_clauses(name, {{"c2", [&] {
                              return scan2(n, [&](Elem x, Elem y) {
                                return h.rho(y, x) == (*inv)(h.lam(x, y), x);
                              });
                            }},
                           {"c3", [&] {
                              return scan2(n, [&](Elem x, Elem z) {
                                return A(h.lam(x, z)) == h.lam(A(x), A(z));
                              });
                            }}});
  if (!out.holds()) return std::nullopt;
  return inv;
}

Witness lndi_c5(const HomQuadraticSet& h, const SquareTable& Li) {
  const auto& A = h.alpha();
  auto L = [&](Elem x, Elem y) { return h.lam(x, y); };
  return scan3(h.size(), [&](Elem x, Elem y, Elem z) {
    return A(L(x, L(Li(A(x), y), z))) == L(A(y), L(Li(y, A(x)), A(z)));
  });
}

}  // namespace

CheckReport is_lndi_hybe_six_conditions(const HomQuadraticSet& h) {
  const char* name = "lndi-hybe-six";
  CheckReport report;
  auto inv = lndi_common(h, name, report);
  if (!inv) return report;
  const auto& Li = *inv;
  const auto& A = h.alpha();
  auto L = [&](Elem x, Elem y) { return h.lam(x, y); };
  const auto n = h.size();
  return run_clauses(
      name, {{"c4", [&] {
                return scan3(n, [&](Elem x, Elem y, Elem z) {
                  return A(L(A(x), L(Li(x, y), z))) == L(A(y), L(Li(y, x), A(z)));
                });
              }},
             {"c5", [&] { return lndi_c5(h, Li); }},
             {"c6", [&] {
                return scan3(n, [&](Elem x, Elem y, Elem z) {
                  return A(L(x, L(Li(A(x), A(y)), z))) == L(y, L(Li(A(y), A(x)), A(z)));
                });
              }}});
}

CheckReport is_lndi_hybe_five_conditions(const HomQuadraticSet& h) {
  const char* name = "lndi-hybe-five";
  CheckReport report;
  auto inv = lndi_common(h, name, report);
  if (!inv) return report;
  const auto& A = h.alpha();
  return run_clauses(name, {{"c4", [&] {
                               return scan2(h.size(), [&](Elem x, Elem z) {
                                 return h.lam(x, A(z)) == A(h.lam(A(x), z));
                               });
                             }},
                            {"c5", [&] { return lndi_c5(h, *inv); }}});
}

CheckReport alpha_square_identities(const HomQuadraticSet& h) {
  const char* name = "alpha-square-identities";
  auto pre = is_lndi_hybe_five_conditions(h);
  if (!pre.holds()) return CheckReport::inapplicable(name, "precondition:" + pre.clause, pre.witness);
  const auto& A = h.alpha();
  return run_clauses(name, {{"lam-alpha", [&] {
                               return scan2(h.size(), [&](Elem x, Elem z) {
                                 return h.lam(x, A(z)) == h.lam(A(A(x)), A(z));
                               });
                             }},
                            {"alpha-square-commutes", [&] {
                               return scan2(h.size(), [&](Elem x, Elem z) {
                                 return h.lam(x, A(A(z))) == A(A(h.lam(x, z)));
                               });
                             }}});
}

CheckReport is_morphism(std::span<const Elem> f, const HomQuadraticSet& from,
                        const HomQuadraticSet& to) {
  if (f.size() != from.size()) throw DomainError("is_morphism: map size differs from source");
  for (Elem v : f)
    if (v >= to.size()) throw DomainError("is_morphism: map value outside target carrier");
  const auto n = from.size();
  const auto& A = from.alpha();
  const auto& B = to.alpha();
  auto alpha_clause = [&] { return scan1(n, [&](Elem x) { return f[A(x)] == B(f[x]); }); };
  auto report = run_clauses(
      "morphism",
      {{"lam", [&] {
          return scan2(n, [&](Elem x, Elem y) { return f[from.lam(x, y)] == to.lam(f[x], f[y]); });
        }},
       {"rho", [&] {
          return scan2(n, [&](Elem x, Elem y) { return f[from.rho(x, y)] == to.rho(f[x], f[y]); });
        }},
       {"alpha", alpha_clause}});

  auto lndi = [](const HomQuadraticSet& h) {
    return is_left_nondegenerate(h.base()).holds() && is_involutive(h.base()).holds();
  };
  if (lndi(from) && lndi(to)) {
    const auto inv_from = *from.base().lam_inverse();
    const auto inv_to = *to.base().lam_inverse();
    auto lam_only = run_clauses(
        "morphism", {{"lam", [&] {
                        return scan2(n, [&](Elem x, Elem y) {
                          return f[from.lam(x, y)] == to.lam(f[x], f[y]);
                        });
                      }},
                     {"alpha", alpha_clause}});
    auto lam_inverse = run_clauses(
        "morphism", {{"lam-inverse", [&] {
                        return scan2(n, [&](Elem x, Elem y) {
                          return f[inv_from(x, y)] == inv_to(f[x], f[y]);
                        });
                      }},
                     {"alpha", alpha_clause}});
    report.routes = {{"full", report.verdict},
                     {"lam-only", lam_only.verdict},
                     {"lam-inverse", lam_inverse.verdict}};
  }
  return report;
}

}  // namespace hombax
