#include "hombax/constructions.hpp"

#include "scan.hpp"

namespace hombax {

namespace {

Elem reduce(long long v, Elem m) {
  const long long r = v % static_cast<long long>(m);
  return static_cast<Elem>(r < 0 ? r + m : r);
}

void require_compatible(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus() || a.dim() != b.dim())
    throw DomainError("ModMatrix: modulus or dimension mismatch");
}

}  // namespace

ModMatrix::ModMatrix(Elem m, const std::vector<std::vector<long long>>& rows)
    : m_(m), d_(rows.size()) {
  if (m < 2) throw DomainError("ModMatrix: modulus must be at least 2");
  if (d_ == 0) throw DomainError("ModMatrix: dimension must be at least 1");
  a_.reserve(d_ * d_);
  for (const auto& r : rows) {
    if (r.size() != d_) throw DomainError("ModMatrix: matrix must be square");
    for (long long v : r) a_.push_back(reduce(v, m));
  }
}

ModMatrix ModMatrix::identity(Elem m, std::size_t d) {
  std::vector<std::vector<long long>> rows(d, std::vector<long long>(d, 0));
  for (std::size_t i = 0; i < d; ++i) rows[i][i] = 1;
  return ModMatrix(m, rows);
}

ModMatrix ModMatrix::zero(Elem m, std::size_t d) {
  return ModMatrix(m, std::vector<std::vector<long long>>(d, std::vector<long long>(d, 0)));
}

std::vector<std::vector<long long>> ModMatrix::rows() const {
  std::vector<std::vector<long long>> out(d_, std::vector<long long>(d_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

std::vector<Elem> ModMatrix::apply(const std::vector<Elem>& v) const {
  std::vector<Elem> out(d_, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    unsigned long long acc = 0;
    for (std::size_t j = 0; j < d_; ++j) acc += static_cast<unsigned long long>((*this)(i, j)) * v[j];
    out[i] = static_cast<Elem>(acc % m_);
  }
  return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  require_compatible(a, b);
  const auto d = a.dim();
  std::vector<std::vector<long long>> rows(d, std::vector<long long>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) rows[i][j] += static_cast<long long>(a(i, k)) * b(k, j);
  return ModMatrix(a.modulus(), rows);
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
  require_compatible(a, b);
  auto rows = a.rows();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) rows[i][j] += b(i, j);
  return ModMatrix(a.modulus(), rows);
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
  require_compatible(a, b);
  auto rows = a.rows();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) rows[i][j] -= b(i, j);
  return ModMatrix(a.modulus(), rows);
}

std::size_t linear_carrier_size(const LinearSpec& spec) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < spec.d; ++k) n *= spec.m;
  return n;
}

std::vector<Elem> decode_vector(Elem index, Elem m, std::size_t d) {
  std::vector<Elem> v(d);
  for (std::size_t k = 0; k < d; ++k) {
    v[k] = index % m;
    index /= m;
  }
  return v;
}

Elem encode_vector(const std::vector<Elem>& v, Elem m) {
  Elem index = 0;
  for (std::size_t k = v.size(); k-- > 0;) index = index * m + v[k];
  return index;
}

LinearStructure linear_structure(const LinearSpec& spec) {
  for (const ModMatrix* mat : {&spec.phi, &spec.psi, &spec.alpha})
    if (mat->modulus() != spec.m || mat->dim() != spec.d)
      throw DomainError("linear_structure: matrix modulus or dimension does not match the spec");
  const std::size_t n = linear_carrier_size(spec);
  if (n > 4096) throw DomainError("linear_structure: carrier m^d exceeds 4096 elements");

  std::vector<Elem> phi(n), psi(n), alpha(n);
  for (Elem i = 0; i < n; ++i) {
    const auto v = decode_vector(i, spec.m, spec.d);
    phi[i] = encode_vector(spec.phi.apply(v), spec.m);
    psi[i] = encode_vector(spec.psi.apply(v), spec.m);
    alpha[i] = encode_vector(spec.alpha.apply(v), spec.m);
  }
  FiniteMap psi_map(psi);
  if (auto c = psi_map.collision())
    throw DomainError("linear_structure: psi is singular mod " + std::to_string(spec.m) +
                      " (psi(" + std::to_string(c->first) + ") == psi(" +
                      std::to_string(c->second) + "))");

  auto add = [&](Elem a, Elem b) {
    auto va = decode_vector(a, spec.m, spec.d);
    auto vb = decode_vector(b, spec.m, spec.d);
    for (std::size_t k = 0; k < spec.d; ++k) va[k] = (va[k] + vb[k]) % spec.m;
    return encode_vector(va, spec.m);
  };
  auto op = SquareTable::tabulate(n, [&](Elem x, Elem y) { return add(phi[x], psi[y]); });
  auto structure = HomQuasigroup::unchecked(LeftQuasigroup(std::move(op)), FiniteMap(alpha));

  const auto& P = spec.phi;
  const auto& Q = spec.psi;
  const auto& A = spec.alpha;
  auto matrix_clause = [](bool ok) { return ok ? detail::Witness{} : detail::Witness{std::vector<Elem>{}}; };
  auto report = detail::run_clauses(
      "linear-hom-cycle-set",
      {{"psi-bijective", [&] { return matrix_clause(true); }},
       {"alpha-commutes", [&] { return matrix_clause(P * A == A * P && Q * A == A * Q); }},
       {"phi-alpha-square", [&] { return matrix_clause(P * A * A == P); }},
       {"phi-square", [&] { return matrix_clause(P * P == P * Q * A - Q * P * A); }}});
  const bool table = is_endomorphism(structure).holds() && is_hom_cycle_set(structure).holds();
  report.routes = {{"matrix", report.verdict}, {"table", table ? Verdict::holds : Verdict::fails}};
  return {std::move(structure), std::move(report)};
}

HomQuadraticSet trivial_solution(std::size_t n, const FiniteMap& alpha) {
  if (alpha.size() != n) throw DomainError("trivial_solution: alpha size differs from n");
  auto lam = SquareTable::tabulate(n, [](Elem, Elem y) { return y; });
  auto rho = SquareTable::tabulate(n, [](Elem, Elem x) { return x; });
  return HomQuadraticSet(QuadraticSet(std::move(lam), std::move(rho)), alpha);
}

HomQuadraticSet permutation_solution(const FiniteMap& f, const FiniteMap& g, const FiniteMap& alpha) {
  const auto n = f.size();
  if (g.size() != n || alpha.size() != n)
    throw DomainError("permutation_solution: f, g and alpha must have equal sizes");
  auto lam = SquareTable::tabulate(n, [&](Elem, Elem y) { return f(y); });
  auto rho = SquareTable::tabulate(n, [&](Elem, Elem x) { return g(x); });
  HomQuadraticSet h(QuadraticSet(std::move(lam), std::move(rho)), alpha);

  // Pairwise commuting is sufficient. Expanding the braid relation gives the
  // exact condition a f = f a, a g = g a, f g a = g f a, which only reduces
  // to f g = g f when a is onto.
  const bool hybe = is_hybe_solution(h).holds();
  const bool commuting = commute(alpha, f) && commute(alpha, g) && commute(f, g);
  const bool exact = commute(alpha, f) && commute(alpha, g) &&
                     compose(f, compose(g, alpha)) == compose(g, compose(f, alpha));
  if ((commuting && !hybe) || hybe != exact)
    throw TheoremViolation("permutation_solution: HYBE verdict differs from the commutation conditions");
  const bool inverse_pair = f.is_bijective() && compose(f, g).is_identity();
  const bool lndi = is_left_nondegenerate(h.base()).holds() && is_involutive(h.base()).holds();
  if (lndi != inverse_pair)
    throw TheoremViolation("permutation_solution: left-nd-involutive differs from g = f^{-1}");
  return h;
}

HomQuadraticSet theta_solution(const SquareTable& lam_rows) {
  const auto n = lam_rows.size();
  for (Elem x = 0; x < n; ++x) {
    if (!lam_rows.row_map(x).is_bijective())
      throw DomainError("theta_solution: lam row " + std::to_string(x) + " is not a permutation");
    if (lam_rows(x, 0) != 0)
      throw DomainError("theta_solution: lam row " + std::to_string(x) + " does not fix 0");
  }
  QuadraticSet lam_only(lam_rows, lam_rows);
  const auto inv = *lam_only.lam_inverse();
  auto rho = SquareTable::tabulate(n, [&](Elem y, Elem x) { return inv(lam_rows(x, y), x); });
  return HomQuadraticSet(QuadraticSet(lam_rows, std::move(rho)), FiniteMap::constant(n, 0));
}

HomQuasigroup right_zero_hom_cycle_set(std::size_t n, const FiniteMap& alpha) {
  if (alpha.size() != n) throw DomainError("right_zero_hom_cycle_set: alpha size differs from n");
  return HomQuasigroup(LeftQuasigroup(SquareTable::tabulate(n, [](Elem, Elem y) { return y; })), alpha);
}

HomQuasigroup example_4order() {
  auto op = SquareTable::from_rows({{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 3, 2, 1}, {0, 2, 1, 3}});
  return HomQuasigroup(LeftQuasigroup(std::move(op)), FiniteMap::constant(4, 0));
}

MatrixExample example_matrices(Elem p) {
  return {ModMatrix(p, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
          ModMatrix(p, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}),
          ModMatrix(p, {{-1, 0, 1}, {0, -1, 0}, {0, 0, -1}})};
}

std::pair<HomQuasigroup, HomQuasigroup> example_matrix(Elem p) {
  bool prime = p >= 2;
  for (Elem k = 2; k * k <= p && prime; ++k) prime = p % k != 0;
  if (!prime || p == 2) throw DomainError("example_matrix: p must be an odd prime");
  auto [phi, psi, alpha] = example_matrices(p);
  auto built = linear_structure(LinearSpec{p, 3, phi, psi, alpha});
  HomQuasigroup original(built.structure.base(), built.structure.alpha());
  auto twisted = twist(original);
  return {std::move(original), std::move(twisted)};
}

}  // namespace hombax
