#pragma once

// Brute-force reference implementations on raw vectors. Nothing here calls the
// library's predicates; tests compare the two.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Row = std::vector<int>;
using Table = std::vector<Row>;
using Map = std::vector<int>;

inline std::vector<Row> permutations(int n) {
  std::vector<Row> out;
  Row p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Map> all_maps(int n) {
  std::vector<Map> out;
  Map a(n, 0);
  while (true) {
    out.push_back(a);
    int i = 0;
    while (i < n && ++a[i] == n) a[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Every n x n table whose rows are permutations.
inline std::vector<Table> left_quasigroups(int n) {
  const auto perms = permutations(n);
  std::vector<Table> out;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Table t;
    for (int x = 0; x < n; ++x) t.push_back(perms[idx[x]]);
    out.push_back(t);
    int i = n - 1;
    while (i >= 0 && ++idx[i] == perms.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

inline bool cycle_set(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][t[x][z]] != t[t[y][x]][t[y][z]]) return false;
  return true;
}

inline bool endomorphism(const Table& t, const Map& a) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a[t[x][y]] != t[a[x]][a[y]]) return false;
  return true;
}

inline bool hom_cycle_set(const Table& t, const Map& a) {
  const int n = static_cast<int>(t.size());
  auto m = [&](int x, int y) { return t[x][y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (a[m(m(x, y), m(a[x], z))] != m(m(y, x), m(a[y], a[z]))) return false;
        if (a[m(m(a[x], y), m(x, z))] != m(m(y, a[x]), m(a[y], a[z]))) return false;
        if (a[m(m(a[x], a[y]), m(x, z))] != m(m(a[y], a[x]), m(y, a[z]))) return false;
      }
  return true;
}

inline bool delta_bijective(const Table& t) {
  std::set<std::pair<int, int>> seen;
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) seen.insert({t[x][y], t[y][x]});
  return static_cast<int>(seen.size()) == n * n;
}

inline Table twist(const Table& t, const Map& a) {
  Table out = t;
  for (std::size_t x = 0; x < t.size(); ++x) out[x] = t[a[x]];
  return out;
}

/// Hom-quadratic set as raw maps: lam[x][y] = lam_x(y), rho[y][x] = rho_y(x).
struct Solution {
  Table lam, rho;
  Map alpha;
  std::pair<int, int> r(int x, int y) const { return {lam[x][y], rho[y][x]}; }
  bool operator==(const Solution&) const = default;
  auto operator<=>(const Solution&) const = default;
};

/// lam_x = sigma_x^{-1}, rho_y(x) = sigma_x^{-1}(y) . x
inline Solution from_quasigroup(const Table& t, const Map& a) {
  const int n = static_cast<int>(t.size());
  Solution s{Table(n, Row(n)), Table(n, Row(n)), a};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) s.lam[x][t[x][y]] = y;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) s.rho[y][x] = t[s.lam[x][y]][x];
  return s;
}

inline bool involutive(const Solution& s) {
  const int n = static_cast<int>(s.lam.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::make_pair(x, y)) return false;
    }
  return true;
}

inline bool left_nondegenerate(const Solution& s) {
  for (const auto& row : s.lam)
    if (std::set<int>(row.begin(), row.end()).size() != row.size()) return false;
  return true;
}

inline bool right_nondegenerate(const Solution& s) {
  for (const auto& row : s.rho)
    if (std::set<int>(row.begin(), row.end()).size() != row.size()) return false;
  return true;
}

inline bool compatible(const Solution& s) {
  const int n = static_cast<int>(s.lam.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.r(x, y);
      if (s.r(s.alpha[x], s.alpha[y]) != std::make_pair(s.alpha[u], s.alpha[v])) return false;
    }
  return true;
}

using Triple = std::vector<int>;

/// (a x r)(r x a)(a x r) == (r x a)(a x r)(r x a) on every triple, plus compatibility.
inline bool hybe(const Solution& s) {
  if (!compatible(s)) return false;
  const int n = static_cast<int>(s.lam.size());
  auto ar = [&](Triple t) {
    auto [u, v] = s.r(t[1], t[2]);
    return Triple{s.alpha[t[0]], u, v};
  };
  auto ra = [&](Triple t) {
    auto [u, v] = s.r(t[0], t[1]);
    return Triple{u, v, s.alpha[t[2]]};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple t{x, y, z};
        if (ar(ra(ar(t))) != ra(ar(ra(t)))) return false;
      }
  return true;
}

/// Plain braid relation (r x 1)(1 x r)(r x 1) == (1 x r)(r x 1)(1 x r).
inline bool ybe(const Solution& s) {
  Solution plain = s;
  plain.alpha.resize(s.lam.size());
  std::iota(plain.alpha.begin(), plain.alpha.end(), 0);
  return hybe(plain);
}

/// Minimum over relabellings pi of (table', alpha') with
/// table'[x][y] = pi(t[pi^{-1} x][pi^{-1} y]).
inline std::pair<Table, Map> canonical(const Table& t, const Map& a) {
  const int n = static_cast<int>(t.size());
  std::pair<Table, Map> best{Table{}, Map{}};
  bool first = true;
  for (const auto& pi : permutations(n)) {
    Row inv(n);
    for (int i = 0; i < n; ++i) inv[pi[i]] = i;
    Table t2(n, Row(n));
    Map a2(n);
    for (int x = 0; x < n; ++x) {
      a2[x] = pi[a[inv[x]]];
      for (int y = 0; y < n; ++y) t2[x][y] = pi[t[inv[x]][inv[y]]];
    }
    std::pair<Table, Map> cand{t2, a2};
    if (first || cand < best) best = cand;
    first = false;
  }
  return best;
}

/// Number of cycle sets of order n up to isomorphism.
inline std::size_t cycle_set_classes(int n) {
  Map id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::pair<Table, Map>> classes;
  for (const auto& t : left_quasigroups(n))
    if (cycle_set(t)) classes.insert(canonical(t, id));
  return classes.size();
}

/// Number of Hom-cycle sets (any endomorphism) of order n: raw and up to iso.
inline std::pair<std::size_t, std::size_t> hom_cycle_set_counts(int n) {
  std::size_t raw = 0;
  std::set<std::pair<Table, Map>> classes;
  const auto maps = all_maps(n);
  for (const auto& t : left_quasigroups(n))
    for (const auto& a : maps)
      if (endomorphism(t, a) && hom_cycle_set(t, a)) {
        ++raw;
        classes.insert(canonical(t, a));
      }
  return {raw, classes.size()};
}

}  // namespace oracle
