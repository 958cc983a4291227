#pragma once

#include <vector>

#include "hombax/core.hpp"
#include "hombax/quadset.hpp"
#include "hombax/quasigroup.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Table to_oracle(const hombax::SquareTable& t) {
  oracle::Table out;
  for (const auto& r : t.rows()) out.emplace_back(r.begin(), r.end());
  return out;
}

inline oracle::Map to_oracle(const hombax::FiniteMap& f) { return {f.values().begin(), f.values().end()}; }

inline hombax::SquareTable to_table(const oracle::Table& t) {
  std::vector<std::vector<hombax::Elem>> rows;
  for (const auto& r : t) rows.emplace_back(r.begin(), r.end());
  return hombax::SquareTable::from_rows(rows);
}

inline hombax::FiniteMap to_map(const oracle::Map& m) { return hombax::FiniteMap({m.begin(), m.end()}); }

inline hombax::HomQuasigroup hom_quasigroup(const oracle::Table& t, const oracle::Map& a) {
  return hombax::HomQuasigroup::unchecked(hombax::LeftQuasigroup(to_table(t)), to_map(a));
}

inline hombax::HomQuadraticSet hom_quadratic(const oracle::Solution& s) {
  return hombax::HomQuadraticSet(hombax::QuadraticSet(to_table(s.lam), to_table(s.rho)), to_map(s.alpha));
}

inline oracle::Solution to_oracle(const hombax::HomQuadraticSet& h) {
  return {to_oracle(h.base().lam_table()), to_oracle(h.base().rho_table()), to_oracle(h.alpha())};
}

/// Every LNDI Hom-quadratic set of order n: lam rows are permutations, rho is
/// forced by involutivity, alpha ranges over all maps.
inline std::vector<oracle::Solution> lndi_sets(int n) {
  std::vector<oracle::Solution> out;
  const auto maps = oracle::all_maps(n);
  for (const auto& t : oracle::left_quasigroups(n)) {
    for (const auto& a : maps) {
      // S of the quasigroup whose rows invert lam rows; rho comes out forced.
      oracle::Table inv(n, oracle::Row(n));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) inv[x][t[x][y]] = y;
      out.push_back(oracle::from_quasigroup(inv, a));
    }
  }
  return out;
}

}  // namespace support
