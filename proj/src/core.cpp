#include "hombax/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hombax {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DomainError(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                      std::to_string(b) + ")");
}

}  // namespace

FiniteMap::FiniteMap(std::vector<Elem> table) : table_(std::move(table)) {
  if (table_.empty()) throw DomainError("FiniteMap: carrier must be non-empty");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= table_.size())
      throw DomainError("FiniteMap: entry " + std::to_string(i) + " = " +
                        std::to_string(table_[i]) + " out of range");
}

FiniteMap FiniteMap::identity(std::size_t n) {
  std::vector<Elem> t(n);
  std::iota(t.begin(), t.end(), Elem{0});
  return FiniteMap(std::move(t));
}

FiniteMap FiniteMap::constant(std::size_t n, Elem value) {
  return FiniteMap(std::vector<Elem>(n, value));
}

Elem FiniteMap::at(Elem x) const {
  if (x >= table_.size()) throw DomainError("FiniteMap::at: element out of range");
  return table_[x];
}

std::optional<ElemPair> FiniteMap::collision() const {
  constexpr Elem unseen = ~Elem{0};
  std::vector<Elem> first(table_.size(), unseen);
  for (Elem x = 0; x < table_.size(); ++x) {
    Elem& slot = first[table_[x]];
    if (slot != unseen) return ElemPair{slot, x};
    slot = x;
  }
  return std::nullopt;
}

bool FiniteMap::is_bijective() const { return !collision().has_value(); }

bool FiniteMap::is_identity() const noexcept {
  for (Elem x = 0; x < table_.size(); ++x)
    if (table_[x] != x) return false;
  return true;
}

FiniteMap compose(const FiniteMap& f, const FiniteMap& g) {
  require_same_size(f.size(), g.size(), "compose");
  std::vector<Elem> t(f.size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = f(g(x));
  return FiniteMap(std::move(t));
}

FiniteMap inverse(const FiniteMap& f) {
  if (auto c = f.collision())
    throw NotInvertibleError("inverse: map is not injective (f(" + std::to_string(c->first) +
                                 ") == f(" + std::to_string(c->second) + "))",
                             c->first, c->second);
  std::vector<Elem> t(f.size());
  for (Elem x = 0; x < t.size(); ++x) t[f(x)] = x;
  return FiniteMap(std::move(t));
}

bool commute(const FiniteMap& f, const FiniteMap& g) {
  require_same_size(f.size(), g.size(), "commute");
  for (Elem x = 0; x < f.size(); ++x)
    if (f(g(x)) != g(f(x))) return false;
  return true;
}

std::vector<Elem> image(const FiniteMap& f) {
  std::vector<bool> hit(f.size(), false);
  for (Elem x = 0; x < f.size(); ++x) hit[f(x)] = true;
  std::vector<Elem> out;
  for (Elem y = 0; y < f.size(); ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

FiniteMap power(const FiniteMap& f, std::size_t k) {
  FiniteMap result = FiniteMap::identity(f.size());
  FiniteMap base = f;
  while (k > 0) {
    if (k & 1u) result = compose(base, result);
    base = compose(base, base);
    k >>= 1u;
  }
  return result;
}

MapPowers::MapPowers(FiniteMap base) {
  std::map<FiniteMap, std::size_t> seen;
  FiniteMap current = FiniteMap::identity(base.size());
  for (;;) {
    auto [it, inserted] = seen.emplace(current, powers_.size());
    if (!inserted) {
      index_ = it->second;
      period_ = powers_.size() - it->second;
      return;
    }
    powers_.push_back(current);
    current = compose(base, current);
  }
}

const FiniteMap& MapPowers::operator[](std::size_t k) const {
  if (k < powers_.size()) return powers_[k];
  return powers_[index_ + (k - index_) % period_];
}

SquareTable::SquareTable(std::size_t n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
  if (n == 0) throw DomainError("SquareTable: carrier must be non-empty");
  if (cells_.size() != n * n) throw DomainError("SquareTable: expected n*n cells");
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] >= n)
      throw DomainError("SquareTable: cell (" + std::to_string(i / n) + ", " +
                        std::to_string(i % n) + ") = " + std::to_string(cells_[i]) +
                        " out of range");
}

SquareTable SquareTable::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> cells;
  cells.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n)
      throw DomainError("SquareTable: row " + std::to_string(x) + " has length " +
                        std::to_string(rows[x].size()) + ", expected " + std::to_string(n));
    cells.insert(cells.end(), rows[x].begin(), rows[x].end());
  }
  return SquareTable(n, std::move(cells));
}

Elem SquareTable::at(Elem x, Elem y) const {
  if (x >= n_ || y >= n_) throw DomainError("SquareTable::at: element out of range");
  return (*this)(x, y);
}

FiniteMap SquareTable::row_map(Elem x) const {
  auto r = row(x);
  return FiniteMap(std::vector<Elem>(r.begin(), r.end()));
}

std::vector<std::vector<Elem>> SquareTable::rows() const {
  std::vector<std::vector<Elem>> out;
  out.reserve(n_);
  for (Elem x = 0; x < n_; ++x) {
    auto r = row(x);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

PairMap::PairMap(std::size_t n, std::vector<ElemPair> out) : n_(n), out_(std::move(out)) {
  if (n == 0) throw DomainError("PairMap: carrier must be non-empty");
  if (out_.size() != n * n) throw DomainError("PairMap: expected n*n entries");
  for (const auto& [u, v] : out_)
    if (u >= n || v >= n) throw DomainError("PairMap: entry out of range");
}

PairMap PairMap::identity(std::size_t n) {
  return tabulate(n, [](Elem x, Elem y) { return ElemPair{x, y}; });
}

PairMap PairMap::swap(std::size_t n) {
  return tabulate(n, [](Elem x, Elem y) { return ElemPair{y, x}; });
}

bool PairMap::is_identity() const noexcept {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if ((*this)(x, y) != ElemPair{x, y}) return false;
  return true;
}

std::optional<std::vector<Elem>> PairMap::collision() const {
  constexpr std::size_t unseen = ~std::size_t{0};
  std::vector<std::size_t> first(n_ * n_, unseen);
  std::vector<std::size_t> second(n_ * n_, unseen);
  for (std::size_t i = 0; i < out_.size(); ++i) {
    const std::size_t target = out_[i].first * n_ + out_[i].second;
    if (first[target] == unseen)
      first[target] = i;
    else if (second[target] == unseen)
      second[target] = i;
  }
  for (std::size_t target = 0; target < second.size(); ++target) {
    if (second[target] == unseen) continue;
    const std::size_t a = first[target], b = second[target];
    return std::vector<Elem>{static_cast<Elem>(target / n_), static_cast<Elem>(target % n_),
                             static_cast<Elem>(a / n_),      static_cast<Elem>(a % n_),
                             static_cast<Elem>(b / n_),      static_cast<Elem>(b % n_)};
  }
  return std::nullopt;
}

PairMap PairMap::inverse() const {
  if (auto c = collision())
    throw DegenerateError("PairMap::inverse: map on pairs is not injective", *c);
  std::vector<ElemPair> inv(out_.size());
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      auto [u, v] = (*this)(x, y);
      inv[u * n_ + v] = {x, y};
    }
  return PairMap(n_, std::move(inv));
}

PairMap compose(const PairMap& a, const PairMap& b) {
  require_same_size(a.size(), b.size(), "compose");
  return PairMap::tabulate(a.size(), [&](Elem x, Elem y) {
    auto [u, v] = b(x, y);
    return a(u, v);
  });
}

std::vector<std::vector<Elem>> all_permutations(std::size_t n) {
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), Elem{0});
  std::vector<std::vector<Elem>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace hombax
