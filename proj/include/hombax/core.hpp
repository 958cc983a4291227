#pragma once

// Finite carriers {0..n-1}, total self-maps, square tables and maps on pairs.
// Every other module builds on these value types; none of them mutate after
// construction.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hombax {

using Elem = std::uint32_t;
using ElemPair = std::pair<Elem, Elem>;

/// Raised when arguments do not fit a contract (sizes, ranges, hypotheses).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A map that had to be a bijection was not. Carries x1 < x2 with f(x1) == f(x2).
class NotInvertibleError : public DomainError {
 public:
  NotInvertibleError(const std::string& what, Elem first, Elem second)
      : DomainError(what), first_(first), second_(second) {}
  Elem first() const noexcept { return first_; }
  Elem second() const noexcept { return second_; }

 private:
  Elem first_;
  Elem second_;
};

/// A structure lacks the non-degeneracy some construction needs.
/// The witness layout is documented at each throw site.
class DegenerateError : public DomainError {
 public:
  DegenerateError(const std::string& what, std::vector<Elem> witness)
      : DomainError(what), witness_(std::move(witness)) {}
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  std::vector<Elem> witness_;
};

/// A total map {0..n-1} -> {0..n-1}.
class FiniteMap {
 public:
  FiniteMap() = default;
  explicit FiniteMap(std::vector<Elem> table);

  static FiniteMap identity(std::size_t n);
  static FiniteMap constant(std::size_t n, Elem value);

  std::size_t size() const noexcept { return table_.size(); }
  Elem operator()(Elem x) const noexcept { return table_[x]; }
  Elem at(Elem x) const;
  std::span<const Elem> values() const noexcept { return table_; }

  bool is_bijective() const;
  bool is_identity() const noexcept;
  /// Least pair x1 < x2 (ordered by x2, then x1) with f(x1) == f(x2).
  std::optional<ElemPair> collision() const;

  friend auto operator<=>(const FiniteMap&, const FiniteMap&) = default;
  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  std::vector<Elem> table_;
};

/// result(x) = f(g(x)).
FiniteMap compose(const FiniteMap& f, const FiniteMap& g);
/// Throws NotInvertibleError with the collision witness when f is not bijective.
FiniteMap inverse(const FiniteMap& f);
bool commute(const FiniteMap& f, const FiniteMap& g);
/// Ascending list of values taken by f.
std::vector<Elem> image(const FiniteMap& f);
FiniteMap power(const FiniteMap& f, std::size_t k);

/// Iterates of one map with memoization up to the eventual period, so that
/// any exponent can be looked up without recomposing.
class MapPowers {
 public:
  explicit MapPowers(FiniteMap base);

  const FiniteMap& operator[](std::size_t k) const;
  /// Smallest i such that f^i == f^(i+p) for some p > 0.
  std::size_t index() const noexcept { return index_; }
  std::size_t period() const noexcept { return period_; }

 private:
  std::vector<FiniteMap> powers_;
  std::size_t index_ = 0;
  std::size_t period_ = 1;
};

/// n x n table over {0..n-1}; cell (x, y) is stored row-major.
class SquareTable {
 public:
  SquareTable() = default;
  SquareTable(std::size_t n, std::vector<Elem> cells);
  static SquareTable from_rows(const std::vector<std::vector<Elem>>& rows);
  template <class F>
  static SquareTable tabulate(std::size_t n, F&& f) {
    std::vector<Elem> cells(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) cells[x * n + y] = f(x, y);
    return SquareTable(n, std::move(cells));
  }

  std::size_t size() const noexcept { return n_; }
  Elem operator()(Elem x, Elem y) const noexcept { return cells_[x * n_ + y]; }
  Elem at(Elem x, Elem y) const;
  std::span<const Elem> row(Elem x) const noexcept { return {cells_.data() + x * n_, n_}; }
  FiniteMap row_map(Elem x) const;
  std::span<const Elem> cells() const noexcept { return cells_; }
  std::vector<std::vector<Elem>> rows() const;

  friend auto operator<=>(const SquareTable&, const SquareTable&) = default;
  friend bool operator==(const SquareTable&, const SquareTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// A total map on {0..n-1}^2.
class PairMap {
 public:
  PairMap() = default;
  PairMap(std::size_t n, std::vector<ElemPair> out);
  template <class F>
  static PairMap tabulate(std::size_t n, F&& f) {
    std::vector<ElemPair> out(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) out[x * n + y] = f(x, y);
    return PairMap(n, std::move(out));
  }
  static PairMap identity(std::size_t n);
  /// tau(x, y) = (y, x)
  static PairMap swap(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  ElemPair operator()(Elem x, Elem y) const noexcept { return out_[x * n_ + y]; }

  bool is_identity() const noexcept;
  /// Least image point with two preimages, together with its two least
  /// preimages: {u, v, x1, y1, x2, y2}.
  std::optional<std::vector<Elem>> collision() const;
  PairMap inverse() const;

  friend bool operator==(const PairMap&, const PairMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElemPair> out_;
};

/// result(x, y) = a(b(x, y)).
PairMap compose(const PairMap& a, const PairMap& b);

/// All n! permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<Elem>> all_permutations(std::size_t n);

}  // namespace hombax
