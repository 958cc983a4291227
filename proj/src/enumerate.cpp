#include "hombax/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace hombax {

namespace {

constexpr const char* kPredicateNames[] = {"cycle-set", "hom-cycle-set", "im-cycle-set", "non-degenerate",
                                           "square-free"};
constexpr const char* kAlphaNames[] = {"any", "id", "constant", "bijective"};

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

bool has(const EnumerationFilter& f, Predicate p) {
  return std::find(f.predicates.begin(), f.predicates.end(), p) != f.predicates.end();
}

bool alpha_in_class(const FiniteMap& a, AlphaClass c) {
  switch (c) {
    case AlphaClass::any:
      return true;
    case AlphaClass::identity:
      return a.is_identity();
    case AlphaClass::constant:
      return image(a).size() == 1;
    case AlphaClass::bijective:
      return a.is_bijective();
  }
  return false;
}

bool table_predicates(const LeftQuasigroup& q, const EnumerationFilter& f) {
  if (has(f, Predicate::square_free) && !is_square_free(q)) return false;
  if (has(f, Predicate::cycle_set) && !is_cycle_set(q).holds()) return false;
  if (has(f, Predicate::non_degenerate) && !is_delta_bijective(q).holds()) return false;
  return true;
}

bool hom_predicates(const HomQuasigroup& h, const EnumerationFilter& f) {
  if (has(f, Predicate::hom_cycle_set) && !is_hom_cycle_set(h).holds()) return false;
  if (has(f, Predicate::im_cycle_set) && !is_im_cycle_set(h).holds()) return false;
  return true;
}

// Calls visit(alpha) for every map in class c that passes `partial` at each
// prefix. partial(a, k) sees a[0..k] assigned.
template <class Partial, class Visit>
void for_each_alpha(std::size_t n, AlphaClass c, Partial&& partial, Visit&& visit) {
  if (c == AlphaClass::identity) {
    auto id = FiniteMap::identity(n);
    std::vector<Elem> a(id.values().begin(), id.values().end());
    for (Elem k = 0; k < n; ++k)
      if (!partial(a, k)) return;
    visit(FiniteMap(std::move(a)));
    return;
  }
  if (c == AlphaClass::constant) {
    for (Elem v = 0; v < n; ++v) {
      std::vector<Elem> a(n, v);
      bool ok = true;
      for (Elem k = 0; k < n && ok; ++k) ok = partial(a, k);
      if (ok) visit(FiniteMap(std::move(a)));
    }
    return;
  }
  std::vector<Elem> a(n, 0);
  std::vector<bool> used(n, false);
  const bool bij = c == AlphaClass::bijective;
  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == n) {
      visit(FiniteMap(a));
      return;
    }
    for (Elem v = 0; v < n; ++v) {
      if (bij && used[v]) continue;
      a[k] = v;
      if (!partial(a, k)) continue;
      used[v] = true;
      rec(k + 1);
      used[v] = false;
    }
  };
  rec(0);
}

// alpha(x y) = alpha(x) alpha(y) on every pair whose values are all assigned.
bool endomorphism_prefix(const LeftQuasigroup& q, const std::vector<Elem>& a, Elem k) {
  for (Elem x = 0; x <= k; ++x)
    for (Elem y = 0; y <= k; ++y) {
      if (x != k && y != k && q(x, y) != k) continue;
      const Elem xy = q(x, y);
      if (xy <= k && a[xy] != q(a[x], a[y])) return false;
    }
  return true;
}

// Row-level pruning on a partial table whose rows 0..k are filled.
bool rows_prefix_ok(const std::vector<Elem>& cells, std::size_t n, Elem k, const EnumerationFilter& f) {
  auto op = [&](Elem x, Elem y) { return cells[x * n + y]; };
  if (has(f, Predicate::square_free) && op(k, k) != k) return false;
  if (has(f, Predicate::cycle_set)) {
    for (Elem x = 0; x <= k; ++x)
      for (Elem y = 0; y <= k; ++y) {
        const Elem xy = op(x, y), yx = op(y, x);
        if (xy > k || yx > k) continue;
        for (Elem z = 0; z < n; ++z)
          if (op(xy, op(x, z)) != op(yx, op(y, z))) return false;
      }
  }
  return true;
}

void search_tables(std::size_t n, const std::vector<std::vector<Elem>>& perms, std::size_t first,
                   const EnumerationFilter& f, const std::function<void(const LeftQuasigroup&)>& leaf) {
  std::vector<Elem> cells(n * n);
  std::function<void(Elem)> rec = [&](Elem k) {
    if (k == n) {
      leaf(LeftQuasigroup(SquareTable(n, cells)));
      return;
    }
    for (const auto& p : perms) {
      std::copy(p.begin(), p.end(), cells.begin() + k * n);
      if (rows_prefix_ok(cells, n, k, f)) rec(k + 1);
    }
  };
  std::copy(perms[first].begin(), perms[first].end(), cells.begin());
  if (rows_prefix_ok(cells, n, 0, f)) rec(1);
}

template <class T, class Less>
void merge_sorted(std::vector<std::vector<T>>& parts, std::vector<T>& out, Less less) {
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), less);
}

}  // namespace

const char* to_string(Predicate p) noexcept { return kPredicateNames[static_cast<int>(p)]; }
const char* to_string(AlphaClass a) noexcept { return kAlphaNames[static_cast<int>(a)]; }

std::optional<Predicate> parse_predicate(const std::string& name) {
  for (int i = 0; i < 5; ++i)
    if (name == kPredicateNames[i]) return static_cast<Predicate>(i);
  return std::nullopt;
}

std::optional<AlphaClass> parse_alpha_class(const std::string& name) {
  for (int i = 0; i < 4; ++i)
    if (name == kAlphaNames[i]) return static_cast<AlphaClass>(i);
  return std::nullopt;
}

std::vector<std::string> predicate_names() {
  std::vector<std::string> out{"all"};
  for (const char* p : kPredicateNames) out.emplace_back(p);
  return out;
}

bool EnumerationFilter::accepts(const HomQuasigroup& h) const {
  return alpha_in_class(h.alpha(), alpha) && is_endomorphism(h).holds() &&
         table_predicates(h.base(), *this) && hom_predicates(h, *this);
}

std::size_t enumeration_cap() {
  const char* env = std::getenv("HOMBAX_MAX_N");
  if (!env || !*env) return kDefaultCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return kDefaultCap;
  return std::min<std::size_t>(static_cast<std::size_t>(v), kHardCap);
}

double estimated_leaves(std::size_t n) {
  return std::pow(factorial(n), static_cast<double>(n)) * std::pow(static_cast<double>(n), static_cast<double>(n));
}

void require_within_cap(std::size_t n) {
  if (n == 0) throw CapExceeded("enumeration needs n >= 1");
  const auto cap = enumeration_cap();
  if (n > cap) {
    std::ostringstream msg;
    msg << "order " << n << " exceeds the enumeration cap " << cap << " (hard cap " << kHardCap
        << ", set HOMBAX_MAX_N to raise); the unpruned search has about " << std::scientific
        << estimated_leaves(n) << " (table, alpha) leaves";
    throw CapExceeded(msg.str());
  }
}

HomQuasigroup relabel(const HomQuasigroup& h, const std::vector<Elem>& pi) {
  const auto n = h.size();
  std::vector<Elem> cells(n * n), alpha(n);
  for (Elem x = 0; x < n; ++x) {
    alpha[pi[x]] = pi[h.alpha()(x)];
    for (Elem y = 0; y < n; ++y) cells[pi[x] * n + pi[y]] = pi[h(x, y)];
  }
  return HomQuasigroup::unchecked(LeftQuasigroup(SquareTable(n, std::move(cells))), FiniteMap(std::move(alpha)));
}

HomQuadraticSet relabel(const HomQuadraticSet& h, const std::vector<Elem>& pi) {
  const auto n = h.size();
  std::vector<Elem> lam(n * n), rho(n * n), alpha(n);
  for (Elem x = 0; x < n; ++x) {
    alpha[pi[x]] = pi[h.alpha()(x)];
    for (Elem y = 0; y < n; ++y) {
      lam[pi[x] * n + pi[y]] = pi[h.lam(x, y)];
      rho[pi[x] * n + pi[y]] = pi[h.rho(x, y)];
    }
  }
  return HomQuadraticSet(QuadraticSet(SquareTable(n, std::move(lam)), SquareTable(n, std::move(rho))),
                         FiniteMap(std::move(alpha)));
}

HomQuasigroup CanonicalKey::structure() const {
  return HomQuasigroup::unchecked(LeftQuasigroup(table), alpha);
}

HomQuadraticSet QuadraticCanonicalKey::structure() const {
  return HomQuadraticSet(QuadraticSet(lam, rho), alpha);
}

CanonicalKey canonical_form(const HomQuasigroup& h) {
  std::optional<CanonicalKey> best;
  for (const auto& pi : all_permutations(h.size())) {
    auto r = relabel(h, pi);
    CanonicalKey key{r.base().table(), r.alpha()};
    if (!best || key < *best) best = std::move(key);
  }
  return *best;
}

QuadraticCanonicalKey canonical_form(const HomQuadraticSet& h) {
  std::optional<QuadraticCanonicalKey> best;
  for (const auto& pi : all_permutations(h.size())) {
    auto r = relabel(h, pi);
    QuadraticCanonicalKey key{r.base().lam_table(), r.base().rho_table(), r.alpha()};
    if (!best || key < *best) best = std::move(key);
  }
  return *best;
}

std::size_t automorphism_count(const HomQuasigroup& h) {
  std::size_t count = 0;
  for (const auto& pi : all_permutations(h.size()))
    if (relabel(h, pi) == h) ++count;
  return count;
}

void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(0, i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += jobs) fn(w, i);
    });
  for (auto& t : pool) t.join();
}

std::vector<HomQuasigroup> enumerate_hom_quasigroups(std::size_t n, const EnumerationFilter& filter,
                                                     std::size_t jobs) {
  require_within_cap(n);
  const auto perms = all_permutations(n);
  jobs = std::max<std::size_t>(jobs, 1);
  std::vector<std::vector<HomQuasigroup>> parts(jobs);
  parallel_for(perms.size(), jobs, [&](std::size_t w, std::size_t first) {
    search_tables(n, perms, first, filter, [&](const LeftQuasigroup& q) {
      if (!table_predicates(q, filter)) return;
      for_each_alpha(
          n, filter.alpha, [&](const std::vector<Elem>& a, Elem k) { return endomorphism_prefix(q, a, k); },
          [&](FiniteMap a) {
            auto h = HomQuasigroup::unchecked(q, std::move(a));
            if (!hom_predicates(h, filter)) return;
            parts[w].push_back(filter.up_to_iso ? canonical_form(h).structure() : std::move(h));
          });
    });
  });
  std::vector<HomQuasigroup> out;
  merge_sorted(parts, out, std::less<>{});
  if (filter.up_to_iso) out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CountTable count_up_to_iso(std::size_t n, const EnumerationFilter& filter, std::size_t jobs) {
  auto raw_filter = filter;
  raw_filter.up_to_iso = false;
  const auto raw = enumerate_hom_quasigroups(n, raw_filter, jobs);
  std::vector<CanonicalKey> keys(raw.size());
  parallel_for(raw.size(), jobs, [&](std::size_t, std::size_t i) { keys[i] = canonical_form(raw[i]); });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  CountTable t;
  t.n = n;
  t.raw = raw.size();
  t.classes = keys.size();
  const auto nfact = static_cast<std::size_t>(factorial(n));
  for (const auto& k : keys) t.orbit_sum += nfact / automorphism_count(k.structure());
  return t;
}

std::vector<HomQuadraticSet> enumerate_lndi_hybe_solutions(std::size_t n, AlphaClass alpha_class,
                                                           std::size_t jobs) {
  require_within_cap(n);
  const auto perms = all_permutations(n);
  jobs = std::max<std::size_t>(jobs, 1);
  std::vector<std::vector<HomQuadraticSet>> parts(jobs);
  // Odometer over lam rows; the first row index is the work item.
  parallel_for(perms.size(), jobs, [&](std::size_t w, std::size_t first) {
    std::vector<std::size_t> idx(n, 0);
    idx[0] = first;
    auto advance = [&] {
      for (std::size_t pos = n; pos-- > 1;) {
        if (++idx[pos] < perms.size()) return true;
        idx[pos] = 0;
      }
      return false;
    };
    do {
      std::vector<Elem> lam(n * n), inv(n * n), rho(n * n);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          lam[x * n + y] = perms[idx[x]][y];
          inv[x * n + perms[idx[x]][y]] = y;
        }
      // Involutivity forces rho_y(x) = lam^{-1}_{lam_x(y)}(x).
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) rho[y * n + x] = inv[lam[x * n + y] * n + x];
      QuadraticSet q(SquareTable(n, lam), SquareTable(n, rho));
      if (is_involutive(q).holds()) {
        auto compatible_prefix = [&](const std::vector<Elem>& a, Elem k) {
          for (Elem x = 0; x <= k; ++x)
            for (Elem y = 0; y <= k; ++y) {
              const Elem l = q.lam(x, y), r = q.rho(y, x);
              if (l <= k && a[l] != q.lam(a[x], a[y])) return false;
              if (r <= k && a[r] != q.rho(a[y], a[x])) return false;
            }
          return true;
        };
        for_each_alpha(n, alpha_class, compatible_prefix, [&](FiniteMap a) {
          HomQuadraticSet h(q, std::move(a));
          if (is_hybe_solution(h).holds()) parts[w].push_back(std::move(h));
        });
      }
    } while (advance());
  });
  std::vector<HomQuadraticSet> out;
  merge_sorted(parts, out, std::less<>{});
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremResult& t) { return t.failures == 0; });
}

}  // namespace hombax
