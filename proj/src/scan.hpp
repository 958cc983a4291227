#pragma once

// Lexicographic scans returning the least tuple at which `ok` is false.

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hombax/core.hpp"
#include "hombax/report.hpp"

namespace hombax::detail {

using Witness = std::optional<std::vector<Elem>>;

template <class F>
Witness scan1(std::size_t n, F&& ok) {
  for (Elem x = 0; x < n; ++x)
    if (!ok(x)) return std::vector<Elem>{x};
  return std::nullopt;
}

template <class F>
Witness scan2(std::size_t n, F&& ok) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!ok(x, y)) return std::vector<Elem>{x, y};
  return std::nullopt;
}

template <class F>
Witness scan3(std::size_t n, F&& ok) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!ok(x, y, z)) return std::vector<Elem>{x, y, z};
  return std::nullopt;
}

struct NamedClause {
  const char* label;
  std::function<Witness()> eval;
};

/// Evaluates clauses in order and reports the first one that fails.
inline CheckReport run_clauses(std::string name, std::initializer_list<NamedClause> clauses) {
  for (const auto& c : clauses)
    if (auto w = c.eval()) return CheckReport::fail(std::move(name), c.label, std::move(*w));
  return CheckReport::pass(std::move(name));
}

}  // namespace hombax::detail
