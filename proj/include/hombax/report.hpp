#pragma once

#include <string>
#include <vector>

#include "hombax/core.hpp"

namespace hombax {

enum class Verdict { holds, fails, not_applicable };

const char* to_string(Verdict v) noexcept;

/// Outcome of one independent evaluation route inside a predicate.
struct RouteVerdict {
  std::string route;
  Verdict verdict;
  friend bool operator==(const RouteVerdict&, const RouteVerdict&) = default;
};

/// Verdict of a named predicate.
///
/// On failure (or not-applicable) `clause` names the condition that broke and
/// `witness` holds the lexicographically least offending tuple for it, so the
/// failure can be replayed by evaluating that clause at the witness. Predicates
/// that evaluate a statement along several routes record each route; a
/// disagreement between routes means a theorem failed on this input.
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::holds;
  std::string clause;
  std::vector<Elem> witness;
  std::vector<RouteVerdict> routes;

  bool holds() const noexcept { return verdict == Verdict::holds; }
  bool fails() const noexcept { return verdict == Verdict::fails; }
  bool not_applicable() const noexcept { return verdict == Verdict::not_applicable; }
  bool routes_agree() const noexcept;

  static CheckReport pass(std::string name);
  static CheckReport fail(std::string name, std::string clause, std::vector<Elem> witness);
  static CheckReport inapplicable(std::string name, std::string clause, std::vector<Elem> witness);
};

}  // namespace hombax
