#include "hombax/report.hpp"

namespace hombax {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

bool CheckReport::routes_agree() const noexcept {
  for (const auto& r : routes)
    if (r.verdict != routes.front().verdict) return false;
  return true;
}

CheckReport CheckReport::pass(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  return r;
}

CheckReport CheckReport::fail(std::string name, std::string clause, std::vector<Elem> witness) {
  CheckReport r;
  r.name = std::move(name);
  r.verdict = Verdict::fails;
  r.clause = std::move(clause);
  r.witness = std::move(witness);
  return r;
}

CheckReport CheckReport::inapplicable(std::string name, std::string clause,
                                      std::vector<Elem> witness) {
  CheckReport r = fail(std::move(name), std::move(clause), std::move(witness));
  r.verdict = Verdict::not_applicable;
  return r;
}

}  // namespace hombax
