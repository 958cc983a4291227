#pragma once

// The "hombax/1" JSON interchange format.
//
//   {"schema": "hombax/1", "kind": K, "n": N, <tables>, "alpha": [...], "metadata": {...}}
//
// K = quadratic      lam, rho      (rho[y][x] = rho_y(x))
//     hom-quadratic  lam, rho, alpha
//     quasigroup     op
//     hom-quasigroup op, alpha
//     linear-spec    m, d, phi, psi, alpha (d x d integer matrices; no "n")
//
// Integers only. Metadata is optional, string valued and kept in order.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hombax/constructions.hpp"
#include "hombax/core.hpp"
#include "hombax/quadset.hpp"
#include "hombax/quasigroup.hpp"
#include "json.hpp"

namespace hombax {

constexpr const char* kSchema = "hombax/1";

enum class DocumentKind { quadratic, hom_quadratic, quasigroup, hom_quasigroup, linear_spec };
const char* to_string(DocumentKind k) noexcept;
std::optional<DocumentKind> parse_kind(std::string_view name);

/// Alternatives are in DocumentKind order. Hom-quasigroups are stored without
/// checking that alpha is an endomorphism.
using DocumentValue = std::variant<QuadraticSet, HomQuadraticSet, LeftQuasigroup, HomQuasigroup, LinearSpec>;

struct StructureDocument {
  DocumentValue value;
  std::vector<std::pair<std::string, std::string>> metadata;

  DocumentKind kind() const noexcept { return static_cast<DocumentKind>(value.index()); }
  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

/// Malformed input. Messages name the line and column for syntax errors and
/// the field path (e.g. op[2][1]) for content errors.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

StructureDocument parse_document(std::string_view text);
nlohmann::ordered_json to_json(const StructureDocument& doc);
std::string serialize_document(const StructureDocument& doc);

/// Canonical layout: two-space indent, arrays of scalars on one line, trailing
/// newline.
std::string write_json(const nlohmann::ordered_json& value);

}  // namespace hombax
