#include "hombax/document.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hombax {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kKindNames[] = {"quadratic", "hom-quadratic", "quasigroup", "hom-quasigroup",
                                      "linear-spec"};
constexpr std::size_t kMaxCarrier = 4096;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field " + field + ": " + what);
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field ") + key);
  return *it;
}

long long integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer, got " + std::string(v.type_name()));
  if (v.is_number_unsigned()) {
    const auto u = v.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
      fail(field, "integer out of range");
    return static_cast<long long>(u);
  }
  return v.get<long long>();
}

Elem element(const json& v, const std::string& field, std::size_t n) {
  const auto k = integer(v, field);
  if (k < 0 || static_cast<unsigned long long>(k) >= n)
    fail(field, "value " + std::to_string(k) + " is out of range 0.." + std::to_string(n - 1));
  return static_cast<Elem>(k);
}

std::vector<Elem> map_array(const json& obj, const char* key, std::size_t n) {
  const auto& v = require(obj, key);
  if (!v.is_array()) fail(key, "expected an array");
  if (v.size() != n) fail(key, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = element(v[i], std::string(key) + "[" + std::to_string(i) + "]", n);
  return out;
}

SquareTable table(const json& obj, const char* key, std::size_t n) {
  const auto& v = require(obj, key);
  if (!v.is_array()) fail(key, "expected an array of rows");
  if (v.size() != n) fail(key, "expected " + std::to_string(n) + " rows, got " + std::to_string(v.size()));
  std::vector<Elem> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row = std::string(key) + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(row, "expected an array");
    if (v[i].size() != n) fail(row, "expected " + std::to_string(n) + " entries, got " + std::to_string(v[i].size()));
    for (std::size_t j = 0; j < n; ++j) cells.push_back(element(v[i][j], row + "[" + std::to_string(j) + "]", n));
  }
  return SquareTable(n, std::move(cells));
}

LeftQuasigroup quasigroup_table(const json& obj, std::size_t n) {
  auto op = table(obj, "op", n);
  for (Elem x = 0; x < n; ++x)
    if (!op.row_map(x).is_bijective()) fail("op[" + std::to_string(x) + "]", "row is not a permutation");
  return LeftQuasigroup(std::move(op));
}

ModMatrix matrix(const json& obj, const char* key, Elem m, std::size_t d) {
  const auto& v = require(obj, key);
  if (!v.is_array() || v.size() != d) fail(key, "expected " + std::to_string(d) + " rows");
  std::vector<std::vector<long long>> rows(d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::string row = std::string(key) + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != d) fail(row, "expected " + std::to_string(d) + " entries");
    for (std::size_t j = 0; j < d; ++j) rows[i].push_back(integer(v[i][j], row + "[" + std::to_string(j) + "]"));
  }
  return ModMatrix(m, rows);
}

std::size_t positive(const json& obj, const char* key, std::size_t max) {
  const auto v = integer(require(obj, key), key);
  if (v < 1 || static_cast<unsigned long long>(v) > max)
    fail(key, "expected 1.." + std::to_string(max) + ", got " + std::to_string(v));
  return static_cast<std::size_t>(v);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; }))
      throw ParseError("unexpected field " + it.key());
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json rows_json(const SquareTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return rows;
}

json map_json(const FiniteMap& f) { return json(std::vector<Elem>(f.values().begin(), f.values().end())); }

json matrix_json(const ModMatrix& m) { return json(m.rows()); }

void write(std::ostream& o, const json& v, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      o << "{}";
      return;
    }
    o << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) o << ",\n";
      first = false;
      o << inner << json(it.key()).dump() << ": ";
      write(o, it.value(), indent + 2);
    }
    o << "\n" << pad << "}";
  } else if (v.is_array()) {
    const bool flat = std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
    if (flat) {
      o << "[";
      for (std::size_t i = 0; i < v.size(); ++i) o << (i ? ", " : "") << v[i].dump();
      o << "]";
      return;
    }
    o << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      o << inner;
      write(o, v[i], indent + 2);
      o << (i + 1 < v.size() ? ",\n" : "\n");
    }
    o << pad << "]";
  } else {
    o << v.dump();
  }
}

}  // namespace

const char* to_string(DocumentKind k) noexcept { return kKindNames[static_cast<int>(k)]; }

std::optional<DocumentKind> parse_kind(std::string_view name) {
  for (int i = 0; i < 5; ++i)
    if (name == kKindNames[i]) return static_cast<DocumentKind>(i);
  return std::nullopt;
}

StructureDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + location(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");
  const auto& schema = require(root, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchema)
    fail("schema", std::string("expected \"") + kSchema + "\"");
  const auto& kind_field = require(root, "kind");
  if (!kind_field.is_string()) fail("kind", "expected a string");
  const auto kind = parse_kind(kind_field.get<std::string>());
  if (!kind) fail("kind", "unknown kind \"" + kind_field.get<std::string>() + "\"");

  StructureDocument doc;
  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) fail("metadata", "expected an object");
    for (auto m = it->begin(); m != it->end(); ++m) {
      if (!m.value().is_string()) fail("metadata." + m.key(), "expected a string");
      doc.metadata.emplace_back(m.key(), m.value().get<std::string>());
    }
  }

  try {
    switch (*kind) {
      case DocumentKind::quadratic: {
        check_keys(root, {"schema", "kind", "n", "lam", "rho", "metadata"});
        const auto n = positive(root, "n", kMaxCarrier);
        doc.value = QuadraticSet(table(root, "lam", n), table(root, "rho", n));
        break;
      }
      case DocumentKind::hom_quadratic: {
        check_keys(root, {"schema", "kind", "n", "lam", "rho", "alpha", "metadata"});
        const auto n = positive(root, "n", kMaxCarrier);
        doc.value = HomQuadraticSet(QuadraticSet(table(root, "lam", n), table(root, "rho", n)),
                                    FiniteMap(map_array(root, "alpha", n)));
        break;
      }
      case DocumentKind::quasigroup: {
        check_keys(root, {"schema", "kind", "n", "op", "metadata"});
        const auto n = positive(root, "n", kMaxCarrier);
        doc.value = quasigroup_table(root, n);
        break;
      }
      case DocumentKind::hom_quasigroup: {
        check_keys(root, {"schema", "kind", "n", "op", "alpha", "metadata"});
        const auto n = positive(root, "n", kMaxCarrier);
        auto q = quasigroup_table(root, n);
        doc.value = HomQuasigroup::unchecked(std::move(q), FiniteMap(map_array(root, "alpha", n)));
        break;
      }
      case DocumentKind::linear_spec: {
        check_keys(root, {"schema", "kind", "m", "d", "phi", "psi", "alpha", "metadata"});
        const auto m = static_cast<Elem>(positive(root, "m", kMaxCarrier));
        if (m < 2) fail("m", "modulus must be at least 2");
        const auto d = positive(root, "d", 12);
        LinearSpec spec{m, d, matrix(root, "phi", m, d), matrix(root, "psi", m, d), matrix(root, "alpha", m, d)};
        if (linear_carrier_size(spec) > kMaxCarrier) fail("d", "m^d exceeds " + std::to_string(kMaxCarrier));
        doc.value = std::move(spec);
        break;
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return doc;
}

json to_json(const StructureDocument& doc) {
  json out;
  out["schema"] = kSchema;
  out["kind"] = to_string(doc.kind());
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QuadraticSet>) {
          out["n"] = v.size();
          out["lam"] = rows_json(v.lam_table());
          out["rho"] = rows_json(v.rho_table());
        } else if constexpr (std::is_same_v<T, HomQuadraticSet>) {
          out["n"] = v.size();
          out["lam"] = rows_json(v.base().lam_table());
          out["rho"] = rows_json(v.base().rho_table());
          out["alpha"] = map_json(v.alpha());
        } else if constexpr (std::is_same_v<T, LeftQuasigroup>) {
          out["n"] = v.size();
          out["op"] = rows_json(v.table());
        } else if constexpr (std::is_same_v<T, HomQuasigroup>) {
          out["n"] = v.size();
          out["op"] = rows_json(v.base().table());
          out["alpha"] = map_json(v.alpha());
        } else {
          out["m"] = v.m;
          out["d"] = v.d;
          out["phi"] = matrix_json(v.phi);
          out["psi"] = matrix_json(v.psi);
          out["alpha"] = matrix_json(v.alpha);
        }
      },
      doc.value);
  if (!doc.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : doc.metadata) meta[k] = v;
    out["metadata"] = std::move(meta);
  }
  return out;
}

std::string serialize_document(const StructureDocument& doc) { return write_json(to_json(doc)); }

std::string write_json(const json& value) {
  std::ostringstream o;
  write(o, value, 0);
  o << "\n";
  return o.str();
}

}  // namespace hombax
