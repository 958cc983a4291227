#include "hombax/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hombax/constructions.hpp"
#include "hombax/document.hpp"
#include "hombax/enumerate.hpp"
#include "hombax/functors.hpp"

namespace hombax {

using json = nlohmann::ordered_json;

namespace {

// A mathematical precondition failed; reported with exit code 1.
struct Failure {
  std::string error;
  std::string message;
  std::vector<Elem> witness;
};

// Bad invocation; reported with exit code 2.
struct Usage {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage{"cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

StructureDocument load(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw Usage{path + ": " + e.what()};
  }
}

std::string join(const std::vector<Elem>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::vector<long long> parse_list(const std::string& text, const std::string& option) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Usage{option + ": \"" + item + "\" is not an integer"};
    }
  }
  if (out.empty()) throw Usage{option + ": empty list"};
  return out;
}

std::vector<Elem> parse_elems(const std::string& text, const std::string& option) {
  std::vector<Elem> out;
  for (long long v : parse_list(text, option)) {
    if (v < 0) throw Usage{option + ": negative entry " + std::to_string(v)};
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

std::vector<std::vector<long long>> parse_rows(const std::string& text, const std::string& option) {
  std::vector<std::vector<long long>> rows;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(parse_list(row, option));
  return rows;
}

FiniteMap parse_map(const std::string& text, const std::string& option, std::size_t n) {
  auto v = parse_elems(text, option);
  if (v.size() != n) throw Usage{option + ": expected " + std::to_string(n) + " entries"};
  try {
    return FiniteMap(std::move(v));
  } catch (const DomainError& e) {
    throw Usage{option + ": " + e.what()};
  }
}

// ---- views of a document -------------------------------------------------

HomQuasigroup materialize(const LinearSpec& spec) {
  try {
    return linear_structure(spec).structure;
  } catch (const DomainError& e) {
    throw Failure{"domain", e.what(), {}};
  }
}

const HomQuadraticSet* hom_quadratic(const StructureDocument& d) { return std::get_if<HomQuadraticSet>(&d.value); }

std::optional<QuadraticSet> quadratic(const StructureDocument& d) {
  if (auto q = std::get_if<QuadraticSet>(&d.value)) return *q;
  if (auto h = hom_quadratic(d)) return h->base();
  return std::nullopt;
}

std::optional<HomQuasigroup> hom_quasigroup(const StructureDocument& d) {
  if (auto h = std::get_if<HomQuasigroup>(&d.value)) return *h;
  if (auto s = std::get_if<LinearSpec>(&d.value)) return materialize(*s);
  return std::nullopt;
}

std::optional<LeftQuasigroup> quasigroup(const StructureDocument& d) {
  if (auto q = std::get_if<LeftQuasigroup>(&d.value)) return *q;
  if (auto h = hom_quasigroup(d)) return h->base();
  return std::nullopt;
}

void require_endomorphism(const HomQuasigroup& h) {
  auto r = is_endomorphism(h);
  if (!r.holds())
    throw Failure{"not-a-hom-quasigroup", "alpha is not an endomorphism (alpha-multiplicative fails)", r.witness};
}

// ---- check ---------------------------------------------------------------

CheckReport square_free_report(const LeftQuasigroup& q) {
  for (Elem x = 0; x < q.size(); ++x)
    if (q(x, x) != x) return CheckReport::fail("square-free", "square", {x});
  return CheckReport::pass("square-free");
}

CheckReport twisted_square_report(const HomQuasigroup& h) {
  if (auto c = twisted_square_map(h).collision())
    return CheckReport::fail("twisted-square-bijective", "collision", {c->first, c->second});
  return CheckReport::pass("twisted-square-bijective");
}

using Evaluator = std::function<std::optional<CheckReport>(const StructureDocument&)>;

struct PredicateEntry {
  const char* name;
  Evaluator eval;
};

template <class F>
Evaluator on_quadratic(F f) {
  return [f](const StructureDocument& d) -> std::optional<CheckReport> {
    if (auto q = quadratic(d)) return f(*q);
    return std::nullopt;
  };
}

template <class F>
Evaluator on_hom_quadratic(F f) {
  return [f](const StructureDocument& d) -> std::optional<CheckReport> {
    if (auto h = hom_quadratic(d)) return f(*h);
    return std::nullopt;
  };
}

template <class F>
Evaluator on_quasigroup(F f) {
  return [f](const StructureDocument& d) -> std::optional<CheckReport> {
    if (auto q = quasigroup(d)) return f(*q);
    return std::nullopt;
  };
}

template <class F>
Evaluator on_hom_quasigroup(F f) {
  return [f](const StructureDocument& d) -> std::optional<CheckReport> {
    if (auto h = hom_quasigroup(d)) return f(*h);
    return std::nullopt;
  };
}

const std::vector<PredicateEntry>& predicate_table() {
  static const std::vector<PredicateEntry> table = {
      {"involutive", on_quadratic([](const QuadraticSet& q) { return is_involutive(q); })},
      {"left-non-degenerate", on_quadratic([](const QuadraticSet& q) { return is_left_nondegenerate(q); })},
      {"right-non-degenerate", on_quadratic([](const QuadraticSet& q) { return is_right_nondegenerate(q); })},
      {"non-degenerate", on_quadratic([](const QuadraticSet& q) { return is_nondegenerate(q); })},
      {"non-degenerate", on_quasigroup([](const LeftQuasigroup& q) { return is_delta_bijective(q); })},
      {"rho-formula", on_quadratic([](const QuadraticSet& q) { return involutivity_rho_formula(q); })},
      {"ybe", on_quadratic([](const QuadraticSet& q) { return is_ybe_solution(q); })},
      {"hom-compatible", on_hom_quadratic([](const HomQuadraticSet& h) { return is_hom_compatible(h); })},
      {"hybe", on_hom_quadratic([](const HomQuadraticSet& h) { return is_hybe_solution(h); })},
      {"lndi-hybe-six", on_hom_quadratic([](const HomQuadraticSet& h) { return is_lndi_hybe_six_conditions(h); })},
      {"lndi-hybe-five",
       on_hom_quadratic([](const HomQuadraticSet& h) { return is_lndi_hybe_five_conditions(h); })},
      {"alpha-square-identities",
       on_hom_quadratic([](const HomQuadraticSet& h) { return alpha_square_identities(h); })},
      {"round-trip", on_hom_quadratic([](const HomQuadraticSet& h) { return round_trip_check(h); })},
      {"cycle-set", on_quasigroup([](const LeftQuasigroup& q) { return is_cycle_set(q); })},
      {"square-free", on_quasigroup(square_free_report)},
      {"endomorphism", on_hom_quasigroup([](const HomQuasigroup& h) { return is_endomorphism(h); })},
      {"hom-cycle-set", on_hom_quasigroup([](const HomQuasigroup& h) { return is_hom_cycle_set(h); })},
      {"im-cycle-set", on_hom_quasigroup([](const HomQuasigroup& h) { return is_im_cycle_set(h); })},
      {"alpha-square-left", on_hom_quasigroup([](const HomQuasigroup& h) { return alpha_square_left_identity(h); })},
      {"derived-shift", on_hom_quasigroup([](const HomQuasigroup& h) { return derived_shift_identity(h); })},
      {"twisted-square-bijective", on_hom_quasigroup(twisted_square_report)},
      {"round-trip", on_hom_quasigroup([](const HomQuasigroup& h) { return round_trip_check(h); })},
      {"linear-conditions", [](const StructureDocument& d) -> std::optional<CheckReport> {
         if (auto s = std::get_if<LinearSpec>(&d.value)) {
           try {
             return linear_structure(*s).conditions;
           } catch (const DomainError& e) {
             throw Failure{"domain", e.what(), {}};
           }
         }
         return std::nullopt;
       }},
  };
  return table;
}

std::vector<std::string> predicates_for(const StructureDocument& d) {
  std::vector<std::string> names;
  for (const auto& e : predicate_table()) {
    std::optional<CheckReport> probe;
    try {
      probe = e.eval(d);
    } catch (const Failure&) {
      probe = CheckReport{};
    }
    if (probe && std::find(names.begin(), names.end(), e.name) == names.end()) names.push_back(e.name);
  }
  return names;
}

json report_json(const std::string& predicate, const CheckReport& r) {
  json out;
  out["schema"] = kSchema;
  out["kind"] = "check-report";
  out["predicate"] = predicate;
  out["name"] = r.name;
  out["verdict"] = to_string(r.verdict);
  if (!r.holds()) {
    out["clause"] = r.clause;
    out["witness"] = r.witness;
  }
  json routes = json::array();
  for (const auto& route : r.routes) routes.push_back(json{{"route", route.route}, {"verdict", to_string(route.verdict)}});
  out["routes"] = std::move(routes);
  return out;
}

int cmd_check(const std::string& file, const std::string& predicate, std::ostream& out, std::ostream& err) {
  const auto doc = load(file);
  for (const auto& e : predicate_table()) {
    if (predicate != e.name) continue;
    auto report = e.eval(doc);
    if (!report) continue;
    out << write_json(report_json(predicate, *report));
    err << predicate << ": " << to_string(report->verdict);
    if (!report->holds()) err << " (" << report->clause << " at [" << join(report->witness) << "])";
    err << "\n";
    return report->holds() ? kExitHolds : kExitFails;
  }
  std::string list;
  for (const auto& name : predicates_for(doc)) list += (list.empty() ? "" : ", ") + name;
  throw Usage{"unknown predicate \"" + predicate + "\" for kind " + to_string(doc.kind()) + "; available: " + list};
}

// ---- convert / twist / dual ----------------------------------------------

int emit(const StructureDocument& doc, std::ostream& out, std::ostream& err, const std::string& summary) {
  out << serialize_document(doc);
  err << summary << "\n";
  return kExitHolds;
}

StructureDocument with_value(const StructureDocument& from, DocumentValue value) {
  return StructureDocument{std::move(value), from.metadata};
}

int cmd_convert(const std::string& file, const std::string& direction, std::ostream& out, std::ostream& err) {
  const auto doc = load(file);
  if (direction == "G") {
    if (auto h = hom_quadratic(doc))
      return emit(with_value(doc, to_hom_quasigroup(*h)), out, err, "G: hom-quadratic -> hom-quasigroup");
    if (auto q = std::get_if<QuadraticSet>(&doc.value)) {
      auto g = to_hom_quasigroup(HomQuadraticSet(*q, FiniteMap::identity(q->size())));
      return emit(with_value(doc, g.base()), out, err, "G: quadratic -> quasigroup");
    }
    throw Usage{std::string("G expects a quadratic or hom-quadratic document, got ") + to_string(doc.kind())};
  }
  if (direction == "S") {
    if (auto q = std::get_if<LeftQuasigroup>(&doc.value)) {
      auto s = to_hom_quadratic_set(HomQuasigroup(*q, FiniteMap::identity(q->size())));
      return emit(with_value(doc, s.base()), out, err, "S: quasigroup -> quadratic");
    }
    if (auto h = hom_quasigroup(doc)) {
      require_endomorphism(*h);
      return emit(with_value(doc, to_hom_quadratic_set(*h)), out, err, "S: hom-quasigroup -> hom-quadratic");
    }
    throw Usage{std::string("S expects a quasigroup, hom-quasigroup or linear-spec document, got ") +
                to_string(doc.kind())};
  }
  throw Usage{"direction must be G or S"};
}

int cmd_twist(const std::string& file, std::ostream& out, std::ostream& err) {
  const auto doc = load(file);
  if (auto h = hom_quadratic(doc)) return emit(with_value(doc, twist_solution(*h)), out, err, "twisted solution");
  if (auto h = hom_quasigroup(doc)) {
    require_endomorphism(*h);
    return emit(with_value(doc, twist(*h)), out, err, "twisted hom-quasigroup");
  }
  throw Usage{std::string("twist expects a hom-quasigroup, linear-spec or hom-quadratic document, got ") +
              to_string(doc.kind())};
}

int cmd_dual(const std::string& file, std::ostream& out, std::ostream& err) {
  const auto doc = load(file);
  if (auto h = hom_quadratic(doc)) return emit(with_value(doc, dual_solution(*h)), out, err, "dual solution");
  if (auto q = std::get_if<QuadraticSet>(&doc.value)) {
    auto d = dual_solution(HomQuadraticSet(*q, FiniteMap::identity(q->size())));
    return emit(with_value(doc, d.base()), out, err, "dual solution");
  }
  if (auto q = std::get_if<LeftQuasigroup>(&doc.value))
    return emit(with_value(doc, dual_op(*q)), out, err, "dual operation");
  if (auto h = hom_quasigroup(doc)) {
    auto dual = HomQuasigroup::unchecked(dual_op(h->base()), h->alpha());
    return emit(with_value(doc, std::move(dual)), out, err, "dual operation");
  }
  throw Usage{"dual: unsupported kind"};
}

// ---- enumerate / verify --------------------------------------------------

StructureDocument as_document(const HomQuasigroup& h) { return StructureDocument{h, {}}; }

int cmd_enumerate(std::size_t n, const std::vector<std::string>& filters, const std::string& alpha, bool up_to_iso,
                  bool list, std::size_t jobs, std::ostream& out, std::ostream& err) {
  EnumerationFilter filter;
  json filter_names = json::array();
  for (const auto& f : filters) {
    filter_names.push_back(f);
    if (f == "all") continue;
    auto p = parse_predicate(f);
    if (!p) {
      std::string names;
      for (const auto& name : predicate_names()) names += (names.empty() ? "" : ", ") + name;
      throw Usage{"unknown filter \"" + f + "\"; available: " + names};
    }
    filter.predicates.push_back(*p);
  }
  auto a = parse_alpha_class(alpha);
  if (!a) throw Usage{"unknown alpha class \"" + alpha + "\"; available: any, id, constant, bijective"};
  filter.alpha = *a;
  filter.up_to_iso = up_to_iso;

  json report;
  report["schema"] = kSchema;
  report["kind"] = "count-table";
  report["n"] = n;
  report["filters"] = filter_names;
  report["alpha"] = alpha;
  report["up_to_iso"] = up_to_iso;
  std::size_t count = 0;
  if (up_to_iso) {
    const auto t = count_up_to_iso(n, filter, jobs);
    count = t.classes;
    report["count"] = t.classes;
    report["raw"] = t.raw;
    report["orbit_sum"] = t.orbit_sum;
  } else {
    filter.up_to_iso = false;
    const auto raw = enumerate_hom_quasigroups(n, filter, jobs);
    count = raw.size();
    report["count"] = raw.size();
  }
  if (list) {
    json structures = json::array();
    for (const auto& h : enumerate_hom_quasigroups(n, filter, jobs)) structures.push_back(to_json(as_document(h)));
    report["structures"] = std::move(structures);
  }
  out << write_json(report);
  err << "order " << n << ": " << count << (up_to_iso ? " classes" : " structures") << "\n";
  return kExitHolds;
}

int cmd_verify(std::size_t n, std::size_t jobs, std::ostream& out, std::ostream& err) {
  const auto suite = verify_theorem_suite(n, jobs);
  json report;
  report["schema"] = kSchema;
  report["kind"] = "theorem-suite";
  report["n"] = n;
  report["passed"] = suite.passed();
  json theorems = json::array();
  std::size_t failures = 0;
  for (const auto& t : suite.theorems) {
    failures += t.failures;
    theorems.push_back(json{{"name", t.name},
                            {"statement", t.statement},
                            {"instances", t.instances},
                            {"failures", t.failures},
                            {"counterexamples", t.counterexamples}});
  }
  report["theorems"] = std::move(theorems);
  out << write_json(report);
  err << "verify " << n << ": " << suite.theorems.size() << " theorems, " << failures << " failures\n";
  return suite.passed() ? kExitHolds : kExitFails;
}

// ---- example -------------------------------------------------------------

struct ExampleParams {
  std::optional<std::size_t> n;
  std::string alpha, f, g, lam, phi, psi;
  std::optional<Elem> m, p;
  std::optional<std::size_t> d;
  std::string which = "both";
};

StructureDocument named(DocumentValue value, const std::string& name) {
  return StructureDocument{std::move(value), {{"name", name}}};
}

std::string required(const std::string& value, const char* option) {
  if (value.empty()) throw Usage{std::string("missing ") + option};
  return value;
}

int cmd_example(const std::string& name, const ExampleParams& p, std::ostream& out, std::ostream& err) {
  if (name == "trivial") {
    const auto n = p.n.value_or(2);
    auto alpha = p.alpha.empty() ? FiniteMap::identity(n) : parse_map(p.alpha, "--alpha", n);
    return emit(named(trivial_solution(n, alpha), "trivial"), out, err, "trivial solution");
  }
  if (name == "permutation") {
    const auto f = parse_elems(required(p.f, "--f"), "--f");
    auto alpha = p.alpha.empty() ? FiniteMap::identity(f.size()) : parse_map(p.alpha, "--alpha", f.size());
    auto sol = permutation_solution(parse_map(p.f, "--f", f.size()), parse_map(required(p.g, "--g"), "--g", f.size()),
                                    alpha);
    return emit(named(sol, "permutation"), out, err, "permutation solution");
  }
  if (name == "theta") {
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : parse_rows(required(p.lam, "--lam"), "--lam")) {
      rows.emplace_back();
      for (long long v : r) {
        if (v < 0) throw Usage{"--lam: negative entry"};
        rows.back().push_back(static_cast<Elem>(v));
      }
    }
    SquareTable lam;
    try {
      lam = SquareTable::from_rows(rows);
    } catch (const DomainError& e) {
      throw Usage{std::string("--lam: ") + e.what()};
    }
    return emit(named(theta_solution(lam), "theta"), out, err, "theta solution");
  }
  if (name == "right-zero") {
    const auto n = p.n.value_or(3);
    auto alpha = p.alpha.empty() ? FiniteMap::identity(n) : parse_map(p.alpha, "--alpha", n);
    return emit(named(right_zero_hom_cycle_set(n, alpha), "right-zero"), out, err, "right-zero Hom-cycle set");
  }
  if (name == "linear") {
    if (!p.m || !p.d) throw Usage{"linear needs --m and --d"};
    try {
      LinearSpec spec{*p.m, *p.d, ModMatrix(*p.m, parse_rows(required(p.phi, "--phi"), "--phi")),
                      ModMatrix(*p.m, parse_rows(required(p.psi, "--psi"), "--psi")),
                      ModMatrix(*p.m, parse_rows(required(p.alpha, "--alpha"), "--alpha"))};
      if (spec.phi.dim() != spec.d || spec.psi.dim() != spec.d || spec.alpha.dim() != spec.d)
        throw Usage{"matrices must be d x d"};
      return emit(named(spec, "linear"), out, err, "linear spec");
    } catch (const DomainError& e) {
      throw Usage{e.what()};
    }
  }
  if (name == "four-order") return emit(named(example_4order(), "four-order"), out, err, "order-4 Hom-cycle set");
  if (name == "matrix") {
    const auto prime = p.p.value_or(3);
    auto [original, twisted] = example_matrix(prime);
    const std::string tag = "matrix-p" + std::to_string(prime);
    if (p.which == "original") return emit(named(original, tag), out, err, "matrix example");
    if (p.which == "twist") return emit(named(twisted, tag + "-twist"), out, err, "matrix example twist");
    if (p.which != "both") throw Usage{"--which must be original, twist or both"};
    json pair;
    pair["schema"] = kSchema;
    pair["kind"] = "document-pair";
    pair["original"] = to_json(named(original, tag));
    pair["twist"] = to_json(named(twisted, tag + "-twist"));
    out << write_json(pair);
    err << "matrix example and its twist\n";
    return kExitHolds;
  }
  throw Usage{"unknown example \"" + name +
              "\"; available: trivial, permutation, theta, right-zero, linear, four-order, matrix"};
}

// ---- failure reporting ---------------------------------------------------

int report_failure(const Failure& f, std::ostream& out, std::ostream& err) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "failure";
  j["error"] = f.error;
  j["message"] = f.message;
  j["witness"] = f.witness;
  out << write_json(j);
  err << "failed: " << f.message;
  if (!f.witness.empty()) err << " [" << join(f.witness) << "]";
  err << "\n";
  return kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hom-cycle sets and Hom-Yang-Baxter solutions on finite sets", "hombax"};
  app.require_subcommand(1);
  std::size_t jobs = 1;

  std::string file, predicate, direction, name;
  std::size_t n = 0;
  std::vector<std::string> filters;
  std::string alpha_class = "any";
  bool up_to_iso = false, list = false;
  ExampleParams params;

  auto* check = app.add_subcommand("check", "evaluate a predicate on a document");
  check->add_option("file", file, "document")->required();
  check->add_option("predicate", predicate, "predicate name")->required();

  auto* convert = app.add_subcommand("convert", "apply G or S");
  convert->add_option("file", file, "document")->required();
  convert->add_option("--to", direction, "G or S")->required();

  auto* twist_cmd = app.add_subcommand("twist", "twist a Hom-quasigroup or solution");
  twist_cmd->add_option("file", file, "document")->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual operation or dual solution");
  dual_cmd->add_option("file", file, "document")->required();

  auto* enumerate = app.add_subcommand("enumerate", "count or list Hom-quasigroups of order n");
  enumerate->add_option("n", n, "order")->required();
  enumerate->add_option("--filter", filters, "predicate filter, repeatable");
  enumerate->add_option("--alpha", alpha_class, "any, id, constant or bijective");
  enumerate->add_flag("--up-to-iso", up_to_iso, "count isomorphism classes");
  enumerate->add_flag("--list", list, "include the structures");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the theorem sweep up to order n");
  verify->add_option("n", n, "order")->required();
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* example = app.add_subcommand("example", "emit a built-in example document");
  example->add_option("name", name, "trivial, permutation, theta, right-zero, linear, four-order, matrix")
      ->required();
  example->add_option("--n", params.n, "carrier size");
  example->add_option("--alpha", params.alpha, "map as a,b,c (linear: matrix rows r1;r2)");
  example->add_option("--f", params.f, "map f");
  example->add_option("--g", params.g, "map g");
  example->add_option("--lam", params.lam, "lam rows r1;r2;...");
  example->add_option("--m", params.m, "modulus");
  example->add_option("--d", params.d, "dimension");
  example->add_option("--phi", params.phi, "matrix rows");
  example->add_option("--psi", params.psi, "matrix rows");
  example->add_option("--p", params.p, "odd prime");
  example->add_option("--which", params.which, "original, twist or both");

  // "--G" / "--S" are accepted as shorthands for "--to G" / "--to S".
  std::vector<std::string> argv;
  for (const auto& a : args) argv.push_back(a == "--G" ? "--to=G" : a == "--S" ? "--to=S" : a);
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(file, predicate, out, err);
    if (*convert) return cmd_convert(file, direction, out, err);
    if (*twist_cmd) return cmd_twist(file, out, err);
    if (*dual_cmd) return cmd_dual(file, out, err);
    if (*enumerate) return cmd_enumerate(n, filters, alpha_class, up_to_iso, list, jobs, out, err);
    if (*verify) return cmd_verify(n, jobs, out, err);
    if (*example) return cmd_example(name, params, out, err);
  } catch (const Usage& u) {
    err << u.message << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    return report_failure(f, out, err);
  } catch (const DegenerateError& e) {
    return report_failure({"degenerate", e.what(), e.witness()}, out, err);
  } catch (const NotInvertibleError& e) {
    return report_failure({"not-invertible", e.what(), {e.first(), e.second()}}, out, err);
  } catch (const DomainError& e) {
    return report_failure({"domain", e.what(), {}}, out, err);
  } catch (const TheoremViolation& e) {
    return report_failure({"theorem-violation", e.what(), {}}, out, err);
  }
  err << "no command\n";
  return kExitUsage;
}

}  // namespace hombax
