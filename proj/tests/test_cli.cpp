#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hombax/cli.hpp"
#include "hombax/document.hpp"
#include "json.hpp"

using namespace hombax;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HOMBAX_FIXTURES_DIR) + "/" + name; }
std::string data(const std::string& name) { return std::string(HOMBAX_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string scratch(const std::string& name, const std::string& contents) {
  auto dir = fs::temp_directory_path() / "hombax-cli-tests";
  fs::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("fixtures round-trip byte for byte") {
  for (auto name : {"trivial-2.json", "example-4order.json", "example-matrix-p3.json", "right-zero-3.json"}) {
    const auto text = slurp(fixture(name));
    REQUIRE_FALSE(text.empty());
    CHECK(serialize_document(parse_document(text)) == text);
  }
}

TEST_CASE("check") {
  auto ok = run({"check", fixture("example-4order.json"), "hom-cycle-set"});
  CHECK(ok.code == kExitHolds);
  CHECK(json::parse(ok.out)["verdict"] == "holds");

  auto nd = run({"check", fixture("example-4order.json"), "non-degenerate"});
  CHECK(nd.code == kExitFails);
  auto report = json::parse(nd.out);
  CHECK(report["verdict"] == "fails");
  CHECK(report["witness"] == json::array({1, 1, 2, 3}));

  auto unknown = run({"check", fixture("example-4order.json"), "no-such-predicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("hom-cycle-set") != std::string::npos);

  CHECK(run({"check", data("malformed.json"), "cycle-set"}).code == kExitUsage);
  CHECK(run({"check", fixture("trivial-2.json"), "hybe"}).code == kExitHolds);
  CHECK(run({"check", fixture("trivial-2.json"), "lndi-hybe-five"}).code == kExitHolds);
  CHECK(run({"check", fixture("right-zero-3.json"), "hom-cycle-set"}).code == kExitHolds);
  CHECK(run({"check", fixture("example-matrix-p3.json"), "hom-cycle-set"}).code == kExitFails);
  CHECK(run({"check", fixture("example-matrix-p3.json"), "cycle-set"}).code == kExitHolds);
  CHECK(run({"check", "/nonexistent/file.json", "cycle-set"}).code == kExitUsage);
}

TEST_CASE("parse errors name the field or position") {
  auto bad = run({"check", data("bad-row.json"), "cycle-set"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("op[1]") != std::string::npos);
  auto malformed = run({"check", data("malformed.json"), "cycle-set"});
  CHECK(malformed.err.find("line") != std::string::npos);
  CHECK_THROWS_AS(parse_document(R"({"schema": "hombax/2", "kind": "quasigroup", "n": 1, "op": [[0]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_document(R"({"schema": "hombax/1", "kind": "quasigroup", "n": 1, "op": [[0.5]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_document(R"({"schema": "hombax/1", "kind": "quasigroup", "n": 1, "op": [[0]], "extra": 1})"),
      ParseError);
  CHECK_THROWS_AS(parse_document(R"({"schema": "hombax/1", "kind": "quasigroup", "n": 2, "op": [[0, 1]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("[]"), ParseError);
}

TEST_CASE("convert") {
  auto g = run({"convert", fixture("trivial-2.json"), "--G"});
  REQUIRE(g.code == kExitHolds);
  auto doc = json::parse(g.out);
  CHECK(doc["kind"] == "hom-quasigroup");
  CHECK(doc["op"] == json::parse("[[0, 1], [0, 1]]"));
  CHECK(doc["alpha"] == json::array({1, 0}));

  // S then G reproduces the file
  auto s = run({"convert", fixture("example-4order.json"), "--S"});
  REQUIRE(s.code == kExitHolds);
  auto back = run({"convert", scratch("four-s.json", s.out), "--to", "G"});
  REQUIRE(back.code == kExitHolds);
  CHECK(back.out == slurp(fixture("example-4order.json")));

  auto deg = run({"convert", data("degenerate-lambda.json"), "--G"});
  CHECK(deg.code == kExitFails);
  CHECK(json::parse(deg.out)["kind"] == "failure");

  CHECK(run({"convert", fixture("example-4order.json"), "--G"}).code == kExitUsage);
  CHECK(run({"convert", fixture("example-4order.json"), "--to", "X"}).code == kExitUsage);
}

TEST_CASE("twist and dual") {
  auto once = run({"twist", fixture("example-matrix-p3.json")});
  REQUIRE(once.code == kExitHolds);
  auto path = scratch("matrix-twist.json", once.out);
  CHECK(run({"check", path, "hom-cycle-set"}).code == kExitHolds);
  auto twice = run({"twist", path});
  REQUIRE(twice.code == kExitHolds);
  CHECK(twice.out == slurp(fixture("example-matrix-p3.json")));

  auto dual = run({"dual", fixture("example-4order.json")});
  CHECK(dual.code == kExitFails);
  auto failure = json::parse(dual.out);
  CHECK(failure["witness"] == json::array({1, 1, 2, 3}));

  auto d = run({"dual", fixture("trivial-2.json")});
  CHECK(d.code == kExitHolds);
  CHECK(d.out == slurp(fixture("trivial-2.json")));
}

TEST_CASE("enumerate and verify") {
  auto e = run({"enumerate", "2", "--filter", "cycle-set", "--alpha", "id", "--up-to-iso"});
  REQUIRE(e.code == kExitHolds);
  CHECK(json::parse(e.out)["count"] == 2);

  auto big = run({"enumerate", "5"});
  CHECK(big.code == kExitUsage);
  CHECK(big.err.find("e+13") != std::string::npos);

  CHECK(run({"enumerate", "2", "--filter", "bogus"}).code == kExitUsage);
  CHECK(run({"enumerate", "2", "--alpha", "bogus"}).code == kExitUsage);
  CHECK(run({"enumerate", "x"}).code == kExitUsage);

  auto listed = json::parse(run({"enumerate", "2", "--filter", "hom-cycle-set", "--list"}).out);
  CHECK(listed["count"] == 6);

  auto v = run({"verify", "3"});
  CHECK(v.code == kExitHolds);
  auto suite = json::parse(v.out);
  for (const auto& t : suite["theorems"]) CHECK(t["failures"] == 0);

  CHECK(run({"enumerate", "3", "--jobs", "1"}).out == run({"enumerate", "3", "--jobs", "8"}).out);
  CHECK(run({"verify", "2", "--jobs", "1"}).out == run({"verify", "2", "--jobs", "8"}).out);
}

TEST_CASE("examples") {
  auto four = run({"example", "four-order"});
  REQUIRE(four.code == kExitHolds);
  CHECK(four.out == slurp(fixture("example-4order.json")));

  auto m = run({"example", "matrix", "--p", "3"});
  REQUIRE(m.code == kExitHolds);
  auto pair = json::parse(m.out);
  CHECK(pair["kind"] == "document-pair");

  auto orig = run({"example", "matrix", "--p", "3", "--which", "original"});
  CHECK(orig.out == slurp(fixture("example-matrix-p3.json")));

  CHECK(run({"example", "trivial", "--n", "2", "--alpha", "1,0"}).out == slurp(fixture("trivial-2.json")));
  CHECK(run({"example", "right-zero", "--n", "3", "--alpha", "0,0,0"}).out == slurp(fixture("right-zero-3.json")));
  CHECK(run({"example", "permutation", "--f", "1,0", "--g", "1,0"}).code == kExitHolds);
  CHECK(run({"example", "theta", "--lam", "0,1;0,1"}).code == kExitHolds);
  CHECK(run({"example", "theta", "--lam", "1,0;0,1"}).code != kExitHolds);
  CHECK(run({"example", "linear", "--m", "3", "--d", "1", "--phi", "0", "--psi", "1", "--alpha", "1"}).code ==
        kExitHolds);
  CHECK(run({"example", "matrix", "--p", "4"}).code != kExitHolds);
  CHECK(run({"example", "nope"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}
