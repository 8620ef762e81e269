#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "support/fixtures.hpp"

using namespace kanrew;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result kanrew_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return fixtures::data_path(name); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("kanrew_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("initial") {
  auto r = kanrew_cli({"initial", data("example4.kan")});
  CHECK(r.code == cli::kOk);
  CHECK(lines(r.out) == std::vector<std::string>{
                           "# 5 term rules, 1 path rule",
                           "x1|b1 -> y1|id_B2",
                           "x2|b1 -> y2|id_B2",
                           "x3|b1 -> y1|id_B2",
                           "y1|b2.b3 -> x1|id_B1",
                           "y2|b2.b3 -> x2|id_B1",
                           "b1.b2.b3 -> b4",
                       });
}

TEST_CASE("complete") {
  auto r = kanrew_cli({"complete", data("example4.kan")});
  CHECK(r.code == cli::kOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 13);
  CHECK(out[0] == "status: completed");
  CHECK(out[1] == "passes: 2");
  CHECK(out[2] == "added: 3");
  CHECK(out[3] == "rules: 9");
  CHECK(out[5] == "x1|b4 -> x1|id_B1");
}

TEST_CASE("tables reports the enumeration limit") {
  auto r = kanrew_cli({"tables", data("example4.kan")});
  CHECK(r.code == cli::kOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 10);
  CHECK(out[0] == "enumeration limit exceeded: complete rewrite system is:");
}

TEST_CASE("tables for a finite example") {
  auto r = kanrew_cli({"tables", data("swap.kan")});
  CHECK(r.code == cli::kOk);
  CHECK(lines(r.out) == std::vector<std::string>{
                           "K(B) = { x|id_B, x|b }",
                           "action b: x|id_B -> x|b; x|b -> x|id_B;",
                           "epsilon: x -> x|id_B;",
                       });
}

TEST_CASE("regex") {
  auto r = kanrew_cli({"regex", data("swap.kan")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "K(B) := x|(id_B+b)\n");
  auto big = kanrew_cli({"regex", data("example4.kan")});
  CHECK(big.code == cli::kOk);
  CHECK(lines(big.out).size() == 3);
}

TEST_CASE("reduce and act") {
  auto r = kanrew_cli({"reduce", "x3|b4", data("example4.kan")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "x1|id_B1\n");

  auto a = kanrew_cli({"act", "x1|b5.b3.b4.b4.b5", "b3", data("example4.kan")});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == "x1|b5.b3.b4.b4.b5.b3\n");

  auto bad = kanrew_cli({"act", "y1|id", "b1", data("example4.kan")});
  CHECK(bad.code == cli::kValidationError);
}

TEST_CASE("output is reproducible") {
  for (const char* cmd : {"initial", "complete", "tables", "regex", "automaton"}) {
    CAPTURE(cmd);
    auto a = kanrew_cli({cmd, data("example4.kan")});
    auto b = kanrew_cli({cmd, data("example4.kan")});
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
}

TEST_CASE("machine output round-trips") {
  auto r = kanrew_cli({"complete", "--format", "machine", data("example4.kan")});
  REQUIRE(r.code == cli::kOk);
  auto doc = parse_document(r.out);
  REQUIRE(doc.rules);
  CHECK(doc.rules->status == RulesStatus::completed);
  CHECK(doc.rules->system.size() == 9);
  CHECK(doc.presentation == fixtures::example4());

  auto file = write_temp("completed.kan", r.out);
  auto reduced = kanrew_cli({"reduce", "x3|b4", file});
  CHECK(reduced.out == "x1|id_B1\n");
  auto again = kanrew_cli({"regex", file});
  CHECK(again.out == kanrew_cli({"regex", data("example4.kan")}).out);

  // A document that claims completion is used as is.
  auto verbose = kanrew_cli({"regex", "-v", file});
  CHECK(verbose.err.find("pass") == std::string::npos);
  auto fresh = kanrew_cli({"regex", "-v", data("example4.kan")});
  CHECK(fresh.err.find("pass 1") != std::string::npos);
}

TEST_CASE("initial rules in machine form can be completed later") {
  auto r = kanrew_cli({"initial", "--format", "machine", data("example4.kan")});
  REQUIRE(r.code == cli::kOk);
  auto file = write_temp("initial.kan", r.out);
  auto c = kanrew_cli({"complete", file});
  CHECK(c.out == kanrew_cli({"complete", data("example4.kan")}).out);
}

TEST_CASE("order overrides") {
  auto r = kanrew_cli({"initial", "--arrow-order", "b5,b4,b3,b2,b1", data("commutative.kan")});
  CHECK(r.code == cli::kValidationError);

  auto flipped = kanrew_cli({"initial", "--arrow-order", "b,a", data("commutative.kan")});
  CHECK(flipped.code == cli::kOk);
  CHECK(lines(flipped.out).back() == "a.b -> b.a");

  auto elements = kanrew_cli(
      {"initial", "--element-order", "r,q,p,v,u", data("coequalizer.kan")});
  CHECK(elements.code == cli::kOk);
  CHECK(lines(elements.out)[1] == "u|id_B -> p|id_B");
}

TEST_CASE("enumeration limit flag and environment") {
  auto limited = kanrew_cli({"tables", "--enum-limit", "1", data("swap.kan")});
  CHECK(limited.out.rfind("enumeration limit exceeded", 0) == 0);

  setenv("KANREW_ENUM_LIMIT", "1", 1);
  auto from_env = kanrew_cli({"tables", data("swap.kan")});
  auto flag_wins = kanrew_cli({"tables", "--enum-limit", "2", data("swap.kan")});
  setenv("KANREW_ENUM_LIMIT", "bogus", 1);
  auto bad_env = kanrew_cli({"tables", data("swap.kan")});
  unsetenv("KANREW_ENUM_LIMIT");

  CHECK(from_env.out.rfind("enumeration limit exceeded", 0) == 0);
  CHECK(flag_wins.out.rfind("K(B)", 0) == 0);
  CHECK(bad_env.code == cli::kUsage);
}

TEST_CASE("completion limits") {
  auto file = write_temp("braid.kan", R"({"ObA": ["A"], "ArrA": [], "ObB": ["B"],
    "ArrB": [["a", "B", "B"], ["b", "B", "B"]], "RelB": [["a.b.a", "b.a.b"]],
    "FObA": {"A": "B"}, "FArrA": {}, "XObA": {"A": ["x"]}, "XArrA": {}})");
  auto r = kanrew_cli({"complete", "--max-passes", "3", file});
  CHECK(r.code == cli::kCompletionLimit);
  CHECK(r.out.rfind("status: limit-exceeded", 0) == 0);

  auto t = kanrew_cli({"tables", "--max-rules", "5", file});
  CHECK(t.code == cli::kCompletionLimit);
  CHECK(t.out.empty());
}

TEST_CASE("error exit codes") {
  CHECK(kanrew_cli({}).code == cli::kUsage);
  CHECK(kanrew_cli({"frobnicate", data("swap.kan")}).code == cli::kUsage);
  CHECK(kanrew_cli({"validate", "/nonexistent/file.kan"}).code == cli::kUsage);
  CHECK(kanrew_cli({"tables", "--enum-limit", "0", data("swap.kan")}).code == cli::kUsage);
  CHECK(kanrew_cli({"tables", "--format", "xml", data("swap.kan")}).code == cli::kUsage);

  auto malformed = kanrew_cli({"validate", write_temp("bad.kan", "{\n\"ObA\": [}")});
  CHECK(malformed.code == cli::kParseError);
  CHECK(malformed.err.find("line 2") != std::string::npos);

  auto text = fixtures::read_data("example4.kan");
  text.replace(text.find("\"b4\"]]"), 4, "\"b9\"");
  auto invalid = kanrew_cli({"validate", write_temp("invalid.kan", text)});
  CHECK(invalid.code == cli::kValidationError);
  CHECK(invalid.err.find("b9") != std::string::npos);
  CHECK(invalid.err.find("/RelB/0/1") != std::string::npos);

  auto unknown = kanrew_cli({"reduce", "z|id", data("example4.kan")});
  CHECK(unknown.code == cli::kValidationError);
  CHECK(unknown.err.find("'z'") != std::string::npos);
}

TEST_CASE("validate") {
  auto r = kanrew_cli({"validate", data("example4.kan")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out ==
        "valid: 2 domain objects, 2 domain arrows, 3 objects, 5 arrows, 1 relation, 5 elements\n");
}
