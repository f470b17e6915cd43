#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "problem.hpp"
#include "vba/errors.hpp"

using namespace vba;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(VBA_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, SolveFixture) {
  const auto r = run({"solve", data("max_plus_fixture.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["assignment"], (json{{"u", "1"}, {"v", "1"}}));
  EXPECT_EQ(j["objective"], 8);
  EXPECT_EQ(j["satisfiable"], true);
}

TEST(Cli, MarginalFixture) {
  const auto r = run({"marginal", data("max_plus_fixture.json"), "--scope", "u"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["table"], (json{6, 8}));
}

TEST(Cli, MarginalUsesListedOrder) {
  const auto uv = json::parse(run({"marginal", data("max_plus_fixture.json"), "--scope", "u,v"}).out);
  const auto vu = json::parse(run({"marginal", data("max_plus_fixture.json"), "--scope", "v,u"}).out);
  EXPECT_EQ(uv["table"], (json{3, 6, 5, 8}));
  EXPECT_EQ(vu["table"], (json{3, 5, 6, 8}));
  EXPECT_EQ(json::parse(run({"marginal", data("max_plus_fixture.json"), "--scope", ""}).out)["table"],
            (json{8}));
}

TEST(Cli, UnknownQueryVariable) {
  const auto r = run({"marginal", data("max_plus_fixture.json"), "--scope", "u,w"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown variable \"w\""), std::string::npos) << r.err;
}

TEST(Cli, SolveAll) {
  const auto r = run({"solve-all", data("counterexample.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["solutions"], (json{{{"x", "0"}, {"y", "0"}}, {{"x", "1"}, {"y", "1"}}}));
  const auto capped = json::parse(run({"solve-all", data("ties.json"), "--cap", "1"}).out);
  EXPECT_EQ(capped["truncated"], true);
}

TEST(Cli, UnsatisfiableExitsOne) {
  const auto r = run({"solve", data("unsatisfiable.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["satisfiable"], false);
}

TEST(Cli, OtherSemirings) {
  const auto path = json::parse(run({"solve", data("shortest_path.json")}).out);
  EXPECT_EQ(path["objective"], 3);
  EXPECT_EQ(path["assignment"], (json{{"leg1", "B"}, {"leg2", "D"}, {"leg3", "F"}}));
  const auto sparse = json::parse(run({"solve", data("sparse_weights.json")}).out);
  EXPECT_EQ(sparse["assignment"], (json{{"weather", "sun"}, {"traffic", "light"}}));
  EXPECT_DOUBLE_EQ(sparse["objective"].get<double>(), 0.4);
}

TEST(Cli, MalformedFileReportsPosition) {
  const auto r = run({"solve", data("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed.json:7:37:"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"solve", data("max_plus_fixture.json"), "--picker", "random"}).code, 2);
  EXPECT_EQ(run({"check-axioms", "--semiring", "nope"}).code, 2);
}

TEST(Cli, DemoCounterexample) {
  const auto r = run({"demo-counterexample"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("LHS c_phi^{x,y} = {(0,0), (1,1)}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("RHS = {(0,0), (0,1), (1,0), (1,1)}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Theorem 8.1 REFUTED"), std::string::npos);
}

TEST(Cli, PropertySuites) {
  const auto ax = run({"check-axioms", "--trials", "20", "--seed", "3"});
  EXPECT_EQ(ax.code, 0) << ax.out;
  EXPECT_EQ(json::parse(ax.out)["results"].size(), 6u);
  const auto ext = run({"check-extensibility", "--trials", "30", "--semiring", "max-plus,boolean"});
  EXPECT_EQ(ext.code, 0) << ext.out;
  // The zero-heavy max-times law breaks the converse direction.
  const auto full = run({"check-extensibility", "--full", "--trials", "200", "--semiring", "max-times"});
  EXPECT_EQ(full.code, 1);
  EXPECT_TRUE(json::parse(full.out)["results"][0].contains("witness"));
  EXPECT_EQ(run({"check-family", "--trials", "10"}).code, 0);
}

TEST(Cli, SeedChangesNothingButSamples) {
  EXPECT_EQ(run({"check-axioms", "--trials", "10", "--seed", "5"}).out,
            run({"check-axioms", "--trials", "10", "--seed", "5"}).out);
}

TEST(ProblemFile, Errors) {
  EXPECT_THROW(cli::parse_problem(R"({"semiring": "max-plus", "variables": []})"), ConfigError);
  EXPECT_THROW(cli::parse_problem(R"({"semiring": "sum", "variables": [], "factors": []})"),
               ConfigError);
  try {
    cli::parse_problem(R"({"semiring": "max-plus",
  "variables": [{"name": "u", "frame": ["0", "1"]}],
  "factors": [{"scope": ["q"], "table": [1, 2]}]})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("factors[0].scope[0]"), std::string::npos) << e.what();
  }
  try {
    cli::parse_problem("{\n  \"semiring\": \"max-plus\",\n  oops\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ProblemFile, SparseEntriesAndOptions) {
  const auto p = cli::parse_problem(R"({"semiring": "sparse-max-times",
    "variables": [{"name": "a", "frame": ["lo", "hi"]}, {"name": "b", "frame": [0, 1, 2]}],
    "factors": [{"scope": ["b", "a"], "entries": [{"assignment": [2, "hi"], "value": 0.5}]}],
    "options": {"heuristic": "min-degree", "picker": "first-found", "cap": 7, "order": ["a", "b"]}})");
  const auto& model = std::get<Factorization<SparseAlgebra>>(p.model);
  ASSERT_EQ(model.factors.size(), 1u);
  EXPECT_EQ(model.algebra.evaluate(model.factors[0], Configuration({VarId{0}, VarId{1}}, {1, 2})),
            0.5);
  EXPECT_EQ(p.options.cap, 7u);
  const auto opts = cli::solve_options(p);
  EXPECT_EQ(opts.tree.heuristic, Heuristic::min_degree);
  EXPECT_EQ(opts.picker, Picker::first_found);
  EXPECT_EQ(cli::solve_options(p, Heuristic::given).tree.heuristic, Heuristic::given);
}
