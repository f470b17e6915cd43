#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "problem.hpp"
#include "vba/collect.hpp"
#include "vba/errors.hpp"
#include "vba/oracle.hpp"
#include "vba/solution.hpp"
#include "vba/suites.hpp"

namespace vba::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kInputError = 2;

ordered_json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == std::trunc(v) && std::fabs(v) < 9.0e15) return static_cast<long long>(v);
  return v;
}

ordered_json assignment(const VariableSystem& system, const Configuration& z) {
  ordered_json a = ordered_json::object();
  for (std::size_t i = 0; i < z.scope().size(); ++i) {
    const auto& var = system.variable(z.scope().vars()[i]);
    a[var.name] = var.frame[z.values()[i]];
  }
  return a;
}

std::vector<Instance> instances_from(const std::string& list) {
  if (list.empty() || list == "all")
    return {all_instances().begin(), all_instances().end()};
  std::vector<Instance> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = std::min(list.find(',', start), list.size());
    const std::string name = list.substr(start, end - start);
    const auto i = parse_instance(name);
    if (!i) throw ConfigError("unknown semiring \"" + name + "\"");
    out.push_back(*i);
    start = end + 1;
  }
  return out;
}

ordered_json property_json(const PropertyReport& r) {
  ordered_json j;
  j["property"] = r.property;
  j["passed"] = r.passed();
  j["trials"] = r.trials;
  j["checks"] = r.checks;
  j["violations"] = r.violations;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

struct Settings {
  std::string file;
  std::string scope;
  std::string heuristic;
  std::string picker;
  std::size_t cap = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string semiring;
  bool full = false;
};

std::optional<Heuristic> heuristic_of(const Settings& s) {
  if (s.heuristic.empty()) return std::nullopt;
  auto h = parse_heuristic(s.heuristic);
  if (!h) throw ConfigError("unknown heuristic \"" + s.heuristic + "\"");
  return h;
}

std::optional<Picker> picker_of(const Settings& s) {
  if (s.picker.empty()) return std::nullopt;
  auto p = parse_picker(s.picker);
  if (!p) throw ConfigError("unknown picker \"" + s.picker + "\"");
  return p;
}

int marginal(const Settings& s, std::ostream& out) {
  const Problem p = load_problem(s.file);
  const auto listed = parse_variable_list(*p.system, s.scope);
  const Domain query{listed};
  ordered_json j;
  j["semiring"] = p.semiring;
  j["scope"] = ordered_json::array();
  for (VarId v : listed) j["scope"].push_back(p.system->variable(v).name);
  std::visit(
      [&](const auto& model) {
        const auto& alg = model.algebra;
        const auto f = query_marginal(alg, std::span(model.factors), query,
                                      solve_options(p, heuristic_of(s)).tree);
        std::vector<std::size_t> dims;
        for (VarId v : listed) dims.push_back(p.system->frame_size(v));
        ordered_json table = ordered_json::array();
        for_each_assignment(dims, [&](const std::vector<Value>& values) {
          std::vector<Value> canonical(listed.size());
          for (std::size_t i = 0; i < listed.size(); ++i)
            canonical[query.position(listed[i])] = values[i];
          table.push_back(number(alg.evaluate(f, Configuration(query, std::move(canonical)))));
        });
        j["table"] = std::move(table);
      },
      p.model);
  out << j.dump(2) << "\n";
  return kOk;
}

int solve_one(const Settings& s, std::ostream& out) {
  const Problem p = load_problem(s.file);
  const SolveOptions opts = solve_options(p, heuristic_of(s), picker_of(s));
  ordered_json j;
  j["semiring"] = p.semiring;
  bool satisfiable = true;
  std::visit(
      [&](const auto& model) {
        const Solution sol = solve(model.algebra, std::span(model.factors), opts);
        j["assignment"] = assignment(*p.system, sol.assignment);
        j["objective"] = number(sol.objective);
        j["satisfiable"] = sol.satisfiable;
        satisfiable = sol.satisfiable;
      },
      p.model);
  out << j.dump(2) << "\n";
  return satisfiable ? kOk : kNoSolution;
}

int solve_every(const Settings& s, std::ostream& out) {
  const Problem p = load_problem(s.file);
  const SolveOptions opts = solve_options(p, heuristic_of(s));
  const std::size_t cap = s.cap ? s.cap : p.options.cap.value_or(default_solution_cap);
  ordered_json j;
  j["semiring"] = p.semiring;
  bool satisfiable = true;
  std::visit(
      [&](const auto& model) {
        const AllSolutions all = solve_all(model.algebra, std::span(model.factors), opts.tree, cap);
        satisfiable = all.score != model.algebra.zero();
        j["objective"] = number(all.objective);
        j["satisfiable"] = satisfiable;
        j["count"] = all.solutions.size();
        j["truncated"] = all.truncated;
        j["rejected"] = all.rejected;
        ordered_json list = ordered_json::array();
        for (const auto& z : all.solutions) list.push_back(assignment(*p.system, z));
        j["solutions"] = std::move(list);
      },
      p.model);
  out << j.dump(2) << "\n";
  return satisfiable ? kOk : kNoSolution;
}

int axioms(const Settings& s, std::ostream& out) {
  const auto instances = instances_from(s.semiring);
  ordered_json j;
  j["suite"] = "axioms";
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  ordered_json results = ordered_json::array();
  bool ok = true;
  for (Instance i : instances) {
    Rng rng(s.seed);
    const AxiomReport r = axiom_suite(i, s.trials, rng);
    ordered_json row;
    row["semiring"] = std::string(to_string(i));
    row["passed"] = r.all_passed();
    row["failures"] = r.failures();
    ordered_json per = ordered_json::object();
    for (const auto& a : r.axioms) per[a.name] = a.failed;
    row["failed"] = std::move(per);
    for (const auto& a : r.axioms)
      if (a.witness) {
        row["witness"] = a.name + ": " + *a.witness;
        break;
      }
    ok = ok && r.all_passed();
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  out << j.dump(2) << "\n";
  return ok ? kOk : kNoSolution;
}

int extensibility(const Settings& s, std::ostream& out) {
  const auto instances = instances_from(s.semiring);
  ordered_json j;
  j["suite"] = s.full ? "fully piecewise extensibility" : "piecewise extensibility";
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  ordered_json results = ordered_json::array();
  bool ok = true;
  for (Instance i : instances) {
    Rng rng(s.seed);
    const PropertyReport r = extensibility_suite(i, s.full, s.trials, rng);
    ordered_json row = property_json(r);
    row["semiring"] = std::string(to_string(i));
    ok = ok && r.passed();
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  out << j.dump(2) << "\n";
  return ok ? kOk : kNoSolution;
}

int family(const Settings& s, std::ostream& out) {
  const auto instances = instances_from(s.semiring);
  ordered_json j;
  j["suite"] = "extension family";
  j["seed"] = s.seed;
  j["trials"] = s.trials;
  ordered_json results = ordered_json::array();
  bool ok = true;
  for (Instance i : instances) {
    Rng rng(s.seed);
    const PropertyReport r = family_suite(i, s.trials, rng);
    ordered_json row = property_json(r);
    row["semiring"] = std::string(to_string(i));
    ok = ok && r.passed();
    results.push_back(std::move(row));
  }
  j["results"] = std::move(results);
  out << j.dump(2) << "\n";
  return ok ? kOk : kNoSolution;
}

int counterexample(std::ostream& out) {
  const auto report = reproduce_counterexample();
  out << format(report);
  return report.refuted ? kOk : kNoSolution;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local computation over valuation algebras", "vba"};
  app.require_subcommand(1);
  Settings s;

  auto* marg = app.add_subcommand("marginal", "Marginal of the factor product to a scope");
  marg->add_option("problem", s.file, "Problem file")->required();
  marg->add_option("--scope", s.scope, "Comma-separated variables")->required();
  marg->add_option("--heuristic", s.heuristic, "min-fill, min-degree or given");

  auto* one = app.add_subcommand("solve", "One optimal configuration");
  one->add_option("problem", s.file, "Problem file")->required();
  one->add_option("--heuristic", s.heuristic, "min-fill, min-degree or given");
  one->add_option("--picker", s.picker, "lexicographic or first-found");

  auto* all = app.add_subcommand("solve-all", "Every optimal configuration");
  all->add_option("problem", s.file, "Problem file")->required();
  all->add_option("--cap", s.cap, "Maximum number of configurations kept")
      ->check(CLI::PositiveNumber);
  all->add_option("--heuristic", s.heuristic, "min-fill, min-degree or given");

  auto add_suite = [&](const char* name, const char* help, std::size_t trials) {
    auto* cmd = app.add_subcommand(name, help);
    s.trials = trials;
    cmd->add_option("--trials", s.trials, "Random trials per semiring");
    cmd->add_option("--seed", s.seed, "Random seed");
    cmd->add_option("--semiring", s.semiring,
                    "Comma-separated: boolean, max-plus, min-plus, max-times, "
                    "max-times-positive, sparse-max-times (default all)");
    return cmd;
  };
  auto* ax = add_suite("check-axioms", "Randomized valuation algebra axiom checks", 500);
  auto* ext = add_suite("check-extensibility", "Randomized extensibility checks", 500);
  ext->add_flag("--full", s.full, "Check both directions");
  auto* fam = add_suite("check-family", "Randomized extension family checks", 200);
  auto* demo = app.add_subcommand("demo-counterexample",
                                  "Evaluate both sides of the solution decomposition on x = y");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*marg) return marginal(s, out);
    if (*one) return solve_one(s, out);
    if (*all) return solve_every(s, out);
    if (*ax) return axioms(s, out);
    if (*ext) return extensibility(s, out);
    if (*fam) return family(s, out);
    if (*demo) return counterexample(out);
  } catch (const ParseError& e) {
    err << "error: " << s.file << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << "\n";
    return kNoSolution;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace vba::cli
