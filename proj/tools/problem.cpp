#include "problem.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vba/errors.hpp"

namespace vba::cli {

namespace {

using nlohmann::json;

// 1-based line and column of a byte offset (the byte itself 1-based).
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list");
  return v;
}

double as_value(const json& v, const std::string& where) {
  if (v.is_boolean()) return v.get<bool>() ? 1.0 : 0.0;
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    if (s == "-inf" || s == "-infinity") return -std::numeric_limits<double>::infinity();
  }
  fail(where, "expected a number");
}

VarId lookup(const VariableSystem& system, const json& v, const std::string& where) {
  const auto name = as_string(v, where);
  const auto id = system.find(name);
  if (!id) fail(where, "unknown variable \"" + name + "\"");
  return *id;
}

Value frame_value(const VariableSystem& system, VarId var, const json& v,
                  const std::string& where) {
  const auto& frame = system.variable(var).frame;
  if (v.is_number_unsigned()) {
    const auto index = v.get<std::uint64_t>();
    if (index >= frame.size()) fail(where, "value index out of range");
    return static_cast<Value>(index);
  }
  const auto label = as_string(v, where);
  for (std::size_t i = 0; i < frame.size(); ++i)
    if (frame[i] == label) return static_cast<Value>(i);
  fail(where, "\"" + label + "\" is not in the frame of " + system.variable(var).name);
}

std::vector<VarId> scope_of(const VariableSystem& system, const json& factor,
                            const std::string& where) {
  std::vector<VarId> order;
  const auto& list = as_array(field(factor, "scope", where), where + ".scope");
  for (std::size_t i = 0; i < list.size(); ++i)
    order.push_back(lookup(system, list[i], where + ".scope[" + std::to_string(i) + "]"));
  if (std::set<VarId>(order.begin(), order.end()).size() != order.size())
    fail(where + ".scope", "variable listed twice");
  return order;
}

std::vector<double> table_of(const json& factor, const std::string& where) {
  std::vector<double> values;
  const auto& list = as_array(field(factor, "table", where), where + ".table");
  for (std::size_t i = 0; i < list.size(); ++i)
    values.push_back(as_value(list[i], where + ".table[" + std::to_string(i) + "]"));
  return values;
}

Table dense_factor(const TableAlgebra& alg, const json& factor, const std::string& where) {
  if (factor.contains("entries")) fail(where, "entries are only accepted for sparse-max-times");
  const auto order = scope_of(alg.system(), factor, where);
  try {
    return alg.make_ordered(order, table_of(factor, where));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

SparsePotential sparse_factor(const SparseAlgebra& alg, const json& factor,
                              const std::string& where) {
  const auto& system = alg.system();
  const auto order = scope_of(system, factor, where);
  const Domain scope{order};
  std::vector<std::pair<Configuration, double>> entries;
  auto add = [&](const std::vector<Value>& listed, double value) {
    std::vector<Value> canonical(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) canonical[scope.position(order[i])] = listed[i];
    entries.emplace_back(Configuration(scope, std::move(canonical)), value);
  };
  if (factor.contains("table")) {
    const auto values = table_of(factor, where);
    std::vector<std::size_t> dims;
    for (VarId v : order) dims.push_back(system.frame_size(v));
    std::size_t expected = 1;
    for (std::size_t d : dims) expected *= d;
    if (values.size() != expected)
      fail(where + ".table", "needs " + std::to_string(expected) + " values, got " +
                                 std::to_string(values.size()));
    std::size_t i = 0;
    for_each_assignment(dims, [&](const std::vector<Value>& listed) { add(listed, values[i++]); });
  } else {
    const auto& list = as_array(field(factor, "entries", where), where + ".entries");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = where + ".entries[" + std::to_string(k) + "]";
      const auto& assignment = as_array(field(list[k], "assignment", at), at + ".assignment");
      if (assignment.size() != order.size())
        fail(at + ".assignment", "expected " + std::to_string(order.size()) + " values");
      std::vector<Value> listed;
      for (std::size_t i = 0; i < order.size(); ++i)
        listed.push_back(frame_value(system, order[i], assignment[i],
                                     at + ".assignment[" + std::to_string(i) + "]"));
      add(listed, as_value(field(list[k], "value", at), at + ".value"));
    }
  }
  try {
    return alg.make(scope, entries);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

ProblemOptions options_of(const VariableSystem& system, const json& doc) {
  ProblemOptions opts;
  const auto it = doc.find("options");
  if (it == doc.end()) return opts;
  const json& o = *it;
  if (!o.is_object()) fail("options", "expected an object");
  if (o.contains("heuristic")) {
    const auto name = as_string(o["heuristic"], "options.heuristic");
    opts.heuristic = parse_heuristic(name);
    if (!opts.heuristic) fail("options.heuristic", "unknown heuristic \"" + name + "\"");
  }
  if (o.contains("order")) {
    const auto& list = as_array(o["order"], "options.order");
    for (std::size_t i = 0; i < list.size(); ++i)
      opts.order.push_back(lookup(system, list[i], "options.order[" + std::to_string(i) + "]"));
  }
  if (o.contains("picker")) {
    const auto name = as_string(o["picker"], "options.picker");
    opts.picker = parse_picker(name);
    if (!opts.picker) fail("options.picker", "unknown picker \"" + name + "\"");
  }
  if (o.contains("cap")) {
    if (!o["cap"].is_number_unsigned() || o["cap"].get<std::uint64_t>() == 0)
      fail("options.cap", "expected a positive integer");
    opts.cap = o["cap"].get<std::size_t>();
  }
  return opts;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte);
    std::string what = e.what();
    if (const auto at = what.find("column "); at != std::string::npos) {
      if (const auto colon = what.find(": ", at); colon != std::string::npos) what = what.substr(colon + 2);
    }
    throw ParseError(what, line, column);
  }
  if (!doc.is_object()) fail("document", "expected an object");

  const std::string semiring_name = as_string(field(doc, "semiring", "document"), "semiring");
  auto system = std::make_shared<VariableSystem>();
  const auto& vars = as_array(field(doc, "variables", "document"), "variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string where = "variables[" + std::to_string(i) + "]";
    const auto name = as_string(field(vars[i], "name", where), where + ".name");
    std::vector<std::string> frame;
    const auto& labels = as_array(field(vars[i], "frame", where), where + ".frame");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto& l = labels[k];
      frame.push_back(l.is_number() ? l.dump()
                                    : as_string(l, where + ".frame[" + std::to_string(k) + "]"));
    }
    try {
      system->add(name, std::move(frame));
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  ProblemOptions options = options_of(*system, doc);

  const auto& factors = as_array(field(doc, "factors", "document"), "factors");
  if (semiring_name == "sparse-max-times") {
    Factorization<SparseAlgebra> model{SparseAlgebra(system), {}};
    for (std::size_t i = 0; i < factors.size(); ++i)
      model.factors.push_back(
          sparse_factor(model.algebra, factors[i], "factors[" + std::to_string(i) + "]"));
    return Problem{semiring_name, system, std::move(model), std::move(options)};
  }
  const auto semiring = parse_semiring(semiring_name);
  if (!semiring) fail("semiring", "unknown semiring \"" + semiring_name + "\"");
  {
    Factorization<TableAlgebra> model{TableAlgebra(system, *semiring), {}};
    for (std::size_t i = 0; i < factors.size(); ++i)
      model.factors.push_back(
          dense_factor(model.algebra, factors[i], "factors[" + std::to_string(i) + "]"));
    return Problem{semiring_name, system, std::move(model), std::move(options)};
  }
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

SolveOptions solve_options(const Problem& problem, std::optional<Heuristic> heuristic,
                           std::optional<Picker> picker) {
  SolveOptions opts;
  opts.tree.order = problem.options.order;
  if (heuristic)
    opts.tree.heuristic = *heuristic;
  else if (problem.options.heuristic)
    opts.tree.heuristic = *problem.options.heuristic;
  else if (!problem.options.order.empty())
    opts.tree.heuristic = Heuristic::given;
  opts.picker = picker ? *picker : problem.options.picker.value_or(Picker::lexicographic);
  return opts;
}

std::vector<VarId> parse_variable_list(const VariableSystem& system, std::string_view list) {
  std::vector<VarId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view name = list.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      const auto id = system.find(name);
      if (!id) throw DomainError("unknown variable \"" + std::string(name) + "\"");
      if (std::find(out.begin(), out.end(), *id) != out.end())
        throw DomainError("variable \"" + std::string(name) + "\" listed twice");
      out.push_back(*id);
    }
    start = end + 1;
  }
  return out;
}

}  // namespace vba::cli
