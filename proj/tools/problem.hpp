#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vba/config.hpp"
#include "vba/factorization.hpp"
#include "vba/join_tree.hpp"
#include "vba/solution.hpp"
#include "vba/sparse.hpp"
#include "vba/table.hpp"

namespace vba::cli {

struct ProblemOptions {
  std::optional<Heuristic> heuristic;
  std::vector<VarId> order;
  std::optional<Picker> picker;
  std::optional<std::size_t> cap;
};

/// A problem file: variables, factors over one semiring, and default
/// solver options.
///
///   { "semiring": "max-plus",
///     "variables": [{"name": "u", "frame": ["0", "1"]}, ...],
///     "factors": [{"scope": ["u", "v"], "table": [1, 4, 0, 3]},
///                 {"scope": ["u"], "entries": [{"assignment": ["1"], "value": 2}]}],
///     "options": {"heuristic": "min-fill", "order": ["v", "u"],
///                 "picker": "lexicographic", "cap": 1000} }
///
/// Tables are row-major over the listed scope, last variable fastest.
/// Entries are accepted for sparse-max-times only; assignments give frame
/// labels or value indices. Table values may be numbers, booleans or the
/// strings "inf" / "-inf".
struct Problem {
  std::string semiring;
  std::shared_ptr<const VariableSystem> system;
  std::variant<Factorization<TableAlgebra>, Factorization<SparseAlgebra>> model;
  ProblemOptions options;
};

/// ParseError with line and column for malformed documents, ConfigError
/// naming the offending field otherwise.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::filesystem::path& path);

/// Tree and picker options from the file, overridden by explicit values.
SolveOptions solve_options(const Problem& problem, std::optional<Heuristic> heuristic = {},
                           std::optional<Picker> picker = {});

/// Variables named in a comma-separated list, in the listed order.
std::vector<VarId> parse_variable_list(const VariableSystem& system, std::string_view list);

}  // namespace vba::cli
