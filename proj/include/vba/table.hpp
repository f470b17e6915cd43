#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <string_view>
#include <vector>

#include "vba/config.hpp"
#include "vba/domain.hpp"

namespace vba {

/// Semirings backing dense tables. Combination is the semiring product,
/// projection the maximum.
///   boolean   : AND over {0,1}, projection OR
///   max_plus  : sum of weights
///   min_plus  : sum of costs, minimized; stored as negated max-plus weights
///   max_times : product of nonnegative reals
enum class Semiring { boolean, max_plus, min_plus, max_times };

std::string_view to_string(Semiring s);
std::optional<Semiring> parse_semiring(std::string_view name);

/// Dense table over a scope, cells in canonical layout: row-major over the
/// scope's variables in canonical order, last variable fastest.
class Table {
 public:
  const Domain& scope() const noexcept { return scope_; }
  Semiring semiring() const noexcept { return semiring_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// Internal scores (min-plus tables hold negated costs).
  const std::vector<double>& scores() const noexcept { return scores_; }
  std::size_t offset(const Configuration& z) const;

 private:
  friend class TableAlgebra;
  Table(const VariableSystem* system, Semiring semiring, Domain scope,
        std::vector<std::size_t> dims, std::vector<double> scores)
      : system_(system),
        semiring_(semiring),
        scope_(std::move(scope)),
        dims_(std::move(dims)),
        scores_(std::move(scores)) {}

  const VariableSystem* system_;
  Semiring semiring_;
  Domain scope_;
  std::vector<std::size_t> dims_;
  std::vector<double> scores_;
};

/// Semiring-induced valuation algebra of dense tables over a variable
/// system, together with its argmax extension family:
///   E_f(x) = { z over label(f) : z restricts to x, f(z) = f^{scope(x)}(x) }.
class TableAlgebra {
 public:
  using Valuation = Table;

  TableAlgebra(std::shared_ptr<const VariableSystem> system, Semiring semiring);

  Semiring semiring() const noexcept { return semiring_; }
  const VariableSystem& system() const noexcept { return *system_; }
  const ConfigurationSystem& configurations() const noexcept { return *system_; }
  std::shared_ptr<const VariableSystem> shared_system() const { return system_; }

  /// Table from user values in canonical layout. Validates the value range
  /// of the semiring; min-plus costs are negated internally.
  Table make(Domain scope, std::vector<double> values) const;
  /// Table from user values laid out row-major in `order` (any permutation
  /// of the scope, last entry fastest).
  Table make_ordered(std::span<const VarId> order, std::span<const double> values) const;
  Table from_scores(const Domain& scope, std::vector<double> scores) const;

  Domain label(const Table& f) const { return f.scope(); }
  Table combine(const Table& f, const Table& g) const;
  Table project(const Table& f, const Domain& target) const;
  Table identity() const;
  bool equal(const Table& f, const Table& g, double tolerance) const;
  std::string describe(const Table& f) const;

  double score(const Table& f, const Configuration& z) const;
  double evaluate(const Table& f, const Configuration& z) const;
  /// User-facing values of the cells, canonical layout.
  std::vector<double> values(const Table& f) const;
  double to_user(double score) const;
  double from_user(double value) const;
  double multiply(double a, double b) const;
  double one() const;
  double zero() const;
  double default_tolerance() const;

  std::vector<Configuration> extension_set(const Table& f, const Configuration& x) const;
  std::optional<Configuration> first_extension(const Table& f, const Configuration& x) const;

 private:
  void check(const Table& f) const;

  std::shared_ptr<const VariableSystem> system_;
  Semiring semiring_;
};

}  // namespace vba
