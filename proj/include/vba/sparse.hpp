#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vba/config.hpp"
#include "vba/domain.hpp"

namespace vba {

/// Nonnegative potential stored by its support: configurations of the scope
/// with a positive value. Absent configurations are worth 0, and no entry is
/// ever 0 (normal form). Keys are value vectors in canonical scope order.
class SparsePotential {
 public:
  using Entries = std::map<std::vector<Value>, double>;

  const Domain& scope() const noexcept { return scope_; }
  const Entries& entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  /// Support entries as configurations over the scope.
  std::vector<Configuration> support() const;

 private:
  friend class SparseAlgebra;
  SparsePotential(const VariableSystem* system, Domain scope, Entries entries)
      : system_(system), scope_(std::move(scope)), entries_(std::move(entries)) {}

  const VariableSystem* system_;
  Domain scope_;
  Entries entries_;
};

/// Max-times algebra of sparse potentials over a variable system:
/// combination multiplies entries of merge-compatible support pairs,
/// projection keeps the maximum per restricted key. The extension family is
/// the argmax family over the full frames (absent configurations count 0).
class SparseAlgebra {
 public:
  using Valuation = SparsePotential;

  explicit SparseAlgebra(std::shared_ptr<const VariableSystem> system);

  const VariableSystem& system() const noexcept { return *system_; }
  const ConfigurationSystem& configurations() const noexcept { return *system_; }

  /// Potential from explicit entries; zeros are dropped, negative values and
  /// repeated configurations rejected.
  SparsePotential make(Domain scope,
                       const std::vector<std::pair<Configuration, double>>& entries) const;
  /// Potential from a dense vector of scores in canonical layout.
  SparsePotential from_scores(const Domain& scope, std::vector<double> scores) const;

  Domain label(const SparsePotential& f) const { return f.scope(); }
  SparsePotential combine(const SparsePotential& f, const SparsePotential& g) const;
  SparsePotential project(const SparsePotential& f, const Domain& target) const;
  SparsePotential identity() const;
  bool equal(const SparsePotential& f, const SparsePotential& g, double tolerance) const;
  std::string describe(const SparsePotential& f) const;

  double score(const SparsePotential& f, const Configuration& z) const;
  double evaluate(const SparsePotential& f, const Configuration& z) const { return score(f, z); }
  double to_user(double score) const { return score; }
  double multiply(double a, double b) const { return a * b; }
  double one() const { return 1.0; }
  double zero() const { return 0.0; }
  double default_tolerance() const { return 1e-9; }

  std::vector<Configuration> extension_set(const SparsePotential& f,
                                           const Configuration& x) const;
  std::optional<Configuration> first_extension(const SparsePotential& f,
                                               const Configuration& x) const;

 private:
  void check(const SparsePotential& f) const;

  std::shared_ptr<const VariableSystem> system_;
};

/// The support configuration system of a potential: only configurations
/// that restrict from a support entry exist.
SupportConfigurationSystem support_system(const SparsePotential& f);

}  // namespace vba
