#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vba/domain.hpp"
#include "vba/report.hpp"

namespace vba {

/// Index of a value inside a variable's frame.
using Value = std::uint32_t;

/// An assignment of frame values to the variables of a scope. The
/// default-constructed configuration has empty scope: the unique element of
/// the bottom configuration set.
///
/// Ordering compares scopes first, then values in canonical variable order,
/// so for a fixed scope `<` is the lexicographic order.
class Configuration {
 public:
  Configuration() = default;
  Configuration(Domain scope, std::vector<Value> values);

  const Domain& scope() const noexcept { return scope_; }
  const std::vector<Value>& values() const noexcept { return values_; }
  bool empty() const noexcept { return scope_.empty(); }

  /// Value assigned to `v`; DomainError if `v` is not in scope.
  Value at(VarId v) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  Domain scope_;
  std::vector<Value> values_;
};

/// "(1,0)" for a two-variable configuration, "<>" for the empty one.
std::string to_string(const Configuration& c);
std::string to_string(std::span<const Configuration> set);

/// Tuple restriction: keep the values of the variables in `target`.
Configuration restrict(const Configuration& x, const Domain& target);
/// Tuples are compatible when they agree on their shared variables.
bool compatible(const Configuration& x, const Configuration& y);
/// Unique tuple merger. IncompatibleError names the conflicting variable.
Configuration merge(std::span<const Configuration> configs);
Configuration merge(const Configuration& x, const Configuration& y);

/// A configuration system: per-scope configuration sets with surjective
/// restriction maps. Configurations carry their scope, which keeps the sets
/// of distinct scopes disjoint.
class ConfigurationSystem {
 public:
  virtual ~ConfigurationSystem() = default;

  /// The top scope of the system.
  virtual Domain variables() const = 0;
  /// The configuration set of scope `s`, sorted.
  virtual std::vector<Configuration> gamma(const Domain& s) const = 0;

  virtual bool contains(const Configuration& x) const;
  virtual Configuration restrict(const Configuration& x, const Domain& s) const;
  /// True iff some configuration over the joined scope restricts to both.
  virtual bool compatible(const Configuration& x, const Configuration& y) const;
  /// Some merger of `configs`; IncompatibleError if none exists.
  virtual Configuration merge(std::span<const Configuration> configs) const;
};

/// Finite variables with frames of value labels. Variable ids are assigned
/// in declaration order, which is the canonical order.
class VariableSystem final : public ConfigurationSystem {
 public:
  struct Variable {
    std::string name;
    std::vector<std::string> frame;
  };

  VariableSystem() = default;
  explicit VariableSystem(std::vector<Variable> variables);
  /// Variables "x0", "x1", ... with frames labeled "0", "1", ...
  static VariableSystem with_frame_sizes(std::span<const std::size_t> sizes);

  VarId add(std::string name, std::vector<std::string> frame);

  std::size_t size() const noexcept { return variables_.size(); }
  const Variable& variable(VarId v) const;
  std::size_t frame_size(VarId v) const { return variable(v).frame.size(); }
  std::optional<VarId> find(std::string_view name) const;

  std::vector<std::size_t> dims(const Domain& s) const;
  /// |Omega_s|, saturating at SIZE_MAX.
  std::size_t frame_count(const Domain& s) const;

  Domain variables() const override;
  std::vector<Configuration> gamma(const Domain& s) const override;
  bool contains(const Configuration& x) const override;
  Configuration restrict(const Configuration& x, const Domain& s) const override;
  bool compatible(const Configuration& x, const Configuration& y) const override;
  Configuration merge(std::span<const Configuration> configs) const override;

  /// "u=1, v=0" using variable names and frame labels.
  std::string format(const Configuration& x) const;

 private:
  void check_scope(const Domain& s) const;

  std::vector<Variable> variables_;
};

/// A configuration system whose top set is an explicit list of tuples
/// (e.g. the support of a sparse potential). Lower sets are the restrictions
/// of the top set, so restriction is surjective by construction; such
/// systems need not be merge-friendly.
class SupportConfigurationSystem final : public ConfigurationSystem {
 public:
  SupportConfigurationSystem(Domain top, std::vector<Configuration> top_set);

  Domain variables() const override { return top_; }
  std::vector<Configuration> gamma(const Domain& s) const override;

 private:
  Domain top_;
  std::vector<Configuration> top_set_;
};

using DomainPairSampler = std::function<std::pair<Domain, Domain>(Rng&)>;

/// Uniformly random pairs of subsets of `vars`.
DomainPairSampler random_domain_pairs(Domain vars);

/// For sampled scopes s, t: whenever x_{s^t} = y_{s^t}, x and y must be
/// compatible. Every pair of Gamma_s x Gamma_t is examined.
PropertyReport check_merge_friendly(const ConfigurationSystem& system,
                                    const DomainPairSampler& sampler,
                                    std::size_t trials, Rng& rng);

/// Same property over every pair of scopes below the top scope.
PropertyReport check_merge_friendly_exhaustive(const ConfigurationSystem& system);

/// Calls `fn(values)` for every assignment of `dims` in lexicographic order
/// (last position fastest). With no dims, calls once with an empty vector.
void for_each_assignment(std::span<const std::size_t> dims,
                         const std::function<void(const std::vector<Value>&)>& fn);

}  // namespace vba
