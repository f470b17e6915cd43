#include "vba/config.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "vba/errors.hpp"

namespace vba {

Configuration::Configuration(Domain scope, std::vector<Value> values)
    : scope_(std::move(scope)), values_(std::move(values)) {
  if (scope_.size() != values_.size())
    throw DomainError("configuration over " + vba::to_string(scope_) +
                      " needs " + std::to_string(scope_.size()) +
                      " values, got " + std::to_string(values_.size()));
}

Value Configuration::at(VarId v) const {
  const std::size_t pos = scope_.position(v);
  if (pos == scope_.size())
    throw DomainError("variable v" + std::to_string(index_of(v)) +
                      " is not in scope " + vba::to_string(scope_));
  return values_[pos];
}

std::string to_string(const Configuration& c) {
  if (c.empty()) return "<>";
  std::string s = "(";
  for (std::size_t i = 0; i < c.values().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.values()[i]);
  }
  return s + ")";
}

std::string to_string(std::span<const Configuration> set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += ", ";
    s += to_string(set[i]);
  }
  return s + "}";
}

Configuration restrict(const Configuration& x, const Domain& target) {
  if (!x.scope().includes(target))
    throw DomainError("cannot restrict configuration over " +
                      to_string(x.scope()) + " to " + to_string(target) +
                      ": missing " +
                      to_string(difference(target, x.scope())));
  std::vector<Value> values;
  values.reserve(target.size());
  std::size_t pos = 0;
  for (VarId v : target) {
    while (x.scope().vars()[pos] != v) ++pos;
    values.push_back(x.values()[pos]);
  }
  return {target, std::move(values)};
}

namespace {

// First shared variable on which x and y disagree.
std::optional<VarId> conflict(const Configuration& x, const Configuration& y) {
  const auto& xs = x.scope().vars();
  const auto& ys = y.scope().vars();
  std::size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    if (xs[i] < ys[j]) {
      ++i;
    } else if (ys[j] < xs[i]) {
      ++j;
    } else {
      if (x.values()[i] != y.values()[j]) return xs[i];
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

Configuration merge_tuples(std::span<const Configuration> configs,
                           const std::function<std::string(VarId)>& name) {
  if (configs.empty()) throw DomainError("merge: empty configuration list");
  Domain scope;
  for (const auto& c : configs) scope = join(scope, c.scope());
  std::vector<Value> values(scope.size());
  std::vector<const Configuration*> owner(scope.size(), nullptr);
  for (const auto& c : configs) {
    for (std::size_t i = 0; i < c.scope().size(); ++i) {
      const std::size_t pos = scope.position(c.scope().vars()[i]);
      if (owner[pos] && values[pos] != c.values()[i])
        throw IncompatibleError("cannot merge " + to_string(*owner[pos]) +
                                " and " + to_string(c) +
                                ": they disagree on " +
                                name(c.scope().vars()[i]));
      values[pos] = c.values()[i];
      owner[pos] = &c;
    }
  }
  return {std::move(scope), std::move(values)};
}

std::string numeric_name(VarId v) { return "v" + std::to_string(index_of(v)); }

}  // namespace

bool compatible(const Configuration& x, const Configuration& y) {
  return !conflict(x, y).has_value();
}

Configuration merge(std::span<const Configuration> configs) {
  return merge_tuples(configs, numeric_name);
}

Configuration merge(const Configuration& x, const Configuration& y) {
  const Configuration pair[] = {x, y};
  return merge(pair);
}

// ---------------------------------------------------------------------------
// ConfigurationSystem defaults: everything through gamma.

bool ConfigurationSystem::contains(const Configuration& x) const {
  const auto set = gamma(x.scope());
  return std::binary_search(set.begin(), set.end(), x);
}

Configuration ConfigurationSystem::restrict(const Configuration& x,
                                            const Domain& s) const {
  return vba::restrict(x, s);
}

bool ConfigurationSystem::compatible(const Configuration& x,
                                     const Configuration& y) const {
  const Domain joined = join(x.scope(), y.scope());
  for (const auto& z : gamma(joined))
    if (restrict(z, x.scope()) == x && restrict(z, y.scope()) == y) return true;
  return false;
}

Configuration ConfigurationSystem::merge(
    std::span<const Configuration> configs) const {
  if (configs.empty()) throw DomainError("merge: empty configuration list");
  Domain joined;
  for (const auto& c : configs) joined = join(joined, c.scope());
  for (const auto& z : gamma(joined)) {
    const bool ok = std::all_of(configs.begin(), configs.end(), [&](const auto& c) {
      return restrict(z, c.scope()) == c;
    });
    if (ok) return z;
  }
  throw IncompatibleError("configurations " + to_string(configs) +
                          " have no merger");
}

// ---------------------------------------------------------------------------

VariableSystem::VariableSystem(std::vector<Variable> variables) {
  for (auto& v : variables) add(std::move(v.name), std::move(v.frame));
}

VariableSystem VariableSystem::with_frame_sizes(std::span<const std::size_t> sizes) {
  VariableSystem system;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<std::string> frame;
    for (std::size_t k = 0; k < sizes[i]; ++k) frame.push_back(std::to_string(k));
    system.add("x" + std::to_string(i), std::move(frame));
  }
  return system;
}

VarId VariableSystem::add(std::string name, std::vector<std::string> frame) {
  if (frame.empty()) throw DomainError("variable '" + name + "' has an empty frame");
  if (find(name)) throw DomainError("duplicate variable '" + name + "'");
  std::set<std::string> labels(frame.begin(), frame.end());
  if (labels.size() != frame.size())
    throw DomainError("variable '" + name + "' has duplicate frame labels");
  variables_.push_back({std::move(name), std::move(frame)});
  return VarId{static_cast<std::uint32_t>(variables_.size() - 1)};
}

const VariableSystem::Variable& VariableSystem::variable(VarId v) const {
  if (index_of(v) >= variables_.size())
    throw DomainError("unknown variable v" + std::to_string(index_of(v)));
  return variables_[index_of(v)];
}

std::optional<VarId> VariableSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return VarId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

void VariableSystem::check_scope(const Domain& s) const {
  for (VarId v : s) variable(v);
}

std::vector<std::size_t> VariableSystem::dims(const Domain& s) const {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (VarId v : s) out.push_back(frame_size(v));
  return out;
}

std::size_t VariableSystem::frame_count(const Domain& s) const {
  std::size_t n = 1;
  for (VarId v : s) {
    const std::size_t k = frame_size(v);
    if (n > std::numeric_limits<std::size_t>::max() / k)
      return std::numeric_limits<std::size_t>::max();
    n *= k;
  }
  return n;
}

Domain VariableSystem::variables() const {
  return Domain::first_n(static_cast<std::uint32_t>(variables_.size()));
}

std::vector<Configuration> VariableSystem::gamma(const Domain& s) const {
  check_scope(s);
  std::vector<Configuration> out;
  const auto d = dims(s);
  for_each_assignment(d, [&](const std::vector<Value>& values) {
    out.emplace_back(s, values);
  });
  return out;
}

bool VariableSystem::contains(const Configuration& x) const {
  for (std::size_t i = 0; i < x.scope().size(); ++i) {
    const VarId v = x.scope().vars()[i];
    if (index_of(v) >= variables_.size()) return false;
    if (x.values()[i] >= frame_size(v)) return false;
  }
  return true;
}

Configuration VariableSystem::restrict(const Configuration& x,
                                       const Domain& s) const {
  return vba::restrict(x, s);
}

bool VariableSystem::compatible(const Configuration& x,
                                const Configuration& y) const {
  return vba::compatible(x, y);
}

Configuration VariableSystem::merge(std::span<const Configuration> configs) const {
  return merge_tuples(configs, [this](VarId v) {
    return index_of(v) < variables_.size() ? "'" + variable(v).name + "'"
                                           : numeric_name(v);
  });
}

std::string VariableSystem::format(const Configuration& x) const {
  std::string s;
  for (std::size_t i = 0; i < x.scope().size(); ++i) {
    if (i) s += ", ";
    const auto& var = variable(x.scope().vars()[i]);
    s += var.name + "=" + var.frame.at(x.values()[i]);
  }
  return s.empty() ? "<>" : s;
}

// ---------------------------------------------------------------------------

SupportConfigurationSystem::SupportConfigurationSystem(
    Domain top, std::vector<Configuration> top_set)
    : top_(std::move(top)), top_set_(std::move(top_set)) {
  if (top_set_.empty())
    throw DomainError("support configuration system needs a nonempty top set");
  for (const auto& c : top_set_)
    if (c.scope() != top_)
      throw DomainError("support configuration " + to_string(c) +
                        " does not have scope " + to_string(top_));
  std::sort(top_set_.begin(), top_set_.end());
  top_set_.erase(std::unique(top_set_.begin(), top_set_.end()), top_set_.end());
}

std::vector<Configuration> SupportConfigurationSystem::gamma(const Domain& s) const {
  if (!top_.includes(s))
    throw DomainError("scope " + to_string(s) + " is outside the system scope " +
                      to_string(top_));
  std::set<Configuration> out;
  for (const auto& c : top_set_) out.insert(vba::restrict(c, s));
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------

DomainPairSampler random_domain_pairs(Domain vars) {
  return [vars = std::move(vars)](Rng& rng) {
    auto pick = [&] {
      std::vector<VarId> chosen;
      std::bernoulli_distribution coin(0.5);
      for (VarId v : vars)
        if (coin(rng)) chosen.push_back(v);
      return Domain(std::move(chosen));
    };
    Domain s = pick();
    Domain t = pick();
    return std::pair{std::move(s), std::move(t)};
  };
}

namespace {

void check_pair(const ConfigurationSystem& system, const Domain& s,
                const Domain& t, PropertyReport& report) {
  const Domain common = meet(s, t);
  const auto xs = system.gamma(s);
  const auto ys = system.gamma(t);
  for (const auto& x : xs) {
    const Configuration xc = system.restrict(x, common);
    for (const auto& y : ys) {
      if (system.restrict(y, common) != xc) continue;
      report.check(system.compatible(x, y), [&] {
        return "x=" + to_string(x) + " over " + to_string(s) + " and y=" +
               to_string(y) + " over " + to_string(t) +
               " agree on the common scope but have no merger";
      });
    }
  }
}

}  // namespace

PropertyReport check_merge_friendly(const ConfigurationSystem& system,
                                    const DomainPairSampler& sampler,
                                    std::size_t trials, Rng& rng) {
  PropertyReport report{.property = "merge-friendly"};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++report.trials;
    const auto [s, t] = sampler(rng);
    check_pair(system, s, t, report);
  }
  return report;
}

PropertyReport check_merge_friendly_exhaustive(const ConfigurationSystem& system) {
  PropertyReport report{.property = "merge-friendly"};
  const auto scopes = subsets(system.variables());
  for (const auto& s : scopes) {
    for (const auto& t : scopes) {
      ++report.trials;
      check_pair(system, s, t, report);
    }
  }
  return report;
}

void for_each_assignment(std::span<const std::size_t> dims,
                         const std::function<void(const std::vector<Value>&)>& fn) {
  for (std::size_t d : dims)
    if (d == 0) return;
  std::vector<Value> values(dims.size(), 0);
  while (true) {
    fn(values);
    bool advanced = false;
    for (std::size_t pos = dims.size(); pos-- > 0;) {
      if (++values[pos] < dims[pos]) {
        advanced = true;
        break;
      }
      values[pos] = 0;
    }
    if (!advanced) return;
  }
}

}  // namespace vba
