#include "vba/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "vba/algebra.hpp"
#include "vba/errors.hpp"
#include "vba/format.hpp"

namespace vba {

namespace {

std::vector<Value> restrict_key(const Domain& scope, const std::vector<Value>& key,
                                const Domain& target) {
  std::vector<Value> out;
  out.reserve(target.size());
  for (VarId v : target) out.push_back(key[scope.position(v)]);
  return out;
}

}  // namespace

std::vector<Configuration> SparsePotential::support() const {
  std::vector<Configuration> out;
  out.reserve(entries_.size());
  for (const auto& [key, value] : entries_) out.emplace_back(scope_, key);
  return out;
}

SparseAlgebra::SparseAlgebra(std::shared_ptr<const VariableSystem> system)
    : system_(std::move(system)) {
  if (!system_) throw ConfigError("sparse algebra needs a variable system");
}

void SparseAlgebra::check(const SparsePotential& f) const {
  if (f.system_ != system_.get())
    throw InstanceMismatch("sparse potential from a different algebra");
}

SparsePotential SparseAlgebra::make(
    Domain scope, const std::vector<std::pair<Configuration, double>>& entries) const {
  const auto dims = system_->dims(scope);
  SparsePotential::Entries out;
  std::map<std::vector<Value>, bool> seen;
  for (const auto& [z, value] : entries) {
    if (z.scope() != scope)
      throw DomainError("sparse entry " + to_string(z) + " does not have scope " +
                        to_string(scope));
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (z.values()[i] >= dims[i])
        throw DomainError("sparse entry " + to_string(z) + " leaves the frame");
    if (std::isnan(value) || value < 0.0 || std::isinf(value))
      throw DomainError("sparse values must be finite and nonnegative, got " +
                        format_number(value));
    if (!seen.emplace(z.values(), true).second)
      throw DomainError("sparse entry " + to_string(z) + " given twice");
    if (value > 0.0) out.emplace(z.values(), value);
  }
  return SparsePotential(system_.get(), std::move(scope), std::move(out));
}

SparsePotential SparseAlgebra::from_scores(const Domain& scope,
                                           std::vector<double> scores) const {
  const auto dims = system_->dims(scope);
  std::size_t expected = 1;
  for (std::size_t d : dims) expected *= d;
  if (scores.size() != expected)
    throw DomainError("potential over " + to_string(scope) + " needs " +
                      std::to_string(expected) + " values");
  SparsePotential::Entries out;
  std::size_t i = 0;
  for_each_assignment(dims, [&](const std::vector<Value>& key) {
    const double v = scores[i++];
    if (v < 0.0 || std::isnan(v))
      throw DomainError("sparse values must be nonnegative");
    if (v > 0.0) out.emplace(key, v);
  });
  return SparsePotential(system_.get(), scope, std::move(out));
}

SparsePotential SparseAlgebra::combine(const SparsePotential& f,
                                       const SparsePotential& g) const {
  check(f);
  check(g);
  const Domain scope = join(f.scope(), g.scope());
  const Domain shared = meet(f.scope(), g.scope());
  // Bucket g's support by its shared key to join only compatible pairs.
  std::map<std::vector<Value>, std::vector<const SparsePotential::Entries::value_type*>> by_key;
  for (const auto& entry : g.entries())
    by_key[restrict_key(g.scope(), entry.first, shared)].push_back(&entry);
  SparsePotential::Entries out;
  std::vector<Value> key(scope.size());
  for (const auto& [fk, fv] : f.entries()) {
    auto it = by_key.find(restrict_key(f.scope(), fk, shared));
    if (it == by_key.end()) continue;
    for (const auto* ge : it->second) {
      for (std::size_t i = 0; i < f.scope().size(); ++i)
        key[scope.position(f.scope().vars()[i])] = fk[i];
      for (std::size_t i = 0; i < g.scope().size(); ++i)
        key[scope.position(g.scope().vars()[i])] = ge->first[i];
      const double v = fv * ge->second;
      if (v > 0.0) out.emplace(key, v);
    }
  }
  return SparsePotential(system_.get(), scope, std::move(out));
}

SparsePotential SparseAlgebra::project(const SparsePotential& f,
                                       const Domain& target) const {
  check(f);
  if (!f.scope().includes(target))
    throw DomainError("cannot project a potential over " + to_string(f.scope()) +
                      " to " + to_string(target) + ": " +
                      to_string(difference(target, f.scope())) + " not in its label");
  SparsePotential::Entries out;
  for (const auto& [key, value] : f.entries()) {
    auto [it, inserted] = out.emplace(restrict_key(f.scope(), key, target), value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  return SparsePotential(system_.get(), target, std::move(out));
}

SparsePotential SparseAlgebra::identity() const {
  return SparsePotential(system_.get(), Domain{}, {{std::vector<Value>{}, 1.0}});
}

bool SparseAlgebra::equal(const SparsePotential& f, const SparsePotential& g,
                          double tolerance) const {
  check(f);
  check(g);
  if (f.scope() != g.scope()) return false;
  auto value_in = [](const SparsePotential& p, const std::vector<Value>& key) {
    auto it = p.entries().find(key);
    return it == p.entries().end() ? 0.0 : it->second;
  };
  for (const auto& [key, value] : f.entries())
    if (!scores_equal(value, value_in(g, key), tolerance)) return false;
  for (const auto& [key, value] : g.entries())
    if (!scores_equal(value, value_in(f, key), tolerance)) return false;
  return true;
}

std::string SparseAlgebra::describe(const SparsePotential& f) const {
  std::string s = "sparse potential over " + to_string(f.scope()) + " {";
  bool first = true;
  for (const auto& [key, value] : f.entries()) {
    if (!first) s += ", ";
    first = false;
    s += to_string(Configuration(f.scope(), key)) + ": " + format_number(value);
  }
  return s + "}";
}

double SparseAlgebra::score(const SparsePotential& f, const Configuration& z) const {
  check(f);
  if (z.scope() != f.scope())
    throw DomainError("configuration over " + to_string(z.scope()) +
                      " does not match potential scope " + to_string(f.scope()));
  auto it = f.entries().find(z.values());
  return it == f.entries().end() ? 0.0 : it->second;
}

namespace {

struct Extensions {
  double best = 0.0;
  std::vector<const SparsePotential::Entries::value_type*> argmax;
};

Extensions scan(const SparsePotential& f, const Configuration& x) {
  if (!f.scope().includes(x.scope()))
    throw DomainError("cannot extend a configuration over " + to_string(x.scope()) +
                      " to a potential over " + to_string(f.scope()));
  Extensions e;
  for (const auto& entry : f.entries()) {
    if (restrict_key(f.scope(), entry.first, x.scope()) != x.values()) continue;
    if (entry.second > e.best) {
      e.best = entry.second;
      e.argmax.clear();
    }
    if (entry.second == e.best) e.argmax.push_back(&entry);
  }
  return e;
}

}  // namespace

std::vector<Configuration> SparseAlgebra::extension_set(const SparsePotential& f,
                                                        const Configuration& x) const {
  check(f);
  const Extensions e = scan(f, x);
  std::vector<Configuration> out;
  if (e.best > 0.0) {
    for (const auto* entry : e.argmax) out.emplace_back(f.scope(), entry->first);
    return out;
  }
  // Every extension scores 0: all configurations outside the support.
  for (const auto& z : system_->gamma(f.scope())) {
    if (!compatible(z, x)) continue;
    if (!f.entries().contains(z.values())) out.push_back(z);
  }
  return out;
}

std::optional<Configuration> SparseAlgebra::first_extension(const SparsePotential& f,
                                                            const Configuration& x) const {
  check(f);
  const Extensions e = scan(f, x);
  if (e.best > 0.0) return Configuration(f.scope(), e.argmax.front()->first);
  for (const auto& z : system_->gamma(f.scope()))
    if (compatible(z, x) && !f.entries().contains(z.values())) return z;
  return std::nullopt;
}

SupportConfigurationSystem support_system(const SparsePotential& f) {
  return SupportConfigurationSystem(f.scope(), f.support());
}

}  // namespace vba
