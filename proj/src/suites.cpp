#include "vba/suites.hpp"

#include <array>
#include <memory>
#include <type_traits>

#include "vba/family.hpp"
#include "vba/sampling.hpp"
#include "vba/solution.hpp"

namespace vba {

namespace {

constexpr std::array kInstances = {Instance::boolean,   Instance::max_plus,
                                   Instance::min_plus,  Instance::max_times,
                                   Instance::max_times_positive, Instance::sparse};

ValueModel model_of(Instance i) {
  return i == Instance::max_times_positive ? ValueModel::positive_integers : ValueModel::standard;
}

Semiring semiring_of(Instance i) {
  switch (i) {
    case Instance::boolean: return Semiring::boolean;
    case Instance::max_plus: return Semiring::max_plus;
    case Instance::min_plus: return Semiring::min_plus;
    default: return Semiring::max_times;
  }
}

// Calls fn(alg, model) with the algebra of `instance` over `system`.
template <class Fn>
void with_algebra(Instance instance, std::shared_ptr<const VariableSystem> system, Fn&& fn) {
  if (instance == Instance::sparse)
    fn(SparseAlgebra(std::move(system)), model_of(instance));
  else
    fn(TableAlgebra(std::move(system), semiring_of(instance)), model_of(instance));
}

template <class Alg>
auto sampler_for(const Alg& alg, std::size_t max_scope, ValueModel model) {
  if constexpr (std::is_same_v<Alg, SparseAlgebra>)
    return sparse_sampler(alg, max_scope, model);
  else
    return table_sampler(alg, max_scope, model);
}

template <class Alg>
auto scoped_sampler_for(const Alg& alg, ValueModel model) {
  if constexpr (std::is_same_v<Alg, SparseAlgebra>)
    return scoped_sparse_sampler(alg, model);
  else
    return scoped_table_sampler(alg, model);
}

void absorb(PropertyReport& into, const PropertyReport& from) {
  into.trials += from.trials;
  into.checks += from.checks;
  into.violations += from.violations;
  if (!into.witness) into.witness = from.witness;
}

ProblemShape small(std::size_t max_vars) {
  ProblemShape shape;
  shape.min_vars = 1;
  shape.max_vars = max_vars;
  shape.max_frame = 3;
  return shape;
}

}  // namespace

std::string_view to_string(Instance i) {
  switch (i) {
    case Instance::boolean: return "boolean";
    case Instance::max_plus: return "max-plus";
    case Instance::min_plus: return "min-plus";
    case Instance::max_times: return "max-times";
    case Instance::max_times_positive: return "max-times-positive";
    case Instance::sparse: return "sparse-max-times";
  }
  return "?";
}

std::optional<Instance> parse_instance(std::string_view name) {
  for (Instance i : kInstances)
    if (to_string(i) == name) return i;
  if (name == "sparse") return Instance::sparse;
  return std::nullopt;
}

std::span<const Instance> all_instances() { return kInstances; }

AxiomReport axiom_suite(Instance instance, std::size_t trials, Rng& rng, std::size_t max_vars) {
  constexpr std::size_t per_system = 10;
  AxiomReport report;
  for (std::size_t done = 0; done < trials; done += per_system) {
    const std::size_t n = std::min(per_system, trials - done);
    auto system = random_variable_system(rng, small(max_vars));
    with_algebra(instance, system, [&](const auto& alg, ValueModel model) {
      report.absorb(check_axioms(alg, sampler_for(alg, system->size(), model), n,
                                 alg.default_tolerance(), rng));
    });
  }
  return report;
}

PropertyReport extensibility_suite(Instance instance, bool full, std::size_t trials, Rng& rng) {
  PropertyReport report{.property = std::string(full ? "fully piecewise extensible"
                                                     : "piecewise extensible") +
                                    " (" + std::string(to_string(instance)) + ")"};
  for (std::size_t t = 0; t < trials; ++t) {
    auto system = random_variable_system(rng, small(4));
    with_algebra(instance, system, [&](const auto& alg, ValueModel model) {
      const auto sampler = scoped_sampler_for(alg, model);
      absorb(report, full ? check_fully_piecewise_extensible(alg, sampler, 3, 1, rng)
                          : check_piecewise_extensible(alg, sampler, 3, 1, rng));
    });
  }
  return report;
}

PropertyReport family_suite(Instance instance, std::size_t trials, Rng& rng) {
  PropertyReport report{.property = "extension family conditions (" +
                                    std::string(to_string(instance)) + ")"};
  for (std::size_t t = 0; t < trials; ++t) {
    auto system = random_variable_system(rng, small(4));
    with_algebra(instance, system, [&](const auto& alg, ValueModel model) {
      absorb(report, check_family(alg, sampler_for(alg, 3, model), 1, rng));
    });
  }
  return report;
}

PropertyReport nary_suite(Instance instance, std::size_t factors, std::size_t trials, Rng& rng) {
  PropertyReport report{.property = "n-ary extension lemmas, m=" + std::to_string(factors) +
                                    " (" + std::string(to_string(instance)) + ")"};
  for (std::size_t t = 0; t < trials; ++t) {
    auto system = random_variable_system(rng, small(4));
    with_algebra(instance, system, [&](const auto& alg, ValueModel model) {
      absorb(report, check_nary_lemmas(alg, scoped_sampler_for(alg, model), factors, 3, 1, rng));
    });
  }
  return report;
}

PropertyReport merge_friendly_suite(std::size_t trials, Rng& rng) {
  PropertyReport report{.property = "merge-friendly variable systems"};
  for (std::size_t t = 0; t < trials; ++t) {
    auto system = random_variable_system(rng, small(4));
    absorb(report, check_merge_friendly_exhaustive(*system));
  }
  return report;
}

}  // namespace vba
