#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "vba/axioms.hpp"
#include "vba/report.hpp"

namespace vba {

/// The concrete algebras with the value law their suites sample from.
enum class Instance {
  boolean,
  max_plus,
  min_plus,
  max_times,           // small integers, zeros allowed
  max_times_positive,  // strictly positive integers
  sparse               // sparse max-times potentials
};

std::string_view to_string(Instance i);
std::optional<Instance> parse_instance(std::string_view name);
std::span<const Instance> all_instances();

/// Randomized suites; each trial draws a fresh variable system.
/// Axioms: up to `max_vars` variables with frames of at most 3 values.
AxiomReport axiom_suite(Instance instance, std::size_t trials, Rng& rng,
                        std::size_t max_vars = 5);
/// Piecewise (or, with `full`, fully piecewise) extensibility on random
/// pairs over at most 4 variables.
PropertyReport extensibility_suite(Instance instance, bool full, std::size_t trials, Rng& rng);
/// The three extension-family conditions on random valuations.
PropertyReport family_suite(Instance instance, std::size_t trials, Rng& rng);
/// The m-factor extension lemmas on random factorizations.
PropertyReport nary_suite(Instance instance, std::size_t factors, std::size_t trials, Rng& rng);
/// Merge-friendliness of the variable systems drawn by the suites.
PropertyReport merge_friendly_suite(std::size_t trials, Rng& rng);

}  // namespace vba
