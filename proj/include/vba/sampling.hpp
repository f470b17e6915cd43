#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "vba/config.hpp"
#include "vba/factorization.hpp"
#include "vba/report.hpp"
#include "vba/sparse.hpp"
#include "vba/table.hpp"

namespace vba {

/// Size bounds for random problems.
struct ProblemShape {
  std::size_t min_vars = 1;
  std::size_t max_vars = 6;
  std::size_t min_frame = 1;
  std::size_t max_frame = 3;
  std::size_t min_factors = 1;
  std::size_t max_factors = 6;
  std::size_t max_scope = 3;
};

/// Value distributions. Boolean, max-plus and min-plus tables ignore the
/// model; it selects the max-times / sparse value law.
enum class ValueModel {
  standard,           // max-times: small integers with zeros; sparse: ~30% absent
  with_zeros,         // integers 0..3, zeros frequent
  positive_integers,  // integers 1..4
  positive_reals      // uniform on [0.05, 1)
};

std::shared_ptr<const VariableSystem> random_variable_system(Rng& rng,
                                                             const ProblemShape& shape);

/// Random subset of `vars` with size in [min_size, max_size] (clamped).
Domain random_scope(const Domain& vars, std::size_t min_size, std::size_t max_size, Rng& rng);

Table random_table(const TableAlgebra& alg, const Domain& scope, Rng& rng,
                   ValueModel model = ValueModel::standard);
SparsePotential random_sparse(const SparseAlgebra& alg, const Domain& scope, Rng& rng,
                              ValueModel model = ValueModel::standard);

/// Sampler of valuations with random scopes of up to `max_scope` variables
/// of the algebra's system.
std::function<Table(Rng&)> table_sampler(const TableAlgebra& alg, std::size_t max_scope,
                                         ValueModel model = ValueModel::standard);
std::function<SparsePotential(Rng&)> sparse_sampler(const SparseAlgebra& alg,
                                                    std::size_t max_scope,
                                                    ValueModel model = ValueModel::standard);

/// Samplers over a caller-chosen scope.
std::function<Table(const Domain&, Rng&)> scoped_table_sampler(
    const TableAlgebra& alg, ValueModel model = ValueModel::standard);
std::function<SparsePotential(const Domain&, Rng&)> scoped_sparse_sampler(
    const SparseAlgebra& alg, ValueModel model = ValueModel::standard);

Factorization<TableAlgebra> random_table_problem(Rng& rng, Semiring semiring,
                                                 const ProblemShape& shape,
                                                 ValueModel model = ValueModel::standard);
Factorization<SparseAlgebra> random_sparse_problem(Rng& rng, const ProblemShape& shape,
                                                   ValueModel model = ValueModel::standard);

/// Random factor scopes over `vars`, for join-tree construction tests.
std::vector<Domain> random_factorization(const Domain& vars, std::size_t factors,
                                         std::size_t max_scope, Rng& rng);

}  // namespace vba
