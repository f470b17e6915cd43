#include "vba/sampling.hpp"

#include <algorithm>

namespace vba {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
}

double draw_value(Semiring semiring, ValueModel model, Rng& rng) {
  switch (semiring) {
    case Semiring::boolean:
      return std::bernoulli_distribution(0.75)(rng) ? 1.0 : 0.0;
    case Semiring::max_plus:
      return static_cast<double>(std::uniform_int_distribution<int>(-4, 5)(rng));
    case Semiring::min_plus:
      return static_cast<double>(std::uniform_int_distribution<int>(0, 9)(rng));
    case Semiring::max_times:
      switch (model) {
        case ValueModel::standard:
        case ValueModel::with_zeros:
          return static_cast<double>(std::uniform_int_distribution<int>(0, 3)(rng));
        case ValueModel::positive_integers:
          return static_cast<double>(std::uniform_int_distribution<int>(1, 4)(rng));
        case ValueModel::positive_reals:
          return std::uniform_real_distribution<double>(0.05, 1.0)(rng);
      }
  }
  return 0.0;
}

}  // namespace

std::shared_ptr<const VariableSystem> random_variable_system(Rng& rng,
                                                             const ProblemShape& shape) {
  const std::size_t n = uniform(rng, shape.min_vars, shape.max_vars);
  std::vector<std::size_t> sizes(n);
  for (auto& s : sizes) s = uniform(rng, std::max<std::size_t>(1, shape.min_frame), shape.max_frame);
  return std::make_shared<const VariableSystem>(VariableSystem::with_frame_sizes(sizes));
}

Domain random_scope(const Domain& vars, std::size_t min_size, std::size_t max_size, Rng& rng) {
  max_size = std::min(max_size, vars.size());
  min_size = std::min(min_size, max_size);
  const std::size_t k = uniform(rng, min_size, max_size);
  std::vector<VarId> pool(vars.begin(), vars.end());
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(k);
  return Domain(std::move(pool));
}

Table random_table(const TableAlgebra& alg, const Domain& scope, Rng& rng, ValueModel model) {
  std::vector<double> values(alg.system().frame_count(scope));
  for (double& v : values) v = draw_value(alg.semiring(), model, rng);
  return alg.make(scope, std::move(values));
}

SparsePotential random_sparse(const SparseAlgebra& alg, const Domain& scope, Rng& rng,
                              ValueModel model) {
  std::vector<double> scores(alg.system().frame_count(scope));
  std::bernoulli_distribution present(0.7);
  for (double& v : scores) {
    switch (model) {
      case ValueModel::standard:
        v = present(rng) ? static_cast<double>(std::uniform_int_distribution<int>(1, 4)(rng)) : 0.0;
        break;
      case ValueModel::with_zeros:
        v = static_cast<double>(std::uniform_int_distribution<int>(0, 3)(rng));
        break;
      case ValueModel::positive_integers:
        v = static_cast<double>(std::uniform_int_distribution<int>(1, 4)(rng));
        break;
      case ValueModel::positive_reals:
        v = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        break;
    }
  }
  return alg.from_scores(scope, std::move(scores));
}

std::function<Table(Rng&)> table_sampler(const TableAlgebra& alg, std::size_t max_scope,
                                         ValueModel model) {
  return [alg, max_scope, model](Rng& rng) {
    return random_table(alg, random_scope(alg.system().variables(), 0, max_scope, rng), rng,
                        model);
  };
}

std::function<SparsePotential(Rng&)> sparse_sampler(const SparseAlgebra& alg,
                                                    std::size_t max_scope, ValueModel model) {
  return [alg, max_scope, model](Rng& rng) {
    return random_sparse(alg, random_scope(alg.system().variables(), 0, max_scope, rng), rng,
                         model);
  };
}

std::function<Table(const Domain&, Rng&)> scoped_table_sampler(const TableAlgebra& alg,
                                                               ValueModel model) {
  return [alg, model](const Domain& scope, Rng& rng) { return random_table(alg, scope, rng, model); };
}

std::function<SparsePotential(const Domain&, Rng&)> scoped_sparse_sampler(
    const SparseAlgebra& alg, ValueModel model) {
  return [alg, model](const Domain& scope, Rng& rng) {
    return random_sparse(alg, scope, rng, model);
  };
}

std::vector<Domain> random_factorization(const Domain& vars, std::size_t factors,
                                         std::size_t max_scope, Rng& rng) {
  std::vector<Domain> out;
  for (std::size_t i = 0; i < factors; ++i) out.push_back(random_scope(vars, 1, max_scope, rng));
  return out;
}

Factorization<TableAlgebra> random_table_problem(Rng& rng, Semiring semiring,
                                                 const ProblemShape& shape, ValueModel model) {
  TableAlgebra alg(random_variable_system(rng, shape), semiring);
  const std::size_t m = uniform(rng, shape.min_factors, shape.max_factors);
  std::vector<Table> factors;
  for (std::size_t i = 0; i < m; ++i)
    factors.push_back(random_table(
        alg, random_scope(alg.system().variables(), 1, shape.max_scope, rng), rng, model));
  return {std::move(alg), std::move(factors)};
}

Factorization<SparseAlgebra> random_sparse_problem(Rng& rng, const ProblemShape& shape,
                                                   ValueModel model) {
  SparseAlgebra alg(random_variable_system(rng, shape));
  const std::size_t m = uniform(rng, shape.min_factors, shape.max_factors);
  std::vector<SparsePotential> factors;
  for (std::size_t i = 0; i < m; ++i)
    factors.push_back(random_sparse(
        alg, random_scope(alg.system().variables(), 1, shape.max_scope, rng), rng, model));
  return {std::move(alg), std::move(factors)};
}

}  // namespace vba
