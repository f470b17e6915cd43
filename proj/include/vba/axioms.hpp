#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "vba/algebra.hpp"
#include "vba/report.hpp"

namespace vba {

/// Per-axiom tallies; `witness` holds the first counterexample found.
struct AxiomOutcome {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> witness{};
};

struct AxiomReport {
  // A1 commutative semigroup, A2 labeling, A3 projection, A4 transitivity,
  // A5 combination, A6 domain, then the identity law.
  std::array<AxiomOutcome, 7> axioms{{{"A1 commutative semigroup"},
                                      {"A2 labeling"},
                                      {"A3 projection"},
                                      {"A4 transitivity"},
                                      {"A5 combination"},
                                      {"A6 domain"},
                                      {"identity"}}};

  bool all_passed() const {
    for (const auto& a : axioms)
      if (a.failed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& a : axioms) n += a.failed;
    return n;
  }

  /// Adds the tallies of `other`, keeping the earliest witnesses.
  void absorb(const AxiomReport& other) {
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      axioms[i].passed += other.axioms[i].passed;
      axioms[i].failed += other.axioms[i].failed;
      if (!axioms[i].witness) axioms[i].witness = other.axioms[i].witness;
    }
  }
};

/// Uniformly random subset of `d`.
inline Domain random_subset(const Domain& d, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<VarId> out;
  for (VarId v : d)
    if (coin(rng)) out.push_back(v);
  return Domain(std::move(out));
}

/// Random `t` with `lower <= t <= upper`.
inline Domain random_between(const Domain& lower, const Domain& upper, Rng& rng) {
  return join(lower, random_subset(difference(upper, lower), rng));
}

/// Tests axioms A1-A6 and the identity law on `trials` sampled triples.
/// Equality is the algebra's observational equality at `tolerance`.
template <ValuationAlgebra A>
AxiomReport check_axioms(const A& alg,
                         const std::function<typename A::Valuation(Rng&)>& sampler,
                         std::size_t trials, double tolerance, Rng& rng) {
  using V = typename A::Valuation;
  AxiomReport report;
  auto tally = [&](std::size_t axiom, bool holds, auto&& witness) {
    auto& a = report.axioms[axiom];
    if (holds) {
      ++a.passed;
      return;
    }
    ++a.failed;
    if (!a.witness) a.witness = witness();
  };
  auto eq = [&](const V& f, const V& g) { return alg.equal(f, g, tolerance); };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const V phi = sampler(rng);
    const V psi = sampler(rng);
    const V chi = sampler(rng);
    const Domain x = alg.label(phi);
    const Domain y = alg.label(psi);

    const V phi_psi = alg.combine(phi, psi);
    const V psi_phi = alg.combine(psi, phi);
    const bool commutes = eq(phi_psi, psi_phi);
    tally(0, commutes, [&] {
      return "combine not commutative: phi=" + std::string(alg.describe(phi)) +
             ", psi=" + std::string(alg.describe(psi)) + "; phi*psi=" +
             std::string(alg.describe(phi_psi)) + " but psi*phi=" +
             std::string(alg.describe(psi_phi));
    });
    if (commutes) {
      const V left = alg.combine(phi_psi, chi);
      const V right = alg.combine(phi, alg.combine(psi, chi));
      tally(0, eq(left, right), [&] {
        return "combine not associative: phi=" + std::string(alg.describe(phi)) +
               ", psi=" + std::string(alg.describe(psi)) +
               ", chi=" + std::string(alg.describe(chi));
      });
    }

    tally(1, Domain(alg.label(phi_psi)) == join(x, y), [&] {
      return "label(phi*psi)=" + to_string(alg.label(phi_psi)) + " expected " +
             to_string(join(x, y)) + " for phi=" + std::string(alg.describe(phi)) +
             ", psi=" + std::string(alg.describe(psi));
    });

    const Domain inner = random_subset(x, rng);
    const Domain outer = random_between(inner, x, rng);
    const V to_inner = alg.project(phi, inner);
    tally(2, Domain(alg.label(to_inner)) == inner, [&] {
      return "label(phi^" + to_string(inner) + ")=" + to_string(alg.label(to_inner)) +
             " for phi=" + std::string(alg.describe(phi));
    });

    const V twice = alg.project(alg.project(phi, outer), inner);
    tally(3, eq(twice, to_inner), [&] {
      return "projection to " + to_string(outer) + " then " + to_string(inner) +
             " differs from direct projection for phi=" + std::string(alg.describe(phi));
    });

    const Domain z = random_between(x, join(x, y), rng);
    const V lhs = alg.project(psi_phi, z);
    const V rhs = alg.combine(phi, alg.project(psi, meet(z, y)));
    tally(4, eq(lhs, rhs), [&] {
      return "(psi*phi)^" + to_string(z) + "=" + std::string(alg.describe(lhs)) +
             " but phi*psi^" + to_string(meet(z, y)) + "=" +
             std::string(alg.describe(rhs)) + " for phi=" + std::string(alg.describe(phi)) +
             ", psi=" + std::string(alg.describe(psi));
    });

    tally(5, eq(alg.project(phi, x), phi), [&] {
      return "phi^d(phi) != phi for phi=" + std::string(alg.describe(phi));
    });

    const V e = alg.identity();
    tally(6, Domain(alg.label(e)).empty() && eq(alg.combine(phi, e), phi), [&] {
      return "identity not neutral for phi=" + std::string(alg.describe(phi));
    });
  }
  return report;
}

}  // namespace vba
