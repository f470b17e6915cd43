#pragma once

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vba/config.hpp"
#include "vba/domain.hpp"
#include "vba/errors.hpp"

namespace vba {

/// Labeling, combination and projection over a domain lattice, plus the
/// observational equality and a printable form used by the property
/// checkers.
template <class A>
concept ValuationAlgebraCore =
    requires(const A& alg, const typename A::Valuation& f, const Domain& d,
             double tolerance) {
      typename A::Valuation;
      { alg.label(f) } -> std::convertible_to<Domain>;
      { alg.combine(f, f) } -> std::same_as<typename A::Valuation>;
      { alg.project(f, d) } -> std::same_as<typename A::Valuation>;
      { alg.equal(f, f, tolerance) } -> std::same_as<bool>;
      { alg.describe(f) } -> std::convertible_to<std::string>;
    };

/// A valuation algebra with an identity valuation e: label(e) is the empty
/// domain and combine(f, e) equals f.
template <class A>
concept ValuationAlgebra = ValuationAlgebraCore<A> && requires(const A& alg) {
  { alg.identity() } -> std::same_as<typename A::Valuation>;
};

/// Valuations that are functions of configurations into an ordered
/// commutative semiring. Scores are oriented so that larger is better and
/// projection is the maximum over scores; `evaluate` reports values in the
/// user's units.
template <class A>
concept SemiringAlgebra =
    ValuationAlgebra<A> &&
    requires(const A& alg, const typename A::Valuation& f, const Configuration& z,
             double a, const Domain& s, std::vector<double> scores) {
      { alg.system() } -> std::convertible_to<const VariableSystem&>;
      { alg.score(f, z) } -> std::same_as<double>;
      { alg.evaluate(f, z) } -> std::same_as<double>;
      { alg.to_user(a) } -> std::same_as<double>;
      { alg.multiply(a, a) } -> std::same_as<double>;
      { alg.one() } -> std::same_as<double>;
      { alg.zero() } -> std::same_as<double>;
      { alg.default_tolerance() } -> std::same_as<double>;
      { alg.from_scores(s, std::move(scores)) } -> std::same_as<typename A::Valuation>;
    };

/// A valuation algebra bound to a configuration system and a family of
/// configuration extension sets. `extension_set(f, x)` returns, sorted, the
/// configurations over label(f) that extend x; `first_extension` returns
/// the first one met by the instance's enumeration without building the set.
template <class A>
concept ExtensionFamily =
    ValuationAlgebra<A> &&
    requires(const A& alg, const typename A::Valuation& f, const Configuration& x) {
      { alg.configurations() } -> std::convertible_to<const ConfigurationSystem&>;
      { alg.extension_set(f, x) } -> std::same_as<std::vector<Configuration>>;
      { alg.first_extension(f, x) } -> std::same_as<std::optional<Configuration>>;
    };

/// Score equality under a tolerance: exact when `tolerance` is 0, relative
/// to the larger magnitude otherwise.
inline bool scores_equal(double a, double b, double tolerance) {
  if (a == b) return true;
  if (tolerance <= 0.0) return false;
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::fabs(a - b) <= tolerance * std::max(std::fabs(a), std::fabs(b));
}

/// Adjoins a formal identity element to an algebra that lacks one. The
/// identity has the empty label, is absorbed by combination and is only
/// equal to itself.
template <ValuationAlgebraCore Core>
class AdjoinIdentity {
 public:
  class Valuation {
   public:
    Valuation() = default;  // the identity
    explicit Valuation(typename Core::Valuation inner) : inner_(std::move(inner)) {}
    bool is_identity() const noexcept { return !inner_.has_value(); }
    const typename Core::Valuation& inner() const { return *inner_; }

   private:
    std::optional<typename Core::Valuation> inner_;
  };

  explicit AdjoinIdentity(Core core) : core_(std::move(core)) {}

  const Core& core() const noexcept { return core_; }
  Valuation wrap(typename Core::Valuation f) const { return Valuation(std::move(f)); }

  Domain label(const Valuation& f) const {
    return f.is_identity() ? Domain{} : Domain(core_.label(f.inner()));
  }

  Valuation combine(const Valuation& f, const Valuation& g) const {
    if (f.is_identity()) return g;
    if (g.is_identity()) return f;
    return Valuation(core_.combine(f.inner(), g.inner()));
  }

  Valuation project(const Valuation& f, const Domain& d) const {
    if (!f.is_identity()) return Valuation(core_.project(f.inner(), d));
    if (!d.empty())
      throw DomainError("cannot project the identity valuation to " + to_string(d));
    return f;
  }

  Valuation identity() const { return Valuation{}; }

  bool equal(const Valuation& f, const Valuation& g, double tolerance) const {
    if (f.is_identity() || g.is_identity())
      return f.is_identity() && g.is_identity();
    return core_.equal(f.inner(), g.inner(), tolerance);
  }

  std::string describe(const Valuation& f) const {
    return f.is_identity() ? std::string("e") : std::string(core_.describe(f.inner()));
  }

 private:
  Core core_;
};

}  // namespace vba
