#include "vba/table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vba/algebra.hpp"
#include "vba/detail/odometer.hpp"
#include "vba/errors.hpp"
#include "vba/format.hpp"

namespace vba {

using detail::embedded_strides;
using detail::Odometer;
using detail::strides_for;

std::string_view to_string(Semiring s) {
  switch (s) {
    case Semiring::boolean: return "boolean";
    case Semiring::max_plus: return "max-plus";
    case Semiring::min_plus: return "min-plus";
    case Semiring::max_times: return "max-times";
  }
  return "?";
}

std::optional<Semiring> parse_semiring(std::string_view name) {
  for (Semiring s : {Semiring::boolean, Semiring::max_plus, Semiring::min_plus,
                     Semiring::max_times})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::size_t Table::offset(const Configuration& z) const {
  if (z.scope() != scope_)
    throw DomainError("configuration over " + to_string(z.scope()) +
                      " does not match table scope " + to_string(scope_));
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (z.values()[i] >= dims_[i])
      throw DomainError("value " + std::to_string(z.values()[i]) +
                        " outside the frame of v" +
                        std::to_string(index_of(scope_.vars()[i])));
    index = index * dims_[i] + z.values()[i];
  }
  return index;
}

TableAlgebra::TableAlgebra(std::shared_ptr<const VariableSystem> system,
                           Semiring semiring)
    : system_(std::move(system)), semiring_(semiring) {
  if (!system_) throw ConfigError("table algebra needs a variable system");
}

void TableAlgebra::check(const Table& f) const {
  if (f.semiring_ != semiring_ || f.system_ != system_.get())
    throw InstanceMismatch(std::string("table from a different algebra (") +
                           std::string(to_string(f.semiring_)) +
                           ") used with a " + std::string(to_string(semiring_)) +
                           " algebra");
}

double TableAlgebra::from_user(double v) const {
  if (std::isnan(v)) throw DomainError("NaN is not a valid table value");
  switch (semiring_) {
    case Semiring::boolean:
      if (v != 0.0 && v != 1.0)
        throw DomainError("boolean tables hold only 0 and 1, got " + format_number(v));
      return v;
    case Semiring::max_plus:
      if (v == std::numeric_limits<double>::infinity())
        throw DomainError("max-plus weights must be below +inf");
      return v;
    case Semiring::min_plus:
      if (v == -std::numeric_limits<double>::infinity())
        throw DomainError("min-plus costs must be above -inf");
      return v == 0.0 ? 0.0 : -v;
    case Semiring::max_times:
      if (v < 0.0 || std::isinf(v))
        throw DomainError("max-times values must be finite and nonnegative, got " +
                          format_number(v));
      return v;
  }
  return v;
}

double TableAlgebra::to_user(double score) const {
  if (semiring_ == Semiring::min_plus) return score == 0.0 ? 0.0 : -score;
  return score;
}

Table TableAlgebra::make(Domain scope, std::vector<double> values) const {
  for (double& v : values) v = from_user(v);
  return from_scores(scope, std::move(values));
}

Table TableAlgebra::make_ordered(std::span<const VarId> order,
                                 std::span<const double> values) const {
  Domain scope{std::vector<VarId>(order.begin(), order.end())};
  if (scope.size() != order.size())
    throw DomainError("table scope lists a variable twice");
  std::vector<std::size_t> order_dims;
  for (VarId v : order) order_dims.push_back(system_->frame_size(v));
  std::size_t expected = 1;
  for (std::size_t d : order_dims) expected *= d;
  if (values.size() != expected)
    throw DomainError("table over " + to_string(scope) + " needs " +
                      std::to_string(expected) + " values, got " +
                      std::to_string(values.size()));
  // Walk the given layout and scatter into canonical positions.
  const auto canonical = strides_for(system_->dims(scope));
  std::vector<std::size_t> view(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) view[i] = canonical[scope.position(order[i])];
  std::vector<double> scores(values.size());
  Odometer walk(order_dims, {view});
  for (std::size_t i = 0; !walk.done(); walk.next(), ++i)
    scores[walk.offset(0)] = from_user(values[i]);
  return from_scores(scope, std::move(scores));
}

Table TableAlgebra::from_scores(const Domain& scope, std::vector<double> scores) const {
  auto dims = system_->dims(scope);
  std::size_t expected = 1;
  for (std::size_t d : dims) expected *= d;
  if (scores.size() != expected)
    throw DomainError("table over " + to_string(scope) + " needs " +
                      std::to_string(expected) + " values, got " +
                      std::to_string(scores.size()));
  return Table(system_.get(), semiring_, scope, std::move(dims), std::move(scores));
}

double TableAlgebra::multiply(double a, double b) const {
  switch (semiring_) {
    case Semiring::boolean:
    case Semiring::max_times: return a * b;
    case Semiring::max_plus:
    case Semiring::min_plus: return a + b;
  }
  return a;
}

double TableAlgebra::one() const {
  return (semiring_ == Semiring::max_plus || semiring_ == Semiring::min_plus) ? 0.0 : 1.0;
}

double TableAlgebra::zero() const {
  return (semiring_ == Semiring::max_plus || semiring_ == Semiring::min_plus)
             ? -std::numeric_limits<double>::infinity()
             : 0.0;
}

double TableAlgebra::default_tolerance() const {
  return semiring_ == Semiring::max_times ? 1e-9 : 0.0;
}

Table TableAlgebra::combine(const Table& f, const Table& g) const {
  check(f);
  check(g);
  Domain scope = join(f.scope(), g.scope());
  auto dims = system_->dims(scope);
  std::size_t size = 1;
  for (std::size_t d : dims) size *= d;
  std::vector<double> out;
  out.reserve(size);
  Odometer walk(dims, {embedded_strides(scope, f.scope(), f.dims()),
                       embedded_strides(scope, g.scope(), g.dims())});
  for (; !walk.done(); walk.next())
    out.push_back(multiply(f.scores()[walk.offset(0)], g.scores()[walk.offset(1)]));
  return Table(system_.get(), semiring_, std::move(scope), std::move(dims), std::move(out));
}

Table TableAlgebra::project(const Table& f, const Domain& target) const {
  check(f);
  if (!f.scope().includes(target))
    throw DomainError("cannot project a table over " + to_string(f.scope()) +
                      " to " + to_string(target) + ": " +
                      to_string(difference(target, f.scope())) + " not in its label");
  auto dims = system_->dims(target);
  std::size_t size = 1;
  for (std::size_t d : dims) size *= d;
  std::vector<double> out(size, -std::numeric_limits<double>::infinity());
  Odometer walk(f.dims(), {embedded_strides(f.scope(), target, dims)});
  for (std::size_t i = 0; !walk.done(); walk.next(), ++i) {
    double& cell = out[walk.offset(0)];
    cell = std::max(cell, f.scores()[i]);
  }
  return Table(system_.get(), semiring_, target, std::move(dims), std::move(out));
}

Table TableAlgebra::identity() const {
  return Table(system_.get(), semiring_, Domain{}, {}, {one()});
}

bool TableAlgebra::equal(const Table& f, const Table& g, double tolerance) const {
  check(f);
  check(g);
  if (f.scope() != g.scope()) return false;
  for (std::size_t i = 0; i < f.scores().size(); ++i)
    if (!scores_equal(f.scores()[i], g.scores()[i], tolerance)) return false;
  return true;
}

std::vector<double> TableAlgebra::values(const Table& f) const {
  check(f);
  std::vector<double> out(f.scores());
  for (double& v : out) v = to_user(v);
  return out;
}

std::string TableAlgebra::describe(const Table& f) const {
  const auto vals = values(f);
  return std::string(to_string(semiring_)) + " table over " + to_string(f.scope()) +
         " " + format_numbers(vals);
}

double TableAlgebra::score(const Table& f, const Configuration& z) const {
  check(f);
  return f.scores()[f.offset(z)];
}

double TableAlgebra::evaluate(const Table& f, const Configuration& z) const {
  return to_user(score(f, z));
}

namespace {

struct ExtensionWalk {
  std::vector<std::size_t> free_positions;  // positions in the table scope
  std::vector<std::size_t> free_dims;
  std::vector<std::size_t> free_strides;
  std::size_t base = 0;
};

ExtensionWalk prepare(const Table& f, const Configuration& x) {
  if (!f.scope().includes(x.scope()))
    throw DomainError("cannot extend a configuration over " + to_string(x.scope()) +
                      " to a valuation over " + to_string(f.scope()));
  const auto strides = strides_for(f.dims());
  ExtensionWalk w;
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    const VarId v = f.scope().vars()[i];
    const std::size_t pos = x.scope().position(v);
    if (pos < x.scope().size()) {
      if (x.values()[pos] >= f.dims()[i])
        throw DomainError("value outside the frame of v" + std::to_string(index_of(v)));
      w.base += strides[i] * x.values()[pos];
    } else {
      w.free_positions.push_back(i);
      w.free_dims.push_back(f.dims()[i]);
      w.free_strides.push_back(strides[i]);
    }
  }
  return w;
}

Configuration assemble(const Table& f, const Configuration& x, const ExtensionWalk& w,
                       const std::vector<Value>& free_values) {
  std::vector<Value> values(f.scope().size());
  for (std::size_t i = 0; i < x.scope().size(); ++i)
    values[f.scope().position(x.scope().vars()[i])] = x.values()[i];
  for (std::size_t k = 0; k < w.free_positions.size(); ++k)
    values[w.free_positions[k]] = free_values[k];
  return {f.scope(), std::move(values)};
}

double best_extension_score(const Table& f, const ExtensionWalk& w) {
  double best = -std::numeric_limits<double>::infinity();
  Odometer walk(w.free_dims, {w.free_strides}, {w.base});
  for (; !walk.done(); walk.next()) best = std::max(best, f.scores()[walk.offset(0)]);
  return best;
}

}  // namespace

std::vector<Configuration> TableAlgebra::extension_set(const Table& f,
                                                       const Configuration& x) const {
  check(f);
  const ExtensionWalk w = prepare(f, x);
  const double best = best_extension_score(f, w);
  std::vector<Configuration> out;
  Odometer walk(w.free_dims, {w.free_strides}, {w.base});
  for (; !walk.done(); walk.next())
    if (f.scores()[walk.offset(0)] == best) out.push_back(assemble(f, x, w, walk.values()));
  return out;
}

std::optional<Configuration> TableAlgebra::first_extension(const Table& f,
                                                           const Configuration& x) const {
  check(f);
  const ExtensionWalk w = prepare(f, x);
  const double best = best_extension_score(f, w);
  Odometer walk(w.free_dims, {w.free_strides}, {w.base});
  for (; !walk.done(); walk.next())
    if (f.scores()[walk.offset(0)] == best) return assemble(f, x, w, walk.values());
  return std::nullopt;
}

}  // namespace vba
