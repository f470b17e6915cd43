#include "vba/oracle.hpp"

#include <memory>
#include <sstream>

#include "vba/format.hpp"
#include "vba/table.hpp"

namespace vba {

CounterexampleReport reproduce_counterexample() {
  auto sys = std::make_shared<VariableSystem>();
  const VarId x = sys->add("x", {"0", "1"});
  const VarId y = sys->add("y", {"0", "1"});
  const TableAlgebra alg(sys, Semiring::boolean);
  const Table phi = alg.make(Domain{x, y}, {1, 0, 0, 1});

  CounterexampleReport r;
  r.function = alg.describe(phi);
  r.phi_bottom = alg.evaluate(alg.project(phi, Domain{}), Configuration{});
  const auto sides = decomposition_sides(alg, phi, Domain{x}, Domain{y});
  r.solutions = sides.solutions;
  r.lhs = sides.lhs;
  r.solutions_y = sides.solutions_y;
  r.w_x = w_set(alg, alg.project(phi, Domain{x}), Configuration{});
  r.rhs = sides.rhs;
  r.refuted = r.lhs != r.rhs;
  return r;
}

std::string format(const CounterexampleReport& r) {
  std::ostringstream out;
  out << "phi(x,y) = 1 if x = y else 0 (boolean), X = {x}, Y = {y}\n"
      << "phi: " << r.function << "\n"
      << "phi^{} (<>) = " << format_number(r.phi_bottom) << "\n"
      << "c_phi = " << to_string(r.solutions) << "\n"
      << "LHS c_phi^{x,y} = " << to_string(r.lhs) << "\n"
      << "c_phi^{y} = " << to_string(r.solutions_y) << "\n"
      << "W_{phi^{x}}(<>) = " << to_string(r.w_x) << "\n"
      << "RHS = " << to_string(r.rhs) << "\n";
  if (r.refuted)
    out << "LHS != RHS: Theorem 8.1 REFUTED\n";
  else
    out << "LHS == RHS: not refuted\n";
  return out.str();
}

}  // namespace vba
