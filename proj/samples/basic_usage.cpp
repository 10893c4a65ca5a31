// Multidegrees, CSM class and curve report for a cuspidal cubic.
#include <iostream>

#include "tpolar/tpolar.hpp"

int main() {
  using namespace tpolar;
  const auto vars = default_variable_names(3);
  Polynomial f = parse_polynomial("4*x1^3 - x0*x1^2 - 18*x0*x1*x2 + 27*x0*x2^2 + 4*x0^2*x2", vars);

  MultidegreeVector d = multidegrees(toric_polar_map(f));
  std::cout << "multidegrees " << d.to_string() << ", degree " << d.topological_degree() << "\n";
  std::cout << "c_SM " << csm_standard_complement(d).to_string() << ", chi(U) = " << euler_standard_complement(d) << "\n";

  PlaneCurveReport r = plane_degree_formula(f);
  std::cout << r.k << "^2 - " << r.milnor_sum << " - " << r.incidence << " - " << r.tangency << " = "
            << r.degree_formula << "\n";

  // A pyramid over the Dolgachev conic is the next Dolgachev quadric.
  Polynomial q2 = dolgachev_quadric(2);
  Polynomial q3 = pyramid(q2, Polynomial::variable(q2.field(), 3, 0));
  std::cout << q3.to_string(default_variable_names(4)) << " -> "
            << multidegrees(toric_polar_map(q3)).to_string() << "\n";
  return 0;
}
