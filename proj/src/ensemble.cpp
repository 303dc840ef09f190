#include "biqo/ensemble.hpp"

#include <cmath>

namespace biqo {

TwoStateEnsemble make_ensemble(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError("make_ensemble: overlap must lie in [0, 1]");
  TwoStateEnsemble e;
  e.x = x;
  e.theta = std::acos(x);
  e.psi0 = Vector{1.0, 0.0};
  e.psi1 = Vector{x, std::sqrt(1.0 - x * x)};
  e.rho0 = outer(e.psi0, e.psi0);
  e.rho1 = outer(e.psi1, e.psi1);
  return e;
}

double helstrom_error(const TwoStateEnsemble &e) {
  const double closed = 0.5 * (1.0 - std::sqrt(1.0 - e.x * e.x));
  const double via_trace_norm = 0.5 - 0.25 * trace_norm(e.rho1 - e.rho0);
  if (std::abs(closed - via_trace_norm) > 1e-10)
    throw NumericError("helstrom_error: closed form and trace-norm route disagree");
  return closed;
}

Matrix helstrom_measurement(const TwoStateEnsemble &e) {
  if (e.x >= 1.0)
    throw DomainError("helstrom_measurement: indistinguishable ensemble");
  return hermitian_eigen(e.rho1 - e.rho0).vectors;
}

} // namespace biqo
