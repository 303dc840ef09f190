#ifndef BIQO_ENSEMBLE_HPP
#define BIQO_ENSEMBLE_HPP

#include "biqo/linalg.hpp"

namespace biqo {

// The canonical pair of equiprobable pure states with overlap
// <psi0|psi1> = x = cos(theta), embedded in the real plane:
// psi0 = (1, 0), psi1 = (x, sqrt(1-x^2)). Every measure in this library
// depends on the pair only through x, so the embedding is free to choose.
struct TwoStateEnsemble {
  double x = 0.0;
  double theta = 0.0; // radians, cos(theta) = x
  Vector psi0, psi1;  // dim 2
  Matrix rho0, rho1;  // 2x2 projectors

  static constexpr double kPrior = 0.5; // fixed equal priors
};

// Throws DomainError unless x is in [0, 1].
TwoStateEnsemble make_ensemble(double x);

// Minimum achievable error probability deciding which state was sent,
// (1 - sqrt(1-x^2))/2. Cross-checked internally against the trace-norm
// route 1/2 - tr|rho1 - rho0|/4; disagreement beyond 1e-10 throws
// NumericError.
double helstrom_error(const TwoStateEnsemble &e);

// Orthonormal basis achieving the minimum error: the eigenbasis of
// rho1 - rho0, columns in descending eigenvalue order. Measuring column 0
// means deciding "state 1", column 1 deciding "state 0". Throws DomainError
// for x = 1 (indistinguishable ensemble).
Matrix helstrom_measurement(const TwoStateEnsemble &e);

} // namespace biqo

#endif
