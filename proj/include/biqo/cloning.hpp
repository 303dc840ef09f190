#ifndef BIQO_CLONING_HPP
#define BIQO_CLONING_HPP

#include <cstdint>

#include "biqo/linalg.hpp"

namespace biqo {

// Optimal average global fidelity of an equal-marginals cloner,
// (1 + x^3 + (1-x^2) sqrt(1+x^2)) / 2.
double global_fidelity_closed(double x);

// Optimal average local fidelity. The printed expression carries a 1/x
// prefactor with a removable singularity at x = 0, where the analytic limit
// 1 is returned; the inner radicand is clamped at -1e-12.
double local_fidelity_closed(double x);

enum class CloneObjective { Global, Local };

struct CloneCandidate {
  double x = 0.0;
  Vector joint0, joint1;          // dim-4 system (x) ancilla outputs
  double marginal_residual = 1.0; // max |tr_S - tr_A| entry over both states
  double overlap_residual = 1.0;  // | <joint0|joint1> - x |
  double f_global = 0.0;
  double f_local = 0.0;
  bool feasible = false;          // both residuals <= 1e-6
};

// Maximize the chosen average fidelity over pairs of dim-4 unit vectors with
// real amplitudes, subject to <joint0|joint1> = x (standing in for the
// unitarity of a cloning interaction on the input pair) and equal marginals
// per state, imposed by a quadratic penalty escalated x10 over three stages.
// Returns the best feasible candidate over the restarts; when none is
// feasible, the best attempt is returned with feasible = false.
CloneCandidate cloning_oracle(double x, CloneObjective objective,
                              std::size_t restarts, std::uint64_t seed = 0);

} // namespace biqo

#endif
