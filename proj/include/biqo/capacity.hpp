#ifndef BIQO_CAPACITY_HPP
#define BIQO_CAPACITY_HPP

#include <cstddef>

namespace biqo {

// Capacity of the pair under fixed single-signal measurements: with
// S = sqrt(1-x^2), (1+S)/2 log2(1+S) + (1-S)/2 log2(1-S), in bits.
double c1_closed(double x);

// Capacity under collective measurements over long codeword blocks:
// 1 - ((1-x)log2(1-x) + (1+x)log2(1+x))/2 = h2((1+x)/2), in bits.
double c_inf_closed(double x);

// The gap c_inf - c1: information unlockable only by collective
// measurement across transmissions.
double quantumness_q(double x);

// Brute-force check of c1_closed: maximize the mutual information between
// the prepared state and the outcome of an orthogonal projective measurement
// in the states' real span, over the measurement angle in [0, pi) and the
// prior in [0, 1]. Grid sweep (angle_steps x prior_steps+1 points) followed
// by alternating golden-section refinement of each coordinate.
// Requires both step counts >= 100.
double accessible_info_oracle(double x, std::size_t angle_steps,
                              std::size_t prior_steps);

struct HolevoPriorResult {
  double bits = 0.0;
  double argmax_prior = 0.0;
};

// Brute-force check of c_inf_closed: maximize the von Neumann entropy of
// p rho0 + (1-p) rho1 over the prior p. Requires prior_steps >= 100.
HolevoPriorResult holevo_prior_oracle(double x, std::size_t prior_steps);

// Closed forms and oracle values side by side at one overlap.
struct CapacityReport {
  double x = 0.0;
  double c1 = 0.0;
  double c_inf = 0.0;
  double q = 0.0;
  double oracle_c1 = 0.0;
  double oracle_c_inf = 0.0;
  double oracle_gap_c1 = 0.0;    // |oracle_c1 - c1|
  double oracle_gap_c_inf = 0.0; // |oracle_c_inf - c_inf|
};

CapacityReport capacity_report(double x, std::size_t angle_steps,
                               std::size_t prior_steps);

} // namespace biqo

#endif
