#ifndef BIQO_TRADEOFF_HPP
#define BIQO_TRADEOFF_HPP

#include <cstdint>
#include <optional>

#include "biqo/ensemble.hpp"

namespace biqo {

// Minimum disturbance to the transmitted pair compatible with an
// eavesdropper reaching error probability p, for p in
// [helstrom_error(x), 1/2]. Throws DomainError ("information bound
// exceeded") when p is below helstrom_error(x) - 1e-9.
//
// The inner radicand (1-x^2)(4p-4p^2-x^2) vanishes identically at
// p = helstrom_error(x) but the curve has a square-root cusp there, so
// float noise in the radicand is treated as exact zero (|r| < 1e-12) before
// the root is taken; remaining negatives from the 1e-9 grace band clamp
// to zero.
double disturbance_curve(double x, double p);

// Minimum disturbance at maximum information gain, (1 - sqrt(1-x^2+x^4))/2.
double d_at_max_info(double x);

struct EavesdropConfig {
  double x = 0.0;
  double p_eve = 0.5;            // Eve's target error probability
  std::size_t probe_dim = 4;     // ancilla dimension
  std::size_t restarts = 20;
  double penalty_weight = 1e6;   // base weight; escalated x10 per stage
  std::uint64_t seed = 0;
};

struct EavesdropResult {
  double d = 0.0;          // disturbance achieved
  double p_achieved = 0.5; // Eve error realized by the probe
  Matrix isometry;         // (2*probe_dim) x 2, V^dag V = I
  Matrix rho_e0, rho_e1;   // Eve's probe states
  Matrix rho_a0, rho_a1;   // perturbed signal states
  bool converged = false;
};

// Minimize the disturbance over probe interactions V: dim-2 ->
// dim-2 (x) dim-probe_dim by multi-restart Nelder-Mead on the raw column
// parameters, holding Eve's error at or below p_eve with a quadratic
// penalty escalated x10 over three stages. Disturbance of a candidate is
// 1 - (<psi0|rho_a0|psi0> + <psi1|rho_a1|psi1>)/2. Returns the lowest-D
// restart that converged with the constraint met (ties favoring the
// earliest restart); if none converged the best attempt is returned with
// converged = false.
EavesdropResult probe_oracle(const EavesdropConfig &cfg);

struct B92Stats {
  std::size_t rounds = 0;
  bool eve_present = false;
  std::uint64_t seed = 0;

  std::size_t bob_failures = 0;       // Bob's pass/fail test failures
  double disturbance_rate = 0.0;      // empirical
  double expected_disturbance = 0.0;  // exact from the channel model
  double disturbance_stderr = 0.0;    // binomial sigma of the estimator

  // present only when an eavesdropper was attached
  std::optional<std::size_t> eve_errors;
  std::optional<double> eve_error_rate;
  std::optional<double> expected_eve_error;
  std::optional<double> eve_error_stderr;
};

// Monte Carlo rounds of the two-state key protocol: each round draws a
// uniform bit, sends the matching state (through the probe interaction when
// eve is given), records Eve's minimum-error guess from her probe state, and
// records Bob's projective pass/fail test on the transmitted state. Bob-side
// and Eve-side outcomes are sampled from the exact reduced states.
// Deterministic for a fixed seed.
B92Stats simulate_b92(double x, std::size_t rounds, const EavesdropResult *eve,
                      std::uint64_t seed);

} // namespace biqo

#endif
