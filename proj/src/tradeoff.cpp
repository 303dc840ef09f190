#include "biqo/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "biqo/optimize.hpp"
#include "biqo/rng.hpp"

namespace biqo {

namespace {

void require_overlap(double x, const char *op) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError(std::string(op) + ": overlap must lie in [0, 1]");
}

double helstrom_error_closed(double x) {
  return 0.5 * (1.0 - std::sqrt(1.0 - x * x));
}

} // namespace

double disturbance_curve(double x, double p) {
  require_overlap(x, "disturbance_curve");
  const double pe = helstrom_error_closed(x);
  if (p < pe - 1e-9)
    throw DomainError("disturbance_curve: information bound exceeded");
  if (p > 0.5 + 1e-9)
    throw DomainError("disturbance_curve: p must not exceed 1/2");

  double r = (1.0 - x * x) * (4.0 * p - 4.0 * p * p - x * x);
  if (std::abs(r) < 1e-12) r = 0.0; // cusp dead-band
  r = std::max(r, 0.0);
  const double inner =
      -1.0 - 4.0 * p + 4.0 * p * p + 2.0 * x * x + 2.0 * std::sqrt(r);
  const double outer = std::max(1.0 + x * x * inner, 0.0);
  return std::clamp(0.5 - 0.5 * std::sqrt(outer), 0.0, 0.5);
}

double d_at_max_info(double x) {
  require_overlap(x, "d_at_max_info");
  return 0.5 * (1.0 - std::sqrt(1.0 - x * x + x * x * x * x));
}

namespace {

// Candidate probe interaction evaluated through the pure-state fast path:
// the joint state of signal+probe is V|psi_b>, so the reduced operators are
// plain sums over the traced index.
struct ProbeEvaluation {
  double d = 1.0;
  double p_achieved = 0.5;
};

class ProbeProblem {
public:
  ProbeProblem(const TwoStateEnsemble &e, std::size_t probe_dim)
      : x_(e.x), s_(std::sqrt(1.0 - e.x * e.x)), d_(probe_dim) {}

  std::size_t param_count() const { return 8 * d_; }

  ProbeEvaluation evaluate(const Matrix &v) const {
    // images of the two signal states
    const std::size_t n = 2 * d_;
    std::vector<Complex> w0(n), w1(n);
    for (std::size_t i = 0; i < n; ++i) {
      w0[i] = v(i, 0);
      w1[i] = x_ * v(i, 0) + s_ * v(i, 1);
    }

    Matrix diff(d_, d_); // rho_e1 - rho_e0
    for (std::size_t a = 0; a < d_; ++a)
      for (std::size_t b = 0; b < d_; ++b)
        diff(a, b) = w1[a] * std::conj(w1[b]) + w1[d_ + a] * std::conj(w1[d_ + b]) -
                     w0[a] * std::conj(w0[b]) - w0[d_ + a] * std::conj(w0[d_ + b]);

    ProbeEvaluation out;
    out.p_achieved = 0.5 - 0.25 * trace_norm(diff);

    double f0 = 0.0, f1 = 0.0;
    for (std::size_t k = 0; k < d_; ++k) {
      f0 += std::norm(w0[k]);
      f1 += std::norm(x_ * w1[k] + s_ * w1[d_ + k]);
    }
    out.d = 1.0 - 0.5 * (f0 + f1);
    return out;
  }

  double penalized(std::span<const double> params, double p_eve,
                   double weight) const {
    Matrix v;
    try {
      v = orthonormal_columns_from_params(params, 2 * d_, 2);
    } catch (const NumericError &) {
      return 1e6; // degenerate raw columns: reject this point
    }
    const ProbeEvaluation ev = evaluate(v);
    const double viol = std::max(0.0, ev.p_achieved - p_eve);
    return ev.d + weight * viol * viol;
  }

private:
  double x_, s_;
  std::size_t d_;
};

constexpr int kPenaltyStages = 3;
constexpr double kPenaltyScale = 10.0;
constexpr double kFeasibilitySlack = 1e-5; // on p_achieved - p_eve

} // namespace

EavesdropResult probe_oracle(const EavesdropConfig &cfg) {
  require_overlap(cfg.x, "probe_oracle");
  const double pe = helstrom_error_closed(cfg.x);
  if (cfg.p_eve < pe - 1e-9 || cfg.p_eve > 0.5 + 1e-9)
    throw DomainError("probe_oracle: p_eve must lie in [helstrom_error(x), 1/2]");
  if (cfg.probe_dim < 1)
    throw DomainError("probe_oracle: probe_dim must be >= 1");
  if (cfg.restarts < 1)
    throw DomainError("probe_oracle: restarts must be >= 1");
  if (!(cfg.penalty_weight > 0.0))
    throw DomainError("probe_oracle: penalty_weight must be > 0");

  const TwoStateEnsemble ens = make_ensemble(cfg.x);
  const ProbeProblem problem(ens, cfg.probe_dim);
  const std::size_t nparams = problem.param_count();

  SimplexConfig nm;
  nm.dimension = nparams;
  nm.max_iterations = std::max<std::size_t>(4000, 400 * nparams);
  nm.tolerance = 1e-10;

  Rng rng(cfg.seed);
  std::vector<double> best_params;
  double best_d = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  std::vector<double> fallback_params;
  double fallback_obj = std::numeric_limits<double>::infinity();

  std::vector<double> params(nparams);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    for (double &p : params) p = rng.uniform(-1.0, 1.0);

    double weight = cfg.penalty_weight;
    bool nm_converged = false;
    for (int stage = 0; stage < kPenaltyStages; ++stage) {
      auto objective = [&](std::span<const double> q) {
        return problem.penalized(q, cfg.p_eve, weight);
      };
      const SimplexResult run = simplex_minimize(objective, nm, params);
      params = run.argmin;
      nm_converged = run.converged;
      weight *= kPenaltyScale;
    }

    Matrix v;
    try {
      v = orthonormal_columns_from_params(params, 2 * cfg.probe_dim, 2);
    } catch (const NumericError &) {
      continue;
    }
    const ProbeEvaluation ev = problem.evaluate(v);
    const bool feasible = ev.p_achieved <= cfg.p_eve + kFeasibilitySlack;

    if (nm_converged && feasible) {
      if (!any_converged || ev.d < best_d) {
        any_converged = true;
        best_d = ev.d;
        best_params = params;
      }
    }
    const double obj =
        problem.penalized(params, cfg.p_eve, cfg.penalty_weight * 100.0);
    if (obj < fallback_obj) {
      fallback_obj = obj;
      fallback_params = params;
    }
  }

  const std::vector<double> &chosen =
      any_converged ? best_params : fallback_params;
  EavesdropResult out;
  out.converged = any_converged;
  if (chosen.empty()) return out; // every restart degenerate; d = 1 sentinel

  out.isometry =
      orthonormal_columns_from_params(chosen, 2 * cfg.probe_dim, 2);
  const Vector w0 = out.isometry * ens.psi0;
  const Vector w1 = out.isometry * ens.psi1;
  const Matrix joint0 = outer(w0, w0), joint1 = outer(w1, w1);
  out.rho_e0 = partial_trace(joint0, Factor::Second, 2, cfg.probe_dim);
  out.rho_e1 = partial_trace(joint1, Factor::Second, 2, cfg.probe_dim);
  out.rho_a0 = partial_trace(joint0, Factor::First, 2, cfg.probe_dim);
  out.rho_a1 = partial_trace(joint1, Factor::First, 2, cfg.probe_dim);
  out.p_achieved = 0.5 - 0.25 * trace_norm(out.rho_e1 - out.rho_e0);
  const double f0 = inner(ens.psi0, out.rho_a0 * ens.psi0).real();
  const double f1 = inner(ens.psi1, out.rho_a1 * ens.psi1).real();
  out.d = 1.0 - 0.5 * (f0 + f1);
  return out;
}

B92Stats simulate_b92(double x, std::size_t rounds, const EavesdropResult *eve,
                      std::uint64_t seed) {
  require_overlap(x, "simulate_b92");
  if (rounds < 1) throw DomainError("simulate_b92: rounds must be >= 1");

  const TwoStateEnsemble ens = make_ensemble(x);
  B92Stats st;
  st.rounds = rounds;
  st.eve_present = eve != nullptr;
  st.seed = seed;

  Rng rng(seed);

  if (!eve) {
    // Undisturbed channel: Bob's test on the pure transmitted state always
    // passes. Bits are still drawn so seeds stay comparable across modes.
    for (std::size_t i = 0; i < rounds; ++i) (void)rng.bit();
    st.bob_failures = 0;
    st.disturbance_rate = 0.0;
    st.expected_disturbance = 0.0;
    st.disturbance_stderr = 0.0;
    return st;
  }

  // Bob's pass probabilities under the perturbed states.
  const double pass[2] = {
      std::clamp(inner(ens.psi0, eve->rho_a0 * ens.psi0).real(), 0.0, 1.0),
      std::clamp(inner(ens.psi1, eve->rho_a1 * ens.psi1).real(), 0.0, 1.0)};

  // Eve's minimum-error measurement on her probe: eigenbasis of the probe
  // state difference, guessing 1 on positive-eigenvalue outcomes.
  const EigenSystem es = hermitian_eigen(eve->rho_e1 - eve->rho_e0);
  const std::size_t dim = es.values.size();
  std::vector<int> guess(dim);
  for (std::size_t k = 0; k < dim; ++k) guess[k] = es.values[k] > 0.0 ? 1 : 0;

  // outcome distributions q[b][k] = <v_k| rho_e_b |v_k>
  std::vector<std::vector<double>> q(2, std::vector<double>(dim));
  for (int b = 0; b < 2; ++b) {
    const Matrix &rho = (b == 0) ? eve->rho_e0 : eve->rho_e1;
    double total = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      Vector vk(dim);
      for (std::size_t i = 0; i < dim; ++i) vk[i] = es.vectors(i, k);
      q[b][k] = std::max(inner(vk, rho * vk).real(), 0.0);
      total += q[b][k];
    }
    for (double &p : q[b]) p /= total;
  }

  std::size_t eve_errors = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    const int bit = rng.bit();

    double u = rng.uniform01();
    std::size_t outcome = dim - 1;
    for (std::size_t k = 0; k < dim; ++k) {
      if (u < q[bit][k]) {
        outcome = k;
        break;
      }
      u -= q[bit][k];
    }
    if (guess[outcome] != bit) ++eve_errors;

    if (rng.uniform01() >= pass[bit]) ++st.bob_failures;
  }

  st.disturbance_rate =
      static_cast<double>(st.bob_failures) / static_cast<double>(rounds);
  st.expected_disturbance = 1.0 - 0.5 * (pass[0] + pass[1]);
  st.disturbance_stderr = std::sqrt(st.expected_disturbance *
                                    (1.0 - st.expected_disturbance) /
                                    static_cast<double>(rounds));

  st.eve_errors = eve_errors;
  st.eve_error_rate =
      static_cast<double>(eve_errors) / static_cast<double>(rounds);
  st.expected_eve_error = eve->p_achieved;
  st.eve_error_stderr =
      std::sqrt(eve->p_achieved * (1.0 - eve->p_achieved) /
                static_cast<double>(rounds));
  return st;
}

} // namespace biqo
