#include "biqo/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "biqo/ensemble.hpp"
#include "biqo/optimize.hpp"

namespace biqo {

namespace {

void require_overlap(double x, const char *op) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError(std::string(op) + ": overlap must lie in [0, 1]");
}

// x log2(x) with the 0 log 0 = 0 convention.
double xlog2(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

} // namespace

double c1_closed(double x) {
  require_overlap(x, "c1_closed");
  const double s = std::sqrt(1.0 - x * x);
  return 0.5 * xlog2(1.0 + s) + 0.5 * xlog2(1.0 - s);
}

double c_inf_closed(double x) {
  require_overlap(x, "c_inf_closed");
  return 1.0 - 0.5 * (xlog2(1.0 - x) + xlog2(1.0 + x));
}

double quantumness_q(double x) { return c_inf_closed(x) - c1_closed(x); }

namespace {

// Mutual information between the preparation (prior p for state 0) and the
// outcome of the projective measurement {(cos a, sin a), (-sin a, cos a)}.
double mutual_information(double x, double s, double angle, double p) {
  const double c = std::cos(angle), sn = std::sin(angle);
  // amplitudes <b_k|psi_i>, everything real in the canonical embedding
  const double a00 = c, a01 = c * x + sn * s;
  const double a10 = -sn, a11 = -sn * x + c * s;
  const double cond[2][2] = {{a00 * a00, a10 * a10},
                             {a01 * a01, a11 * a11}}; // cond[i][k] = P(k|i)
  const double prior[2] = {p, 1.0 - p};
  double info = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double q = prior[0] * cond[0][k] + prior[1] * cond[1][k];
    if (q <= 0.0) continue;
    for (int i = 0; i < 2; ++i) {
      const double joint = prior[i] * cond[i][k];
      if (joint > 0.0) info += joint * std::log2(cond[i][k] / q);
    }
  }
  return info;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

double accessible_info_oracle(double x, std::size_t angle_steps,
                              std::size_t prior_steps) {
  require_overlap(x, "accessible_info_oracle");
  if (angle_steps < 100 || prior_steps < 100)
    throw DomainError("accessible_info_oracle: need >= 100 steps per axis");
  const double s = std::sqrt(1.0 - x * x);

  double best_angle = 0.0, best_prior = 0.5, best = -1.0;
  for (std::size_t j = 0; j < angle_steps; ++j) {
    const double angle = kPi * static_cast<double>(j) / angle_steps;
    for (std::size_t k = 0; k <= prior_steps; ++k) {
      const double p = static_cast<double>(k) / prior_steps;
      const double info = mutual_information(x, s, angle, p);
      if (info > best) {
        best = info;
        best_angle = angle;
        best_prior = p;
      }
    }
  }

  // Alternating golden-section polish of each coordinate around the best
  // grid cell.
  const double da = kPi / angle_steps;
  const double dp = 1.0 / prior_steps;
  for (int round = 0; round < 2; ++round) {
    const auto ra = golden_section_max(
        [&](double a) { return mutual_information(x, s, a, best_prior); },
        best_angle - da, best_angle + da, 1e-10);
    best_angle = ra.argmax;
    const auto rp = golden_section_max(
        [&](double p) { return mutual_information(x, s, best_angle, p); },
        std::max(0.0, best_prior - dp), std::min(1.0, best_prior + dp), 1e-10);
    best_prior = rp.argmax;
    best = std::max(best, rp.value);
  }
  return best;
}

HolevoPriorResult holevo_prior_oracle(double x, std::size_t prior_steps) {
  require_overlap(x, "holevo_prior_oracle");
  if (prior_steps < 100)
    throw DomainError("holevo_prior_oracle: need >= 100 steps");
  const TwoStateEnsemble e = make_ensemble(x);

  auto entropy_at = [&](double p) {
    return von_neumann_entropy(Complex(p) * e.rho0 +
                               Complex(1.0 - p) * e.rho1);
  };

  double best_p = 0.0, best = -1.0;
  for (std::size_t k = 0; k <= prior_steps; ++k) {
    const double p = static_cast<double>(k) / prior_steps;
    const double h = entropy_at(p);
    if (h > best) {
      best = h;
      best_p = p;
    }
  }

  const double dp = 1.0 / prior_steps;
  const auto refined = golden_section_max(
      entropy_at, std::max(0.0, best_p - dp), std::min(1.0, best_p + dp),
      1e-10);
  HolevoPriorResult out;
  if (refined.value > best) {
    out.bits = refined.value;
    out.argmax_prior = refined.argmax;
  } else {
    out.bits = best;
    out.argmax_prior = best_p;
  }
  return out;
}

CapacityReport capacity_report(double x, std::size_t angle_steps,
                               std::size_t prior_steps) {
  CapacityReport r;
  r.x = x;
  r.c1 = c1_closed(x);
  r.c_inf = c_inf_closed(x);
  r.q = r.c_inf - r.c1;
  r.oracle_c1 = accessible_info_oracle(x, angle_steps, prior_steps);
  r.oracle_c_inf = holevo_prior_oracle(x, prior_steps).bits;
  r.oracle_gap_c1 = std::abs(r.oracle_c1 - r.c1);
  r.oracle_gap_c_inf = std::abs(r.oracle_c_inf - r.c_inf);
  return r;
}

} // namespace biqo
