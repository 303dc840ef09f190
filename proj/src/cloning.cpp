#include "biqo/cloning.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "biqo/ensemble.hpp"
#include "biqo/optimize.hpp"
#include "biqo/rng.hpp"

namespace biqo {

namespace {

void require_overlap(double x, const char *op) {
  if (!(x >= 0.0 && x <= 1.0))
    throw DomainError(std::string(op) + ": overlap must lie in [0, 1]");
}

} // namespace

double global_fidelity_closed(double x) {
  require_overlap(x, "global_fidelity_closed");
  return 0.5 * (1.0 + x * x * x + (1.0 - x * x) * std::sqrt(1.0 + x * x));
}

double local_fidelity_closed(double x) {
  require_overlap(x, "local_fidelity_closed");
  if (x == 0.0) return 1.0; // removable singularity of the 1/x prefactor
  const double rad1 = std::sqrt(1.0 - 2.0 * x + 9.0 * x * x);
  double inner = -1.0 + 2.0 * x + 3.0 * x * x + (1.0 - x) * rad1;
  inner = std::max(inner, -1e-12);
  inner = std::max(inner, 0.0);
  return 0.5 + std::sqrt(2.0) / (32.0 * x) * (1.0 + x) *
                   (3.0 - 3.0 * x + rad1) * std::sqrt(inner);
}

namespace {

// One normalized real dim-4 joint vector with its constraint residuals and
// both fidelity readings. Basis order |00>, |01>, |10>, |11> with the system
// factor first.
struct JointState {
  std::array<double, 4> v{};

  // Frobenius^2 of tr_A - tr_S (the difference is symmetric, so three
  // independent entries with the off-diagonal counted twice).
  double marginal_penalty() const {
    const double m00 = (v[0] * v[0] + v[1] * v[1]) - (v[0] * v[0] + v[2] * v[2]);
    const double m01 = (v[0] * v[2] + v[1] * v[3]) - (v[0] * v[1] + v[2] * v[3]);
    const double m11 = (v[2] * v[2] + v[3] * v[3]) - (v[1] * v[1] + v[3] * v[3]);
    return m00 * m00 + 2.0 * m01 * m01 + m11 * m11;
  }

  double marginal_residual() const {
    const double m00 = std::abs(v[1] * v[1] - v[2] * v[2]);
    const double m01 =
        std::abs((v[0] * v[2] + v[1] * v[3]) - (v[0] * v[1] + v[2] * v[3]));
    const double m11 = std::abs(v[2] * v[2] - v[1] * v[1]);
    return std::max({m00, m01, m11});
  }
};

class CloneProblem {
public:
  CloneProblem(double x, CloneObjective objective)
      : x_(x), objective_(objective) {
    const double s = std::sqrt(1.0 - x * x);
    target0_ = {1.0, 0.0, 0.0, 0.0};                    // psi0 (x) psi0
    target1_ = {x * x, x * s, s * x, s * s};            // psi1 (x) psi1
    psi0_ = {1.0, 0.0};
    psi1_ = {x, s};
  }

  static bool normalize(std::span<const double> params, JointState &j0,
                        JointState &j1) {
    double n0 = 0.0, n1 = 0.0;
    for (int i = 0; i < 4; ++i) {
      n0 += params[i] * params[i];
      n1 += params[4 + i] * params[4 + i];
    }
    n0 = std::sqrt(n0);
    n1 = std::sqrt(n1);
    if (n0 < 1e-12 || n1 < 1e-12) return false;
    for (int i = 0; i < 4; ++i) {
      j0.v[i] = params[i] / n0;
      j1.v[i] = params[4 + i] / n1;
    }
    return true;
  }

  double global_fidelity(const JointState &j0, const JointState &j1) const {
    double d0 = 0.0, d1 = 0.0;
    for (int i = 0; i < 4; ++i) {
      d0 += j0.v[i] * target0_[i];
      d1 += j1.v[i] * target1_[i];
    }
    return 0.5 * (d0 * d0 + d1 * d1);
  }

  // <psi_i| tr_A |j_i><j_i| |psi_i> = sum_k <psi_i (x) e_k | j_i>^2
  double local_fidelity(const JointState &j0, const JointState &j1) const {
    double f0 = 0.0, f1 = 0.0;
    for (int k = 0; k < 2; ++k) {
      const double a0 = psi0_[0] * j0.v[k] + psi0_[1] * j0.v[2 + k];
      const double a1 = psi1_[0] * j1.v[k] + psi1_[1] * j1.v[2 + k];
      f0 += a0 * a0;
      f1 += a1 * a1;
    }
    return 0.5 * (f0 + f1);
  }

  double penalized(std::span<const double> params, double weight) const {
    JointState j0, j1;
    if (!normalize(params, j0, j1)) return 1e6;
    double ov = 0.0;
    for (int i = 0; i < 4; ++i) ov += j0.v[i] * j1.v[i];
    const double penalty = j0.marginal_penalty() + j1.marginal_penalty() +
                           (ov - x_) * (ov - x_);
    const double fid = objective_ == CloneObjective::Global
                           ? global_fidelity(j0, j1)
                           : local_fidelity(j0, j1);
    return -fid + weight * penalty;
  }

  CloneCandidate candidate(std::span<const double> params) const {
    CloneCandidate c;
    c.x = x_;
    JointState j0, j1;
    if (!normalize(params, j0, j1)) return c;
    double ov = 0.0;
    for (int i = 0; i < 4; ++i) ov += j0.v[i] * j1.v[i];
    c.joint0 = Vector{j0.v[0], j0.v[1], j0.v[2], j0.v[3]};
    c.joint1 = Vector{j1.v[0], j1.v[1], j1.v[2], j1.v[3]};
    c.marginal_residual = std::max(j0.marginal_residual(), j1.marginal_residual());
    c.overlap_residual = std::abs(ov - x_);
    c.f_global = global_fidelity(j0, j1);
    c.f_local = local_fidelity(j0, j1);
    c.feasible = c.marginal_residual <= 1e-6 && c.overlap_residual <= 1e-6;
    return c;
  }

  double objective_value(const CloneCandidate &c) const {
    return objective_ == CloneObjective::Global ? c.f_global : c.f_local;
  }

private:
  double x_;
  CloneObjective objective_;
  std::array<double, 4> target0_{}, target1_{};
  std::array<double, 2> psi0_{}, psi1_{};
};

constexpr int kPenaltyStages = 3;
constexpr double kPenaltyScale = 10.0;
constexpr double kBasePenaltyWeight = 1e4;
// Re-inflating the simplex at the incumbent point and descending again
// rescues runs that stagnated before the basin floor.
constexpr int kDescentsPerStage = 2;

} // namespace

CloneCandidate cloning_oracle(double x, CloneObjective objective,
                              std::size_t restarts, std::uint64_t seed) {
  require_overlap(x, "cloning_oracle");
  if (restarts < 1) throw DomainError("cloning_oracle: restarts must be >= 1");

  const CloneProblem problem(x, objective);

  SimplexConfig nm;
  nm.dimension = 8;
  nm.max_iterations = 4000;
  nm.tolerance = 1e-14;

  Rng rng(seed);
  CloneCandidate best_feasible, best_any;
  double best_feasible_fid = -std::numeric_limits<double>::infinity();
  double best_any_fid = -std::numeric_limits<double>::infinity();

  std::vector<double> params(8);
  for (std::size_t r = 0; r < restarts; ++r) {
    for (double &p : params) p = rng.uniform(-1.0, 1.0);

    double weight = kBasePenaltyWeight;
    for (int stage = 0; stage < kPenaltyStages; ++stage) {
      auto objective_fn = [&](std::span<const double> q) {
        return problem.penalized(q, weight);
      };
      for (int descent = 0; descent < kDescentsPerStage; ++descent) {
        const SimplexResult run = simplex_minimize(objective_fn, nm, params);
        params = run.argmin;
      }
      weight *= kPenaltyScale;
    }

    const CloneCandidate c = problem.candidate(params);
    const double fid = problem.objective_value(c);
    if (c.feasible && fid > best_feasible_fid) {
      best_feasible_fid = fid;
      best_feasible = c;
    }
    if (fid - (c.marginal_residual + c.overlap_residual) > best_any_fid) {
      best_any_fid = fid - (c.marginal_residual + c.overlap_residual);
      best_any = c;
    }
  }

  return best_feasible.feasible ? best_feasible : best_any;
}

} // namespace biqo
