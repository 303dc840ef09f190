#ifndef BIQO_OPTIMIZE_HPP
#define BIQO_OPTIMIZE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "biqo/linalg.hpp"

namespace biqo {

struct ScalarSearchResult {
  double argmax = 0.0;
  double value = 0.0;
  int iterations = 0;
  double lo = 0.0, hi = 0.0; // final bracket
};

// Golden-section maximization of a unimodal f on [lo, hi]; the bracket
// shrinks by 1/phi per iteration until it is narrower than tol.
// Deterministic. Throws NumericError on a non-finite evaluation.
ScalarSearchResult golden_section_max(const std::function<double(double)> &f,
                                      double lo, double hi, double tol);

struct SimplexConfig {
  std::size_t dimension = 0;
  std::size_t max_iterations = 20000;
  double tolerance = 1e-12; // simplex value spread
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
};

struct SimplexResult {
  std::vector<double> argmin;
  double value = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

// Nelder-Mead descent with the standard reflection/expansion/contraction/
// shrink coefficients (1, 2, 1/2, 1/2). Converged when the value spread over
// the simplex drops below cfg.tolerance. Additional restarts (cfg.restarts
// > 1) perturb the start with draws from a generator seeded by cfg.seed; the
// best run wins. Never returns a value above f(start).
SimplexResult
simplex_minimize(const std::function<double(std::span<const double>)> &f,
                 const SimplexConfig &cfg, std::span<const double> start);

// Interpret params as `cols` complex columns of dimension `rows`
// (per column: re, im interleaved; 2*rows*cols reals in total) and
// Gram-Schmidt orthonormalize them in order. The result satisfies
// V^dag V = I. Throws DimensionError on a wrong params length and
// NumericError when a pivot norm falls below 1e-12 (rank deficiency).
Matrix orthonormal_columns_from_params(std::span<const double> params,
                                       std::size_t rows, std::size_t cols);

} // namespace biqo

#endif
