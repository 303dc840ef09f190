#include "biqo/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "biqo/rng.hpp"

namespace biqo {

ScalarSearchResult golden_section_max(const std::function<double(double)> &f,
                                      double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("golden_section_max: need lo < hi");
  if (!(tol > 0.0)) throw DomainError("golden_section_max: need tol > 0");

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto eval = [&](double t) {
    const double y = f(t);
    if (!std::isfinite(y))
      throw NumericError("golden_section_max: non-finite evaluation");
    return y;
  };

  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = eval(c), fd = eval(d);
  int iterations = 0;
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = eval(d);
    }
    ++iterations;
  }

  ScalarSearchResult out;
  out.argmax = 0.5 * (a + b);
  out.value = eval(out.argmax);
  out.iterations = iterations;
  out.lo = a;
  out.hi = b;
  return out;
}

namespace {

using Objective = std::function<double(std::span<const double>)>;

SimplexResult nelder_mead_single(const Objective &f, const SimplexConfig &cfg,
                                 std::span<const double> start) {
  const std::size_t n = cfg.dimension;
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5,
                   kShrink = 0.5;

  // Initial simplex around the start point, scipy-style steps.
  std::vector<std::vector<double>> x(n + 1,
                                     std::vector<double>(start.begin(), start.end()));
  for (std::size_t i = 0; i < n; ++i)
    x[i + 1][i] = (x[i + 1][i] != 0.0) ? 1.05 * x[i + 1][i] : 0.00025;

  std::vector<double> fx(n + 1);
  for (std::size_t i = 0; i <= n; ++i) fx[i] = f(x[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
  };

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  std::size_t iter = 0;
  bool converged = false;
  for (; iter < cfg.max_iterations; ++iter) {
    sort_simplex();
    if (fx[order[n]] - fx[order[0]] < cfg.tolerance) {
      converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) centroid[i] += x[order[k]][i];
    for (double &c : centroid) c /= static_cast<double>(n);

    const std::size_t worst = order[n];
    for (std::size_t i = 0; i < n; ++i)
      xr[i] = centroid[i] + kReflect * (centroid[i] - x[worst][i]);
    const double fr = f(xr);

    if (fr < fx[order[0]]) {
      for (std::size_t i = 0; i < n; ++i)
        xe[i] = centroid[i] + kExpand * (xr[i] - centroid[i]);
      const double fe = f(xe);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
    } else if (fr < fx[order[n - 1]]) {
      x[worst] = xr;
      fx[worst] = fr;
    } else {
      const bool outside = fr < fx[worst];
      const std::vector<double> &base = outside ? xr : x[worst];
      for (std::size_t i = 0; i < n; ++i)
        xc[i] = centroid[i] + kContract * (base[i] - centroid[i]);
      const double fc = f(xc);
      if (fc < (outside ? fr : fx[worst])) {
        x[worst] = xc;
        fx[worst] = fc;
      } else {
        const std::size_t best = order[0];
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < n; ++i)
            x[k][i] = x[best][i] + kShrink * (x[k][i] - x[best][i]);
          fx[k] = f(x[k]);
        }
      }
    }
  }

  sort_simplex();
  SimplexResult out;
  out.argmin = x[order[0]];
  out.value = fx[order[0]];
  out.converged = converged;
  out.iterations = iter;
  return out;
}

} // namespace

SimplexResult
simplex_minimize(const std::function<double(std::span<const double>)> &f,
                 const SimplexConfig &cfg, std::span<const double> start) {
  if (cfg.dimension == 0 || start.size() != cfg.dimension)
    throw DimensionError("simplex_minimize: start size must equal dimension");
  if (!(cfg.tolerance > 0.0))
    throw DomainError("simplex_minimize: need tolerance > 0");

  SimplexResult best = nelder_mead_single(f, cfg, start);
  if (cfg.restarts > 1) {
    Rng rng(cfg.seed);
    std::vector<double> perturbed(cfg.dimension);
    for (std::size_t r = 1; r < cfg.restarts; ++r) {
      for (std::size_t i = 0; i < cfg.dimension; ++i)
        perturbed[i] = start[i] + rng.uniform(-1.0, 1.0);
      SimplexResult run = nelder_mead_single(f, cfg, perturbed);
      if (run.value < best.value) best = std::move(run);
    }
  }
  return best;
}

Matrix orthonormal_columns_from_params(std::span<const double> params,
                                       std::size_t rows, std::size_t cols) {
  if (params.size() != 2 * rows * cols)
    throw DimensionError(
        "orthonormal_columns_from_params: need 2*rows*cols parameters");

  Matrix v(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<Complex> col(rows);
    for (std::size_t i = 0; i < rows; ++i)
      col[i] = Complex(params[2 * (c * rows + i)],
                       params[2 * (c * rows + i) + 1]);
    // modified Gram-Schmidt against the columns already placed
    for (std::size_t k = 0; k < c; ++k) {
      Complex proj = 0.0;
      for (std::size_t i = 0; i < rows; ++i)
        proj += std::conj(v(i, k)) * col[i];
      for (std::size_t i = 0; i < rows; ++i) col[i] -= proj * v(i, k);
    }
    double nrm = 0.0;
    for (const auto &z : col) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12)
      throw NumericError(
          "orthonormal_columns_from_params: rank-deficient columns");
    for (std::size_t i = 0; i < rows; ++i) v(i, c) = col[i] / nrm;
  }
  return v;
}

} // namespace biqo
