#include <doctest.h>

#include <cmath>
#include <vector>

#include "biqo/capacity.hpp"
#include "biqo/cloning.hpp"
#include "biqo/optimize.hpp"
#include "test_support.hpp"

using namespace biqo;
using namespace biqo::testsupport;

TEST_CASE("golden_section_max: shifted parabola") {
  const auto r = golden_section_max(
      [](double t) { return -(t - 0.3) * (t - 0.3); }, 0.0, 1.0, 1e-6);
  CHECK(std::abs(r.argmax - 0.3) < 1e-6);
  CHECK(r.lo <= r.argmax);
  CHECK(r.argmax <= r.hi);
}

TEST_CASE("golden_section_max: locates the most-quantum overlaps") {
  const auto rq = golden_section_max(quantumness_q, 0.01, 0.99, 1e-6);
  CHECK(std::abs(rq.argmax - 0.7071) < 1e-3);

  const auto rg = golden_section_max(
      [](double x) { return 1.0 - global_fidelity_closed(x); }, 0.01, 0.99,
      1e-6);
  CHECK(std::abs(rg.argmax - 0.5774) < 2e-3);
}

TEST_CASE("golden_section_max: iteration count respects the phi bound") {
  int evals = 0;
  const double lo = 0.0, hi = 1.0, tol = 1e-6;
  const auto r = golden_section_max(
      [&](double t) {
        ++evals;
        return -t * t;
      },
      lo, hi, tol);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const int bound =
      static_cast<int>(std::ceil(std::log((hi - lo) / tol) / std::log(phi))) + 2;
  CHECK(r.iterations <= bound);
}

TEST_CASE("golden_section_max: non-finite evaluation is a structured error") {
  CHECK_THROWS_AS(golden_section_max([](double) { return std::nan(""); }, 0.0,
                                     1.0, 1e-6),
                  NumericError);
}

TEST_CASE("simplex_minimize: quadratic bowl from a random start") {
  Rng rng(5);
  std::vector<double> start(6);
  for (double &v : start) v = rng.uniform(-2.0, 2.0);

  SimplexConfig cfg;
  cfg.dimension = 6;
  cfg.tolerance = 1e-14;
  auto f = [](std::span<const double> v) {
    double s = 0.0;
    for (double t : v) s += t * t;
    return s;
  };
  const auto r = simplex_minimize(f, cfg, start);
  CHECK(r.converged);
  for (double v : r.argmin) CHECK(std::abs(v) < 1e-6);
  CHECK(r.value <= f(start));
}

TEST_CASE("simplex_minimize: Rosenbrock from the classic start") {
  SimplexConfig cfg;
  cfg.dimension = 2;
  cfg.tolerance = 1e-14;
  auto rosenbrock = [](std::span<const double> v) {
    const double a = 1.0 - v[0];
    const double b = v[1] - v[0] * v[0];
    return a * a + 100.0 * b * b;
  };
  const std::vector<double> start{-1.2, 1.0};
  const auto r = simplex_minimize(rosenbrock, cfg, start);
  CHECK(std::abs(r.argmin[0] - 1.0) < 1e-3);
  CHECK(std::abs(r.argmin[1] - 1.0) < 1e-3);
  CHECK(r.value <= rosenbrock(start));
}

TEST_CASE("simplex_minimize: identical seeds give bit-identical results") {
  auto noisy_bowl = [](std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (v[i] - 0.2 * static_cast<double>(i)) * (v[i] - 0.2 * static_cast<double>(i));
    return s + 0.01 * std::sin(40.0 * v[0]);
  };
  SimplexConfig cfg;
  cfg.dimension = 3;
  cfg.tolerance = 1e-12;
  cfg.restarts = 4;
  cfg.seed = 99;
  const std::vector<double> start{0.5, -0.5, 0.25};
  const auto r1 = simplex_minimize(noisy_bowl, cfg, start);
  const auto r2 = simplex_minimize(noisy_bowl, cfg, start);
  CHECK(r1.value == r2.value);
  REQUIRE(r1.argmin.size() == r2.argmin.size());
  for (std::size_t i = 0; i < r1.argmin.size(); ++i)
    CHECK(r1.argmin[i] == r2.argmin[i]);
}

TEST_CASE("orthonormal_columns_from_params: identity embedding") {
  // params spelling out the first two standard basis columns of dim 4
  std::vector<double> params(2 * 4 * 2, 0.0);
  params[0] = 1.0;  // column 0 = e0
  params[10] = 1.0; // column 1 = e1 (offset 2*4 + 2*1)
  const Matrix v = orthonormal_columns_from_params(params, 4, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(v(i, j) == Complex(i == j ? 1.0 : 0.0));
}

TEST_CASE("orthonormal_columns_from_params: always an isometry") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> params(2 * 8 * 2);
    for (double &p : params) p = rng.uniform(-1.0, 1.0);
    const Matrix v = orthonormal_columns_from_params(params, 8, 2);
    const Matrix gram = v.adjoint() * v;
    CHECK((gram - Matrix::identity(2)).max_abs() < 1e-10);
  }
}

TEST_CASE("orthonormal_columns_from_params: positive scaling is a no-op") {
  Rng rng(8);
  std::vector<double> params(2 * 4 * 2);
  for (double &p : params) p = rng.uniform(-1.0, 1.0);
  const Matrix v1 = orthonormal_columns_from_params(params, 4, 2);

  // scale everything
  std::vector<double> scaled = params;
  for (double &p : scaled) p *= 5.0;
  const Matrix v2 = orthonormal_columns_from_params(scaled, 4, 2);

  // scale only the first column's parameters
  std::vector<double> first = params;
  for (std::size_t i = 0; i < 8; ++i) first[i] *= 3.0;
  const Matrix v3 = orthonormal_columns_from_params(first, 4, 2);

  CHECK((v1 - v2).max_abs() < 1e-14);
  CHECK((v1 - v3).max_abs() < 1e-14);
}

TEST_CASE("orthonormal_columns_from_params: structured errors") {
  std::vector<double> short_params(7, 0.1);
  CHECK_THROWS_AS(orthonormal_columns_from_params(short_params, 4, 2),
                  DimensionError);

  // two parallel columns are rank deficient
  std::vector<double> parallel(2 * 4 * 2, 0.0);
  parallel[0] = 1.0;
  parallel[8] = 2.0; // column 1 = 2*e0
  CHECK_THROWS_AS(orthonormal_columns_from_params(parallel, 4, 2),
                  NumericError);
}
