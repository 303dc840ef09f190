#include <doctest.h>

#include <cmath>

#include "biqo/ensemble.hpp"

using namespace biqo;

TEST_CASE("make_ensemble: canonical embedding and invariants") {
  for (double x : {0.0, 0.25, 0.5, 1.0 / std::sqrt(2.0), 0.9, 1.0}) {
    const TwoStateEnsemble e = make_ensemble(x);
    const Complex ov = inner(e.psi0, e.psi1);
    CHECK(std::abs(ov.imag()) == 0.0);
    CHECK(ov.real() >= 0.0);
    CHECK(std::abs(ov.real() - x) < 1e-12);
    CHECK(std::abs(e.psi0.norm() - 1.0) < 1e-12);
    CHECK(std::abs(e.psi1.norm() - 1.0) < 1e-12);
    CHECK((e.rho0 - outer(e.psi0, e.psi0)).max_abs() < 1e-12);
    CHECK((e.rho1 - outer(e.psi1, e.psi1)).max_abs() < 1e-12);
  }
  CHECK(TwoStateEnsemble::kPrior == 0.5);
}

TEST_CASE("make_ensemble: orthogonal, identical, and the 45-degree pair") {
  const TwoStateEnsemble orth = make_ensemble(0.0);
  CHECK(inner(orth.psi0, orth.psi1) == Complex(0.0));

  const TwoStateEnsemble same = make_ensemble(1.0);
  CHECK((same.rho1 - same.rho0).max_abs() < 1e-12);

  const TwoStateEnsemble mid = make_ensemble(1.0 / std::sqrt(2.0));
  CHECK(inner(mid.psi0, mid.psi1).real() == doctest::Approx(0.707107).epsilon(1e-6));
  CHECK(mid.theta == doctest::Approx(3.141592653589793 / 4.0).epsilon(1e-12));
}

TEST_CASE("make_ensemble: rejects overlaps outside [0, 1]") {
  CHECK_THROWS_AS(make_ensemble(-0.1), DomainError);
  CHECK_THROWS_AS(make_ensemble(1.5), DomainError);
  CHECK_THROWS_AS(make_ensemble(std::nan("")), DomainError);
}

TEST_CASE("helstrom_error: endpoint and reference values") {
  CHECK(helstrom_error(make_ensemble(0.0)) == 0.0);
  CHECK(helstrom_error(make_ensemble(1.0)) == 0.5);
  CHECK(helstrom_error(make_ensemble(1.0 / std::sqrt(2.0))) ==
        doctest::Approx(0.146446609407).epsilon(1e-10));
  CHECK(helstrom_error(make_ensemble(0.5)) ==
        doctest::Approx(0.066987298108).epsilon(1e-10));
}

TEST_CASE("helstrom_error: monotone increasing, bounded by [0, 1/2]") {
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    const double pe = helstrom_error(make_ensemble(x));
    CHECK(pe >= 0.0);
    CHECK(pe <= 0.5);
    if (i > 0) CHECK(pe > prev);
    prev = pe;
  }
}

TEST_CASE("helstrom_measurement: orthonormal, and optimal at x = 0") {
  const TwoStateEnsemble e = make_ensemble(0.0);
  const Matrix basis = helstrom_measurement(e);
  CHECK((basis.adjoint() * basis - Matrix::identity(2)).max_abs() < 1e-10);

  // at x = 0 the optimal basis is the state pair itself (up to phase);
  // column 0 carries the positive eigenvalue and means "decide state 1"
  Vector col0{basis(0, 0), basis(1, 0)}, col1{basis(0, 1), basis(1, 1)};
  CHECK(std::abs(inner(col0, e.psi1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner(col1, e.psi0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("helstrom_measurement: exhaustive decision-rule error at x = 0.6") {
  const TwoStateEnsemble e = make_ensemble(0.6);
  const Matrix basis = helstrom_measurement(e);
  Vector col0{basis(0, 0), basis(1, 0)}, col1{basis(0, 1), basis(1, 1)};

  // enumerate both preparations and both outcomes: errors are outcome 0
  // (decide 1) under psi0 and outcome 1 (decide 0) under psi1
  const double err = 0.5 * std::norm(inner(col0, e.psi0)) +
                     0.5 * std::norm(inner(col1, e.psi1));
  CHECK(err == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(err == doctest::Approx(helstrom_error(e)).epsilon(1e-12));
}

TEST_CASE("helstrom_measurement: identical states are a structured error") {
  CHECK_THROWS_AS(helstrom_measurement(make_ensemble(1.0)), DomainError);
}

TEST_CASE("helstrom_error: no projective angle beats it (brute-force sweep)") {
  constexpr double kPi = 3.141592653589793;
  const int angle_count = 31416; // ~1e-4 resolution over [0, pi)
  for (double x : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
    const TwoStateEnsemble e = make_ensemble(x);
    const double pe = helstrom_error(e);
    const double s = std::sqrt(1.0 - x * x);
    double best = 1.0;
    for (int j = 0; j < angle_count; ++j) {
      const double a = kPi * j / angle_count;
      const double c = std::cos(a), sn = std::sin(a);
      // amplitudes of psi0, psi1 on the rotated basis
      const double b00 = c, b01 = c * x + sn * s;
      const double b10 = -sn, b11 = -sn * x + c * s;
      const double err_assign = 0.5 * (b00 * b00 + b11 * b11);
      (void)b01;
      (void)b10;
      best = std::min(best, std::min(err_assign, 1.0 - err_assign));
    }
    CHECK(best >= pe - 1e-6);
  }
}
