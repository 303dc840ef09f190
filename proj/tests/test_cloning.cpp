#include <doctest.h>

#include <cmath>

#include "biqo/cloning.hpp"
#include "biqo/optimize.hpp"

using namespace biqo;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
} // namespace

TEST_CASE("global_fidelity_closed: perfect at the endpoints, reference inside") {
  CHECK(global_fidelity_closed(0.0) == 1.0);
  CHECK(global_fidelity_closed(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(global_fidelity_closed(kInvSqrt3) ==
        doctest::Approx(0.981125224325).epsilon(1e-11));
  // the deficit is strictly deeper at 1/sqrt(3) than at 1/sqrt(2)
  CHECK(1.0 - global_fidelity_closed(kInvSqrt2) <
        1.0 - global_fidelity_closed(kInvSqrt3));
}

TEST_CASE("local_fidelity_closed: endpoints via limit and plug-in") {
  CHECK(local_fidelity_closed(0.0) == 1.0);
  CHECK(local_fidelity_closed(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(local_fidelity_closed(0.5) ==
        doctest::Approx(0.987139289629).epsilon(1e-11));
  CHECK(local_fidelity_closed(0.3) ==
        doctest::Approx(0.990260701623).epsilon(1e-11));
}

TEST_CASE("closed-form fidelities stay within [1/2, 1] across the grid") {
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    for (double f : {global_fidelity_closed(x), local_fidelity_closed(x)}) {
      CHECK(f >= 0.5);
      CHECK(f <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("fidelity deficits peak at the distinct most-quantum overlaps") {
  const auto rg = golden_section_max(
      [](double x) { return 1.0 - global_fidelity_closed(x); }, 0.01, 0.99,
      1e-6);
  CHECK(std::abs(rg.argmax - kInvSqrt3) < 2e-3);

  const auto rl = golden_section_max(
      [](double x) { return 1.0 - local_fidelity_closed(x); }, 0.01, 0.99,
      1e-6);
  CHECK(std::abs(rl.argmax - 0.5) < 2e-3);
}

TEST_CASE("cloning_oracle: orthogonal states clone exactly") {
  for (CloneObjective obj : {CloneObjective::Global, CloneObjective::Local}) {
    const CloneCandidate c = cloning_oracle(0.0, obj, 8, 3);
    REQUIRE(c.feasible);
    const double fid =
        obj == CloneObjective::Global ? c.f_global : c.f_local;
    CHECK(std::abs(fid - 1.0) < 2e-3);
  }
}

TEST_CASE("cloning_oracle: meets the closed forms without beating them") {
  struct Case {
    double x;
    CloneObjective obj;
    double closed;
  };
  const Case cases[] = {
      {kInvSqrt3, CloneObjective::Global, global_fidelity_closed(kInvSqrt3)},
      {0.5, CloneObjective::Local, local_fidelity_closed(0.5)},
  };
  for (const Case &tc : cases) {
    const CloneCandidate c = cloning_oracle(tc.x, tc.obj, 10, 5);
    REQUIRE(c.feasible);
    const double fid =
        tc.obj == CloneObjective::Global ? c.f_global : c.f_local;
    CHECK(std::abs(fid - tc.closed) < 2e-3);
    CHECK(fid <= tc.closed + 2e-3);
  }
}

TEST_CASE("cloning_oracle: candidate invariants") {
  const CloneCandidate c = cloning_oracle(0.5, CloneObjective::Global, 10, 5);
  REQUIRE(c.feasible);
  CHECK(std::abs(c.joint0.norm() - 1.0) < 1e-10);
  CHECK(std::abs(c.joint1.norm() - 1.0) < 1e-10);
  CHECK(c.marginal_residual <= 1e-6);
  CHECK(c.overlap_residual <= 1e-6);
  CHECK(std::abs(inner(c.joint0, c.joint1).real() - 0.5) < 2e-6);

  // equal marginals hold as matrices too
  for (const Vector &j : {c.joint0, c.joint1}) {
    const Matrix rho = outer(j, j);
    const Matrix kept_s = partial_trace(rho, Factor::First, 2, 2);
    const Matrix kept_a = partial_trace(rho, Factor::Second, 2, 2);
    CHECK((kept_s - kept_a).max_abs() < 2e-6);
  }
}

TEST_CASE("cloning_oracle: global and local criteria diverge at x = 0.5") {
  const CloneCandidate g = cloning_oracle(0.5, CloneObjective::Global, 10, 5);
  const CloneCandidate l = cloning_oracle(0.5, CloneObjective::Local, 10, 5);
  REQUIRE(g.feasible);
  REQUIRE(l.feasible);
  CHECK(l.f_local - g.f_local > 1e-4);
}

TEST_CASE("cloning_oracle: argument validation") {
  CHECK_THROWS_AS(cloning_oracle(-0.2, CloneObjective::Global, 4), DomainError);
  CHECK_THROWS_AS(cloning_oracle(0.5, CloneObjective::Global, 0), DomainError);
}
