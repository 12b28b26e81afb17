#include <doctest.h>

#include <numbers>

#include "harmconv/analysis.hpp"
#include "support.hpp"

using namespace harmconv;
using test_support::disk_samples;
using test_support::dist;

namespace {

constexpr double kPi = std::numbers::pi;

const double kThetas[] = {0.0, kPi / 6, -kPi / 6, kPi / 3, -kPi / 3, kPi / 2, -kPi / 2, 5 * kPi / 6, -5 * kPi / 6};

// A - B straight from principal arguments.
double direct_gap(double theta, double t) {
  const Cx et = std::polar(1.0, t), ets = std::polar(1.0, theta + t);
  return std::arg((1.0 + ets) / (1.0 - et)) - std::arg((1.0 - ets) / (1.0 + et));
}

bool near_special(double theta, double t, double eps) {
  for (double s : {0.0, kPi - theta, kPi, 2 * kPi - theta, 2 * kPi, -theta, 3 * kPi - theta})
    if (std::abs(t - s) < eps) return true;
  return false;
}

}  // namespace

TEST_CASE("J: simplified against unsimplified form") {
  CHECK(dist(eval_J(kPi / 6, Cx(0.0, 0.5)), eval_J_from_parts(kPi / 6, Cx(0.0, 0.5))) < 1e-12);
  for (double theta : kThetas) {
    double worst = 0.0;
    for (const Cx z : disk_samples(500, 0.98, 61)) {
      if (std::abs(z) < 0.02) continue;  // the unsimplified form cancels catastrophically at 0
      const Cx ref = eval_J_from_parts(theta, z);
      worst = std::max(worst, std::abs(eval_J(theta, z) - ref) / std::max(1.0, std::abs(ref)));
    }
    CAPTURE(theta);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("J(0) = 2 and continuity at the origin") {
  for (double theta : kThetas) {
    CHECK(dist(eval_J(theta, 0.0), 2.0) < 1e-15);
    const Cx e = std::polar(1.0, theta);
    // J = 2 + (4e - 8)/3 z + O(z^2)
    for (const Cx z : {Cx(1e-5, 0.0), Cx(0.0, -1e-5), Cx(3e-6, 4e-6)})
      CHECK(dist(eval_J(theta, z), 2.0 + (4.0 * e - 8.0) / 3.0 * z) < 1e-9);
  }
  CHECK_THROWS_AS(eval_J(kPi, 0.3), ParameterError);
}

TEST_CASE("Re J > 0 inside the disk") {
  for (double theta : {0.0, kPi / 6, -kPi / 6, kPi / 3, -kPi / 3, kPi / 2, -kPi / 2}) {
    double worst = 1e300;
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 360; ++j) {
        const Cx z = std::polar(0.995 * (i + 0.5) / 100, 2 * kPi * j / 360);
        try {
          worst = std::min(worst, eval_J(theta, z).real());
        } catch (const SingularityError&) {
        }
      }
    CAPTURE(theta);
    CHECK(worst > 0.0);
  }
  CHECK(eval_J(0.0, 0.5).real() > 0.0);
}

TEST_CASE("B < 0 and the Schwarz bound") {
  for (double theta : kThetas) {
    const MappingSpec f1 = make_f1(theta);
    for (const Cx z : disk_samples(1000, 0.99, 62)) {
      if (std::abs(z) < 1e-3) continue;
      CHECK(b_quantity(0.3, theta, z) < 0.0);
      const Cx dg = eval_g(f1, z) - eval_g(f1, -z), dh = eval_h(f1, z) - eval_h(f1, -z);
      CHECK(std::abs(dg) < std::abs(z) * std::abs(dh));
    }
  }
}

TEST_CASE("boundary arg gap: case table against principal arguments") {
  for (double theta : kThetas)
    for (int k = 0; k < 4000; ++k) {
      const double t = 2 * kPi * (k + 0.37) / 4000;
      if (near_special(theta, t, 1e-6)) continue;
      CAPTURE(theta);
      CAPTURE(t);
      CHECK(boundary_arg_gap(theta, t) == doctest::Approx(direct_gap(theta, t)).epsilon(1e-9));
    }
}

TEST_CASE("J_boundary matches radial limits of J") {
  const double rho = 1.0 - 1e-9;
  for (double theta : kThetas)
    for (int k = 0; k < 200; ++k) {
      const double t = 2 * kPi * (k + 0.5) / 200;
      if (near_special(theta, t, 0.05)) continue;
      const BoundaryValue b = J_boundary(theta, t);
      const Cx radial = eval_J(theta, std::polar(rho, t));
      CAPTURE(theta);
      CAPTURE(t);
      CHECK(b.kind == BoundaryCase::Regular);
      CHECK(std::abs(b.re - radial.real()) < 1e-6);
      CHECK(dist(b.value, radial) < 1e-6);
      CHECK(b.value.real() == doctest::Approx(b.re).epsilon(1e-12));
    }
}

TEST_CASE("J_boundary examples and limits") {
  CHECK(J_boundary(kPi / 3, 0.0).kind == BoundaryCase::LimitAtOne);
  CHECK(J_boundary(kPi / 3, 0.0).re == 0.0);
  const BoundaryValue top = J_boundary(kPi / 2, 2 * kPi - kPi / 2);
  CHECK(top.kind == BoundaryCase::LimitAtTwoPiMinusTheta);
  CHECK(top.re == 0.0);
  CHECK(dist(top.value, Cx(0.0, 4.0)) < 1e-14);
  CHECK(J_boundary(kPi / 6, kPi / 2).re > 0.0);
  CHECK(boundary_arg_gap(kPi / 6, kPi / 2) == doctest::Approx(kPi));
  CHECK(boundary_arg_gap(0.0, 3 * kPi / 2) == doctest::Approx(-kPi));
  CHECK(J_boundary(0.0, 3 * kPi / 2).re >= 0.0);
  CHECK(J_boundary(0.0, kPi).re == 0.0);
  CHECK(J_boundary(kPi / 4, kPi).infinite);
  CHECK(J_boundary(kPi / 4, kPi - kPi / 4).kind == BoundaryCase::LimitAtPiMinusTheta);
  CHECK_THROWS_AS(J_boundary(kPi, 1.0), ParameterError);

  // Limits approached radially through the boundary formula.
  for (double theta : {kPi / 6, kPi / 3, kPi / 2, -kPi / 3}) {
    const double t0 = 2 * kPi - theta;
    const Cx near = J_boundary(theta, t0 + 1e-7).value;
    CHECK(dist(near, Cx(0.0, 4 * std::tan(theta / 2))) < 1e-5);
    CHECK(std::abs(J_boundary(theta, 1e-7).value) < 1e-5);
    CHECK(std::abs(J_boundary(theta, kPi - theta + 1e-7).value) < 1e-5);
    // Logarithmic blow-up at -1 when theta != 0.
    const double far = std::abs(J_boundary(theta, kPi + 1e-2).value);
    const double close = std::abs(J_boundary(theta, kPi + 1e-8).value);
    CHECK(close > far + 5.0);
  }
}

TEST_CASE("Re J on the boundary is nonnegative") {
  for (double theta : kThetas) {
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const BoundaryValue b = J_boundary(theta, 2 * kPi * k / 10000);
      if (!b.infinite) worst = std::min(worst, b.re);
    }
    CAPTURE(theta);
    CHECK(worst >= -1e-12);
  }
}
