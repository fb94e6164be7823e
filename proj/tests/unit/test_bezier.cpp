#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rpcrank/bezier.hpp"

using namespace rpcrank;

TEST_SUITE("bezier") {

TEST_CASE("coefficient matrix rows") {
  const Eigen::Matrix4d& m = bernstein_coefficients();
  CHECK(m(0, 0) == 1.0);
  CHECK(m(0, 1) == -3.0);
  CHECK(m(0, 2) == 3.0);
  CHECK(m(0, 3) == -1.0);
  CHECK(m(1, 1) == 3.0);
  CHECK(m(1, 2) == -6.0);
  CHECK(m(1, 3) == 3.0);
  CHECK(m(2, 2) == 3.0);
  CHECK(m(2, 3) == -3.0);
  CHECK(m(3, 3) == 1.0);
  CHECK(m.col(0).tail(3).isZero(0.0));
}

TEST_CASE("basis matches the term-by-term polynomials") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> draw(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double s = draw(rng);
    const Eigen::Vector4d basis = bernstein_basis(s);
    const Eigen::Vector4d direct = oracles::bernstein_direct(s);
    CHECK((basis - direct).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(std::abs(basis.sum() - 1.0) <= 1e-12);  // partition of unity
    CHECK((basis.array() >= -1e-15).all());
  }
}

TEST_CASE("basis endpoints and midpoint are exact") {
  CHECK(bernstein_basis(0.0) == Eigen::Vector4d(1.0, 0.0, 0.0, 0.0));
  CHECK(bernstein_basis(1.0) == Eigen::Vector4d(0.0, 0.0, 0.0, 1.0));
  CHECK(bernstein_basis(0.5) == Eigen::Vector4d(0.125, 0.375, 0.375, 0.125));
}

TEST_CASE("basis rejects parameters outside the unit interval") {
  CHECK_THROWS_AS(bernstein_basis(-0.01), std::domain_error);
  CHECK_THROWS_AS(bernstein_basis(1.01), std::domain_error);
  CHECK_THROWS_AS(bernstein_basis(std::nan("")), std::domain_error);
}

TEST_CASE("straight-line control points reproduce the identity") {
  ControlPointMatrix control(2, 4);
  for (int r = 0; r < 4; ++r)
    control.col(r) = Eigen::Vector2d::Constant(static_cast<double>(r) / 3.0);
  for (double s : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const Eigen::VectorXd point = evaluate_curve(control, s);
    CHECK(std::abs(point[0] - s) <= 1e-12);
    CHECK(std::abs(point[1] - s) <= 1e-12);
  }
}

TEST_CASE("curve interpolates its endpoints exactly") {
  std::mt19937_64 rng(12);
  const OrientationVector orientation(Eigen::Vector3d(1.0, 1.0, -1.0));
  const ControlPointMatrix control = oracles::random_admissible_control(orientation, rng);
  CHECK(evaluate_curve(control, 0.0) == control.col(0));
  CHECK(evaluate_curve(control, 1.0) == control.col(3));
}

TEST_CASE("curve evaluation matches the direct oracle") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> draw(0.0, 1.0);
  const OrientationVector orientation(Eigen::Vector4d(1.0, -1.0, 1.0, 1.0));
  for (int k = 0; k < 200; ++k) {
    const ControlPointMatrix control = oracles::random_admissible_control(orientation, rng);
    const double s = draw(rng);
    const Eigen::VectorXd gap =
        evaluate_curve(control, s) - oracles::curve_direct(control, s);
    CHECK(gap.cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("derivative matches central differences") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> draw(0.05, 0.95);
  const OrientationVector orientation(Eigen::Vector3d(1.0, 1.0, 1.0));
  for (int k = 0; k < 200; ++k) {
    const ControlPointMatrix control = oracles::random_admissible_control(orientation, rng);
    const double s = draw(rng);
    const Eigen::VectorXd gap =
        curve_derivative(control, s) - oracles::central_difference(control, s);
    CHECK(gap.cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("derivative at the ends reduces to control point gaps") {
  std::mt19937_64 rng(15);
  const OrientationVector orientation(Eigen::Vector2d(1.0, 1.0));
  const ControlPointMatrix control = oracles::random_admissible_control(orientation, rng);
  CHECK(curve_derivative(control, 0.0) == 3.0 * (control.col(1) - control.col(0)));
  CHECK(curve_derivative(control, 1.0) == 3.0 * (control.col(3) - control.col(2)));
}

TEST_CASE("affine transforms commute with evaluation") {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> draw(0.0, 1.0);
  const OrientationVector orientation(Eigen::Vector3d(1.0, 1.0, 1.0));
  const ControlPointMatrix control = oracles::random_admissible_control(orientation, rng);
  const Eigen::Vector3d scale(2.5, 0.5, 40.0);
  const Eigen::Vector3d offset(-1.0, 3.0, 100.0);
  const ControlPointMatrix mapped = affine_transform_curve(control, scale, offset);
  for (int k = 0; k < 50; ++k) {
    const double s = draw(rng);
    const Eigen::VectorXd direct =
        scale.cwiseProduct(evaluate_curve(control, s)) + offset;
    CHECK((evaluate_curve(mapped, s) - direct).cwiseAbs().maxCoeff() <= 1e-12);
  }
  const ControlPointMatrix back = affine_transform_curve(
      mapped, scale.cwiseInverse(), -offset.cwiseQuotient(scale));
  CHECK((back - control).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("affine transform rejects mismatched dimensions") {
  ControlPointMatrix control = ControlPointMatrix::Zero(3, 4);
  CHECK_THROWS_AS(
      affine_transform_curve(control, Eigen::Vector2d(1, 1), Eigen::Vector2d(0, 0)),
      std::invalid_argument);
}

TEST_CASE("admissibility requires corners and a strict interior") {
  const OrientationVector orientation(Eigen::Vector2d(1.0, -1.0));
  ControlPointMatrix control(2, 4);
  control.col(0) = orientation.low_corner();   // (0, 1)
  control.col(1) << 0.25, 0.7;
  control.col(2) << 0.75, 0.3;
  control.col(3) = orientation.high_corner();  // (1, 0)
  CHECK(check_monotone_admissible(control, orientation));

  ControlPointMatrix boundary = control;
  boundary(0, 1) = 0.0;  // interior point touching a face is no longer strict
  CHECK_FALSE(check_monotone_admissible(boundary, orientation));

  ControlPointMatrix off_corner = control;
  off_corner(0, 0) += 2e-9;
  CHECK_FALSE(check_monotone_admissible(off_corner, orientation));

  ControlPointMatrix near_corner = control;
  near_corner(0, 0) += 1e-10;  // inside the endpoint tolerance
  CHECK(check_monotone_admissible(near_corner, orientation));
}

TEST_CASE("admissible curves sample as strictly monotone") {
  std::mt19937_64 rng(17);
  const OrientationVector orientation(Eigen::Vector3d(1.0, -1.0, 1.0));
  for (int k = 0; k < 25; ++k) {
    const ControlPointMatrix control = oracles::random_admissible_control(orientation, rng);
    const MonotonicityCheck check = sample_curve_monotonicity(control, orientation, 1000);
    CHECK(check.pass);
  }
}

TEST_CASE("a bent curve fails with a usable witness") {
  const OrientationVector orientation(Eigen::VectorXd::Ones(1));
  ControlPointMatrix control(1, 4);
  control << 0.0, 1.4, -0.4, 1.0;  // derivative dips negative mid-curve
  const int grid = 1000;
  const MonotonicityCheck check = sample_curve_monotonicity(control, orientation, grid);
  REQUIRE_FALSE(check.pass);
  CHECK(check.witness_axis == 0);
  CHECK(check.witness_s > 0.0);
  CHECK(check.witness_s < 1.0);
  // The witness itself violates the derivative condition.
  CHECK(curve_derivative(control, check.witness_s)[0] <= 0.0);
  // And it sits within one grid step of a sign change.
  const double step = 1.0 / (grid - 1);
  CHECK(curve_derivative(control, check.witness_s - step)[0] > 0.0);
}

TEST_CASE("monotonicity sampling validates its grid") {
  ControlPointMatrix control = ControlPointMatrix::Zero(1, 4);
  const OrientationVector orientation(Eigen::VectorXd::Ones(1));
  CHECK_THROWS_AS(sample_curve_monotonicity(control, orientation, 1),
                  std::invalid_argument);
}

}  // TEST_SUITE
