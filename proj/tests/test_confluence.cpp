#include <cmath>

#include "doctest.h"
#include "heunspectra/confluence.hpp"
#include "heunspectra/errors.hpp"

using namespace heunspectra;

TEST_CASE("limit operator") {
  SUBCASE("prelimit converges to the limit layout") {
    const double A = -1.7, eta = 0.3, r = 1.2, k = 0.8;
    const HeunData h = heun_with_A(A, eta, HeunVariant::Lambda);
    CHECK(h.A == doctest::Approx(A));
    const ConfluentLayout lim = confluent_limit_ode(h, {r, k});
    const std::complex<double> w(0.4, 0.3);
    double prev = 1e300;
    for (double t : {1e2, 1e3, 1e4, 1e5}) {
      const HeunData p = confluence_prelimit(h, {r, k}, t);
      const OdeCoefficients c = heun_coefficients(p, w);
      const CheCoefficients d = che_coefficients(lim, w);
      // the singular point at t absorbs into the exponential factor at infinity
      const double gap = std::abs(c.first - d.first) + std::abs(c.zeroth - d.zeroth);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(prev < 1e-3);
  }
  SUBCASE("symmetric case") {
    const HeunData h = heun_with_A(-2.1, 0, HeunVariant::Lambda);
    const HeunData hb = heun_with_A(-2.1, 0, HeunVariant::LambdaBar);
    const ConfluentLayout a = confluent_limit_ode(h, {2, 1}), b = confluent_limit_ode(hb, {2, 1});
    CHECK(a.res0 == b.res1);
    CHECK(a.res1 == b.res0);
    CHECK(a.constant == b.constant);
  }
  SUBCASE("non-finite data") {
    const HeunData h = heun_with_A(-1, 0.2, HeunVariant::Lambda);
    CHECK_THROWS_AS(confluent_limit_ode(h, {INFINITY, 1}), DivergentLimit);
  }
}

TEST_CASE("k from energy") {
  const double g = 0.7, delta = 1.3, eta = 0.3, E = 3.0;
  const double k = k_from_energy(g, delta, eta, E);
  const double r = 4 * g * g, A = -(E + g * g);
  const HeunData h = heun_with_A(A, eta, HeunVariant::Lambda);
  const AqrmParams p{g, delta, eta};
  CHECK(confluent_limit_ode(h, {r, k}).constant ==
        doctest::Approx(che_from_aqrm(p, E, CheVariant::H1).layout.constant).epsilon(1e-13));
  CHECK_THROWS_AS(k_from_energy(0, delta, eta, E), InvalidParams);
  CHECK_THROWS_AS(k_from_energy(0.5, 10, 0.5, 1), NegativeRadicand);
  // a radicand of exactly zero: choose Delta to cancel the bracket
  const double s = 1.5, g2 = 0.25, et = 0.5;
  const double bracket = 5 * (s * s - 4 * g2 * s + 4 * g2 * et - et * et);
  CHECK(k_from_energy(0.5, std::sqrt(bracket), et, s - g2) == doctest::Approx(0).epsilon(1e-7));
  CHECK(k_constraint_branch(0.5, 1) == 2);
  CHECK(k_constraint_branch(1.0, 3) == 1.5);
  CHECK(k_constraint_branch(2.0, 3) == doctest::Approx(k_constraint_branch(1.0, 3) / 4));
}

TEST_CASE("q tilde recurrence") {
  const double g = 0.5, delta = 1, eta = 0.5;
  const ConfluenceParams cp{4 * g * g, k_constraint_branch(g, delta)};
  for (double t : {16.0, 1e3, 1e6}) CHECK(q_tilde(4, eta, -3, 0, t, cp) == 1);
  // the first step tends to Delta^2 + 4g^2 - 1 - 2 eta
  const double target = delta * delta + 4 * g * g - 1 - 2 * eta;
  CHECK(std::abs(q_tilde(4, eta, -3, 1, 1e9, cp) - target) < 1e-7);
  CHECK_THROWS_AS(q_tilde(4, eta, -3, 5, 16, cp), IndexOutOfRange);

  std::vector<double> grid;
  for (int e = 4; e <= 24; ++e) grid.push_back(std::ldexp(1.0, e));
  const ConvergenceTable zero = q_tilde_convergence(4, eta, 0, g, delta, grid);
  for (const auto& row : zero.rows) CHECK(row.abs_diff == 0);
  CHECK(std::isnan(zero.slope));
  const ConvergenceTable one = q_tilde_convergence(4, eta, 1, g, delta, grid);
  CHECK(one.N == 4);
  CHECK(one.slope == doctest::Approx(-1).epsilon(0.05));
  for (std::size_t k = 1; k < one.rows.size(); ++k) CHECK(one.rows[k].abs_diff < one.rows[k - 1].abs_diff);
  CHECK(one.rows.back().abs_diff < 1e-4);

  const BigRat exact = q_tilde_exact(3, rat(1, 2), BigRat(-2), 2, BigRat(64), BigRat(1), BigRat(2));
  CHECK(exact.get_d() == doctest::Approx(q_tilde(3, 0.5, -2, 2, 64, {1, 2})).epsilon(1e-14));
}

TEST_CASE("descent of eigenvalues and compatibility") {
  DescentMap m = descent_eigenvalue(2, 1, 0.5, 0.5);
  CHECK(m.N == 1);
  CHECK(m.E == 1.25);
  for (int M = 0; M < 5; ++M) CHECK(descent_eigenvalue(2 * M, 1, 0.3, 0.4).N == descent_eigenvalue(2 * M + 1, 2, 0.3, 0.4).N);
  CHECK(descent_eigenvalue(4, 1, 0, 0.7, 2).E == descent_eigenvalue(4, 1, 0, 0.7, 1).E);
  CHECK_THROWS_AS(descent_eigenvalue(3, 1, 0.2, 0.5), NonIntegerLevel);

  Compatibility c = compatibility_check(1, 0.5, 1, 0.5);
  CHECK(c.exact_zero);
  CHECK(c.residual == 0);
  CHECK(c.admissible_L == std::vector<int>{2});
  for (int N = 0; N < 4; ++N) {
    Compatibility z = compatibility_check(N, 0, 0, 0.75);
    CHECK(z.residual == doctest::Approx(-N * (N + 1.5)));
    CHECK(z.exact_zero == (N == 0));
  }
}

TEST_CASE("descent of eigenfunctions") {
  std::vector<double> ts;
  for (int e = 8; e <= 20; ++e) ts.push_back(std::ldexp(1.0, e));
  DescentTable tab = descent_eigenfunction(2, 0.5, 0.5, 1, ts);
  CHECK(tab.N == 1);
  for (std::size_t k = 1; k < tab.rows.size(); ++k) CHECK(tab.rows[k].distance < tab.rows[k - 1].distance);
  CHECK(tab.rows.back().distance < 1e-3);
  for (const auto& row : tab.rows) {
    // rescale both vectors to leading coefficient one
    double d = 0;
    for (std::size_t n = 0; n < row.coeffs.size(); ++n)
      d = std::max(d, std::abs(row.coeffs[n] / row.coeffs[0] - tab.juddian[n] / tab.juddian[0]));
    CHECK(d == doctest::Approx(row.distance));
  }
}
