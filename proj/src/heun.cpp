#include "heunspectra/heun.hpp"

#include <cmath>
#include <numbers>

#include "heunspectra/errors.hpp"

namespace heunspectra {

double accessory_parameter(double t, double eps, double eta, double a, double nu) {
  const double s = a - 0.5 - nu;
  return (-s * s + 4 * eta * eta + eps * eps * nu * nu) * (t - 1) - 2 * (a - 0.5) * (s + 2 * eta);
}

HeunData heun_data(double t, double eps, double eta, double a, double nu, HeunVariant variant) {
  if (!(t > 1)) throw InvalidParams("t must exceed 1");
  HeunData h;
  h.t = t;
  h.a = a;
  h.nu = nu;
  h.eta = eta;
  h.eps = eps;
  h.variant = variant;
  h.A = 0.25 * (-1 - 2 * nu + 2 * a);
  h.B = a - 0.5;
  h.C = 1 + h.A;
  h.D = h.A;
  h.Abar = h.A + eta;
  h.Bbar = h.B;
  h.Cbar = h.C + eta;
  h.Dbar = h.D - eta;
  h.Fbar = h.Abar + h.Bbar + 1 - h.Cbar - h.Dbar;
  h.q_bar = accessory_parameter(t, eps, eta, a, nu);
  return h;
}

HeunData heun_from_ncho(const NchoParams& p, double a, double nu, HeunVariant variant) {
  DerivedNcho d = derive(p);
  return heun_data(d.t, d.eps, p.eta, a, nu, variant);
}

FuchsianLayout heun_layout(const HeunData& h) {
  if (h.variant == HeunVariant::Lambda) return {h.t, h.Cbar, h.Dbar, h.Fbar, h.Abar * h.B, -h.q_bar};
  return {h.t,
          h.A + h.eta,
          h.A + 1 - h.eta,
          h.A + h.B + 2 - h.C - h.D + h.eta,
          (h.A + 1 + h.eta) * h.B,
          -h.q_bar};
}

OdeCoefficients heun_coefficients(const HeunData& h, Complex omega) {
  if (omega == 0.0 || omega == 1.0 || omega == h.t) throw PoleEvaluation("omega is a singular point");
  FuchsianLayout l = heun_layout(h);
  OdeCoefficients c;
  c.first = l.res0 / omega + l.res1 / (omega - 1.0) + l.res_t / (omega - h.t);
  c.zeroth = (l.lin * omega + l.constant) / (omega * (omega - 1.0) * (omega - h.t));
  return c;
}

double RiemannScheme::exponent_sum() const {
  double s = 0;
  for (const auto& row : exponents) s += row[0] + row[1];
  return s;
}

RiemannScheme riemann_scheme(const HeunData& h) {
  FuchsianLayout l = heun_layout(h);
  RiemannScheme s;
  s.t = h.t;
  s.accessory = h.q_bar;
  s.exponents[0] = {0, 1 - l.res0};
  s.exponents[1] = {0, 1 - l.res1};
  s.exponents[2] = {0, 1 - l.res_t};
  if (h.variant == HeunVariant::Lambda)
    s.exponents[3] = {h.Abar, h.Bbar};
  else
    s.exponents[3] = {h.A + 1 + h.eta, h.B};
  return s;
}

RiemannScheme riemann_scheme(const HeunData& h, Parity parity, std::optional<int> finite_type_L) {
  if (parity == Parity::none) throw InvalidParams("parity must be even or odd");
  const double expected_a = parity == Parity::even ? 1 : 2;
  if (h.a != expected_a) throw InvalidParams("parity requires a = " + std::to_string(int(expected_a)));
  double nu = h.nu;
  if (finite_type_L) {
    if (*finite_type_L < 0 || (*finite_type_L % 2 == 0) != (parity == Parity::even))
      throw InvalidParams("finite-type degree does not match parity");
    nu = *finite_type_L + 0.5 + 2 * h.eta;
  }
  const double eta = h.eta;
  const double sigma = 0.25 * (2 * nu - 3 - 4 * eta);
  RiemannScheme s;
  s.t = h.t;
  s.accessory = h.q_bar;
  if (parity == Parity::even) {
    s.exponents[0] = {0, sigma + 0.5};
    s.exponents[1] = {0, sigma + 1.5 + 2 * eta};
    s.exponents[2] = {0, -sigma - 2 * eta};
    s.exponents[3] = {0.5, -(sigma + 0.5)};
  } else {
    s.exponents[0] = {0, sigma};
    s.exponents[1] = {0, sigma + 1 + 2 * eta};
    s.exponents[2] = {0, -sigma - 0.5 - 2 * eta};
    s.exponents[3] = {1.5, -sigma};
  }
  return s;
}

MonodromyTable monodromy_eigenvalues(const RiemannScheme& s) {
  MonodromyTable out;
  for (int p = 0; p < 4; ++p)
    for (int j = 0; j < 2; ++j) {
      double frac = s.exponents[p][j] - std::floor(s.exponents[p][j]);
      if (frac == 0)
        out[p][j] = 1.0;
      else if (frac == 0.5)
        out[p][j] = -1.0;
      else
        out[p][j] = std::polar(1.0, 2 * std::numbers::pi * frac);
    }
  return out;
}

void check_degree(int L, double a) {
  if (L < 2) throw DegreeTooSmall("L must be at least 2");
  if (a == -L) throw ExcludedRepresentation("a = -L is excluded");
}

ConstraintEntries<QuadExt> exact_entries(int L, const BigRat& eta, const BigRat& a, const BigRat& t,
                                         const BigRat& eps_sq) {
  check_degree(L, a.get_d());
  if (cmp(t, 1) <= 0) throw InvalidParams("t must exceed 1");
  ConstraintEntries<QuadExt> e;
  e.L = L;
  e.eta = eta;
  e.a = a;
  e.eps_sq = QuadExt(eps_sq);
  e.inv_sh2k = QuadExt(0, BigRat((t - 1) / (2 * t)), t);
  e.cth2k = QuadExt(0, BigRat((t + 1) / (2 * t)), t);
  return e;
}

ConstraintEntries<double> float_entries(int L, double eta, double a, double t, double eps_sq) {
  check_degree(L, a);
  if (!(t > 1)) throw InvalidParams("t must exceed 1");
  ConstraintEntries<double> e;
  e.L = L;
  e.eta = eta;
  e.a = a;
  e.eps_sq = eps_sq;
  e.inv_sh2k = (t - 1) / (2 * std::sqrt(t));
  e.cth2k = (t + 1) / (2 * std::sqrt(t));
  return e;
}

QuadExt constraint_continuant(int L, const BigRat& eta, const BigRat& a, const BigRat& t, const BigRat& eps_sq) {
  return constraint_continuant(exact_entries(L, eta, a, t, eps_sq));
}

double constraint_continuant(int L, double eta, double a, double t, double eps_sq) {
  return constraint_continuant(float_entries(L, eta, a, t, eps_sq));
}

BigRat normalized_q(int L, const BigRat& eta, const BigRat& a, int i, const BigRat& t, const BigRat& eps_sq) {
  check_degree(L, a.get_d());
  if (cmp(t, 1) <= 0) throw InvalidParams("t must exceed 1");
  if (i < 0 || i > (L - L % 2) / 2) throw IndexOutOfRange("index beyond matrix size");
  return normalized_q_sequence<BigRat>(L, eta, a, t, eps_sq)[i];
}

QuasiExactSolution quasi_exact(const BigRat& t, const BigRat& eps_sq, const BigRat& a, int L, const BigRat& eta) {
  auto e = exact_entries(L, eta, a, t, eps_sq);
  if (sgn(eps_sq) == 0) throw InvalidParams("eps must be nonzero");
  QuasiExactSolution sol;
  sol.L = L;
  sol.rho = L % 2;
  sol.a = a;
  sol.eta = eta;
  sol.t = t;
  sol.eps_sq = eps_sq;
  auto& r = sol.coeffs;
  r[sol.rho] = QuadExt(1);
  for (int m = sol.rho + 2; m <= L - 2; m += 2) {
    QuadExt lead = e.d(m - 2);
    if (lead.is_zero()) throw DegenerateRecurrence("vanishing recurrence coefficient at degree " + std::to_string(m));
    QuadExt rhs = -e.c(m - 2) * r[m - 2];
    if (m - 4 >= sol.rho) rhs -= e.f(m - 4) * r[m - 4];
    r[m] = rhs / lead;
  }
  const QuadExt sh2k(0, BigRat(2 / (t - 1)), t);
  const BigRat nu = BigRat(L) + BigRat(1, 2) + 2 * eta;
  r[L] = QuadExt(BigRat(2 * (L - 2 + a))) * sh2k / QuadExt(BigRat(2 * eps_sq * nu * nu)) * r[L - 2];
  return sol;
}

MonomialAction monomial_action(int m, const BigRat& a, const BigRat& t, const BigRat& eps_sq, const BigRat& eta,
                               const BigRat& nu) {
  const QuadExt inv_sh2k(0, BigRat((t - 1) / (2 * t)), t);
  const QuadExt cth2k(0, BigRat((t + 1) / (2 * t)), t);
  const BigRat shift = BigRat(m) + BigRat(1, 2) - nu + 2 * eta;
  MonomialAction act;
  act.up = QuadExt(BigRat(shift * (m + a)));
  act.mid = QuadExt(BigRat(2 * eps_sq * nu * nu)) * inv_sh2k +
            QuadExt(shift) * (QuadExt(BigRat(2 * nu + 4 * eta)) * inv_sh2k - cth2k * QuadExt(2 * m + 1));
  act.down = QuadExt(BigRat(shift * (m - a + 1)));
  return act;
}

LaurentResidual apply_quasi_exact_operator(const QuasiExactSolution& sol, const BigRat& t, const BigRat& eps_sq,
                                           const BigRat& eta, const BigRat& nu) {
  LaurentResidual res;
  for (const auto& [m, r] : sol.coeffs) {
    if (r.is_zero()) continue;
    MonomialAction act = monomial_action(m, sol.a, t, eps_sq, eta, nu);
    res[m + 2] += act.up * r;
    res[m] += act.mid * r;
    res[m - 2] += act.down * r;
  }
  for (auto it = res.begin(); it != res.end();) it = it->second.is_zero() ? res.erase(it) : std::next(it);
  return res;
}

QuadExt banded_system_determinant(int L, const BigRat& eta, const BigRat& a, const BigRat& t, const BigRat& eps_sq) {
  check_degree(L, a.get_d());
  const int rho = L % 2;
  const int n = (L - rho) / 2 + 1;
  const BigRat nu = BigRat(L) + BigRat(1, 2) + 2 * eta;
  std::vector<std::vector<QuadExt>> m(n, std::vector<QuadExt>(n, QuadExt(0)));
  for (int col = 0; col < n; ++col) {
    const int deg = rho + 2 * col;
    MonomialAction act = monomial_action(deg, a, t, eps_sq, eta, nu);
    m[col][col] = act.mid;
    if (col + 1 < n) m[col + 1][col] = act.up;
    if (col >= 1) m[col - 1][col] = act.down;
  }
  return dense_determinant(m);
}

PolynomialSolution heun_polynomial_solution(const FuchsianLayout& h, int degree) {
  return polynomial_solution(recurrence_at_zero(h), degree);
}

}  // namespace heunspectra
