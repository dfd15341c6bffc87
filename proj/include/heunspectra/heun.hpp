#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "heunspectra/bigrat.hpp"
#include "heunspectra/continuant.hpp"
#include "heunspectra/frobenius.hpp"
#include "heunspectra/ncho.hpp"
#include "heunspectra/quadext.hpp"
#include "heunspectra/spectrum.hpp"

namespace heunspectra {

using Complex = std::complex<double>;

enum class HeunVariant { Lambda, LambdaBar };

struct HeunData {
  double t = 0, a = 0, nu = 0, eta = 0, eps = 0;
  double A = 0, B = 0, C = 0, D = 0;
  double Abar = 0, Bbar = 0, Cbar = 0, Dbar = 0, Fbar = 0;
  double q_bar = 0;
  HeunVariant variant = HeunVariant::Lambda;
};

double accessory_parameter(double t, double eps, double eta, double a, double nu);

HeunData heun_data(double t, double eps, double eta, double a, double nu, HeunVariant variant);
HeunData heun_from_ncho(const NchoParams& p, double a, double nu, HeunVariant variant);

// Pole residues and numerator of the selected operator.
FuchsianLayout heun_layout(const HeunData& h);

struct OdeCoefficients {
  Complex second{1.0}, first, zeroth;
};

OdeCoefficients heun_coefficients(const HeunData& h, Complex omega);

struct RiemannScheme {
  double t = 0;
  // Rows: 0, 1, t, infinity.
  std::array<std::array<double, 2>, 4> exponents{};
  double accessory = 0;
  double exponent_sum() const;
};

// Exponents read off the operator layout.
RiemannScheme riemann_scheme(const HeunData& h);

// Parity-specific tables in terms of sigma = (2 nu - 3 - 4 eta) / 4; with a
// finite-type degree L, nu is taken as L + 1/2 + 2 eta.
RiemannScheme riemann_scheme(const HeunData& h, Parity parity, std::optional<int> finite_type_L = std::nullopt);

using MonodromyTable = std::array<std::array<Complex, 2>, 4>;
MonodromyTable monodromy_eigenvalues(const RiemannScheme& s);

// ---------------------------------------------------------------------------
// Constraint machinery for polynomial solutions of degree L.

template <class T>
struct ConstraintEntries {
  int L = 0;
  T eta, a;
  T eps_sq, inv_sh2k, cth2k;  // 1/sh(2k) and cth(2k)
  bool xy_form = false;
  T x, y;

  int rho() const { return L % 2; }
  int size() const { return (L - rho()) / 2; }

  T c(int i) const {
    const T two_l = T(2 * L + 1) + T(4) * eta;
    if (xy_form) {
      const T ratio = (x - T(1)) / (x + T(1));
      const T inv_y2 = T(1) / (y * y);
      return y * (ratio * ratio * two_l * two_l * (inv_y2 - T(1)) / T(4) +
                  T(i - L) * ((T(L - i) + T(4) * eta) * inv_y2 - (T(L + 1 + i) + T(4) * eta)));
    }
    return eps_sq * two_l * two_l * inv_sh2k / T(2) +
           T(i - L) * ((T(2 * L + 1) + T(8) * eta) * inv_sh2k - cth2k * T(2 * i + 1));
  }
  T d(int i) const { return (T(i + 3) - a) * T(i + 2 - L); }
  T f(int i) const { return (T(i) + a) * T(i - L); }
  T d_twisted(int i) const { return (T(i) + a) * T(i + 2 - L); }
  T f_twisted(int i) const { return (T(i + 3) - a) * T(i - L); }
};

void check_degree(int L, double a);

// Exact entries in Q(sqrt(t)).
ConstraintEntries<QuadExt> exact_entries(int L, const BigRat& eta, const BigRat& a, const BigRat& t,
                                         const BigRat& eps_sq);
ConstraintEntries<double> float_entries(int L, double eta, double a, double t, double eps_sq);

template <class T>
ConstraintEntries<T> xy_entries(int L, const T& eta, const T& a, const T& x, const T& y) {
  ConstraintEntries<T> e;
  e.L = L;
  e.eta = eta;
  e.a = a;
  const T ratio = (x - T(1)) / (x + T(1));
  e.eps_sq = ratio * ratio;
  e.inv_sh2k = (T(1) - y * y) / (T(2) * y);
  e.cth2k = (T(1) + y * y) / (T(2) * y);
  e.xy_form = true;
  e.x = x;
  e.y = y;
  return e;
}

// R_0..R_K for the constraint matrix with diagonal c_{L-2}, c_{L-4}, ..., c_rho.
template <class T>
std::vector<T> constraint_sequence(const ConstraintEntries<T>& e, bool twisted = false) {
  const int K = e.size();
  std::vector<T> diag, super, sub;
  for (int k = 1; k <= K; ++k) {
    diag.push_back(e.c(e.L - 2 * k));
    if (k >= 2) {
      super.push_back(twisted ? e.d_twisted(e.L - 2 * k) : e.d(e.L - 2 * k));
      sub.push_back(twisted ? e.f_twisted(e.L - 2 * k) : e.f(e.L - 2 * k));
    }
  }
  return continuant_sequence(diag, super, sub);
}

template <class T>
T constraint_continuant(const ConstraintEntries<T>& e, bool twisted = false) {
  return constraint_sequence(e, twisted).back();
}

QuadExt constraint_continuant(int L, const BigRat& eta, const BigRat& a, const BigRat& t, const BigRat& eps_sq);
double constraint_continuant(int L, double eta, double a, double t, double eps_sq);

// Normalized sequence q_0..q_K (rational for rational t, eps^2).
template <class T>
std::vector<T> normalized_q_sequence(int L, const T& eta, const T& a, const T& t, const T& eps_sq) {
  const int K = (L - L % 2) / 2;
  std::vector<T> q{T(1)};
  const T two_l = T(2 * L + 1) + T(4) * eta;
  for (int i = 1; i <= K; ++i) {
    T c_tilde = (t - T(1)) / (T(4) * t) * eps_sq * two_l * two_l -
                T(2 * i) * (T(2) * (T(i) + T(2) * eta) - (T(2 * L - 2 * i + 1) + T(4) * eta) / t);
    T next = c_tilde * q[i - 1] / T(4);
    if (i >= 2)
      next = next - (T(L - 2 * i) + a) * (T(L - 2 * i + 3) - a) * T(i) * T(i - 1) * q[i - 2] / (T(4) * t);
    q.push_back(next);
  }
  return q;
}

BigRat normalized_q(int L, const BigRat& eta, const BigRat& a, int i, const BigRat& t, const BigRat& eps_sq);

// ---------------------------------------------------------------------------
// Quasi-exact polynomial solutions p(z) = sum r_m z^m.

struct QuasiExactSolution {
  int L = 0;
  int rho = 0;
  BigRat a, eta, t, eps_sq;
  std::map<int, QuadExt> coeffs;
};

QuasiExactSolution quasi_exact(const BigRat& t, const BigRat& eps_sq, const BigRat& a, int L, const BigRat& eta);

struct MonomialAction {
  QuadExt up, mid, down;  // images in degrees m+2, m, m-2
};

MonomialAction monomial_action(int m, const BigRat& a, const BigRat& t, const BigRat& eps_sq, const BigRat& eta,
                               const BigRat& nu);

// Nonzero coefficients of the residual, keyed by degree (may be negative).
using LaurentResidual = std::map<int, QuadExt>;

LaurentResidual apply_quasi_exact_operator(const QuasiExactSolution& sol, const BigRat& t, const BigRat& eps_sq,
                                           const BigRat& eta, const BigRat& nu);

// Determinant of the square linear system for r_rho..r_L read off the
// monomial action at nu = L + 1/2 + 2 eta, by Gaussian elimination.
QuadExt banded_system_determinant(int L, const BigRat& eta, const BigRat& a, const BigRat& t, const BigRat& eps_sq);

// Degree-N polynomial solution at omega = 0 of the operator in `h`.
PolynomialSolution heun_polynomial_solution(const FuchsianLayout& h, int degree);

}  // namespace heunspectra
