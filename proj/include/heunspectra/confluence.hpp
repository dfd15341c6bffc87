#pragma once

#include <optional>
#include <vector>

#include "heunspectra/aqrm.hpp"
#include "heunspectra/bigrat.hpp"
#include "heunspectra/frobenius.hpp"
#include "heunspectra/heun.hpp"

namespace heunspectra {

// Growth data of the confluence: p = r t and eps = k / t, lower-order terms zero.
struct ConfluenceParams {
  double r = 0;
  double k = 0;
};

// Heun data with a prescribed A = (-1 - 2 nu + 2 a) / 4, at representation
// parameter a and singular point t.
HeunData heun_with_A(double A, double eta, HeunVariant variant, double a = 1, double t = 2);

// Limit layout  f'' + (-r + res0/w + res1/(w-1)) f' + (lin w + constant)/(w (w-1)) f.
ConfluentLayout confluent_limit_ode(const HeunData& h, const ConfluenceParams& cp);

// The Heun data of h moved along the confluence family to singular point t:
// a -> a + r t, nu -> nu + r t, eps = k / t.
HeunData confluence_prelimit(const HeunData& h, const ConfluenceParams& cp, double t);

enum class KConvention {
  matched,  // reproduces the AQRM numerator constant exactly
  printed,  // 4g^2(eta - eta^2) grouping inside the braces
};

double k_squared_from_energy(double g, double delta, double eta, double E, KConvention conv = KConvention::matched);
double k_from_energy(double g, double delta, double eta, double E, KConvention conv = KConvention::matched);
double k_constraint_branch(double g, double delta);

// Finite-t constraint function of the confluence family.
template <class T>
std::vector<T> q_tilde_sequence(int L, const T& eta, const T& a, int i, const T& t, const T& r, const T& k) {
  std::vector<T> q{T(1)};
  const T two_l = T(2 * L + 1) + T(4) * eta;
  for (int j = 1; j <= i; ++j) {
    const T grow = two_l / (T(2) * t) + r;
    T d_tilde = (t - T(1)) / t * k * k * grow * grow -
                T(4 * j) * ((T(j) + T(2) * eta - r) - (T(2 * L - 2 * j + 1) + T(4) * eta) / (T(2) * t));
    T next = d_tilde * q[j - 1] / T(4);
    if (j >= 2)
      next = next - ((T(L - 2 * j) + a) / (T(2) * t) + r) * (T(L - 2 * j + 3) - a) * T(j) * T(j - 1) * q[j - 2] / T(2);
    q.push_back(next);
  }
  return q;
}

double q_tilde(int L, double eta, double a, int i, double t, const ConfluenceParams& cp);
BigRat q_tilde_exact(int L, const BigRat& eta, const BigRat& a, int i, const BigRat& t, const BigRat& r,
                     const BigRat& k);

struct ConvergenceRow {
  double t, q_tilde, P_target, abs_diff;
};

struct ConvergenceTable {
  int L = 0, i = 0, N = 0;
  double eta = 0, a = 0, g = 0, delta = 0;
  std::vector<ConvergenceRow> rows;
  double slope = 0;  // NaN when every difference vanishes
};

// Uses a = -L + 1 unless overridden; P target is P_i^(N, eta) with N = (L + 1 - a)/2.
ConvergenceTable q_tilde_convergence(int L, double eta, int i, double g, double delta, const std::vector<double>& t_grid,
                                     std::optional<double> a = std::nullopt);

struct DescentMap {
  int L = 0;
  double a = 0, eta = 0, g = 0, delta = 0;
  double E = 0;
  int N = 0;
};

// variant 1 uses +eta, variant 2 uses -eta.
DescentMap descent_eigenvalue(int L, double a, double eta, double g, int variant = 1);

struct Compatibility {
  double residual = 0;
  bool exact_zero = false;
  std::vector<int> admissible_L;
};

// Residual of N (4g^2) + Delta^2 - N (N + 2 eta); admissible degrees are
// L = 2n + a - 1 over the non-negative integer roots n of the same relation.
Compatibility compatibility_check(int N, double g, double delta, double eta, double a = 1);

struct DescentRow {
  double t = 0;
  double delta_t = 0;  // re-refined constraint root at this t
  std::vector<double> coeffs;
  double distance = 0;  // max |coeff - Juddian coeff|
};

struct DescentTable {
  int L = 0, N = 0;
  double a = 0, eta = 0, g = 0, delta = 0;
  std::vector<double> juddian;
  std::vector<DescentRow> rows;
};

DescentTable descent_eigenfunction(int L, double eta, double g, double delta, const std::vector<double>& t_sequence,
                                   std::optional<double> a = std::nullopt);

}  // namespace heunspectra
