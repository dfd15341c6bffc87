#pragma once

#include <functional>
#include <vector>

namespace heunspectra {

// Power-series recurrence at a regular singular point with exponent 0:
//   lead(n) s_{n+1} + mid(n) s_n + low(n) s_{n-1} = 0,  n >= 0.
struct ThreeTermRecurrence {
  std::function<double(int)> lead, mid, low;
};

struct PolynomialSolution {
  std::vector<double> coeffs;  // s_0 = 1
  // Residual of the one equation left over once degree is fixed, relative
  // to the size of its terms.
  double defect = 0;
  double relative_defect = 0;
  // Index n whose lead(n) vanished (exponent resonance), or -1.
  int resonance = -1;
};

// Polynomial solution of exact degree `degree`. If lead(degree-1) vanishes
// the coefficient s_degree is free and is fixed by the truncation equation
// at n = degree; the equation at the resonance is the defect. Otherwise the
// truncation equation itself is the defect.
PolynomialSolution polynomial_solution(const ThreeTermRecurrence& rec, int degree, double resonance_tol = 1e-12);

// Generic second-order ODE with singular points 0, 1, t and the layout
//   f'' + (res0/w + res1/(w-1) + res_t/(w-t)) f' + (lin w + constant)/(w (w-1) (w-t)) f.
struct FuchsianLayout {
  double t, res0, res1, res_t, lin, constant;
};

// Confluent counterpart
//   f'' + (expo + res0/w + res1/(w-1)) f' + (lin w + constant)/(w (w-1)) f.
struct ConfluentLayout {
  double expo, res0, res1, lin, constant;
};

ThreeTermRecurrence recurrence_at_zero(const FuchsianLayout& h);
ThreeTermRecurrence recurrence_at_zero(const ConfluentLayout& c);

}  // namespace heunspectra
