#include "heunspectra/frobenius.hpp"

#include <algorithm>
#include <cmath>

#include "heunspectra/errors.hpp"

namespace heunspectra {

PolynomialSolution polynomial_solution(const ThreeTermRecurrence& rec, int degree, double resonance_tol) {
  if (degree < 0) throw InvalidParams("degree must be non-negative");
  PolynomialSolution out;
  auto& s = out.coeffs;
  s.push_back(1.0);
  auto residual = [&](int n, double& scale) {
    double a = rec.mid(n) * s[n];
    double b = n >= 1 ? rec.low(n) * s[n - 1] : 0.0;
    scale = std::abs(a) + std::abs(b);
    return a + b;
  };
  for (int n = 0; n < degree; ++n) {
    double scale = 0;
    double rest = residual(n, scale);
    double lead = rec.lead(n);
    if (std::abs(lead) <= resonance_tol * (1 + std::abs(rec.mid(n)) + std::abs(rec.low(n)))) {
      if (n != degree - 1) throw DegenerateRecurrence("exponent resonance below the target degree");
      out.resonance = n;
      out.defect = rest;
      out.relative_defect = std::abs(rest) / std::max(1.0, scale);
      double mid = rec.mid(degree);
      if (mid == 0) throw DegenerateRecurrence("top coefficient undetermined");
      s.push_back(-rec.low(degree) * s[degree - 1] / mid);
      return out;
    }
    s.push_back(-rest / lead);
  }
  double scale = 0;
  out.defect = residual(degree, scale);
  out.relative_defect = std::abs(out.defect) / std::max(1.0, scale);
  return out;
}

ThreeTermRecurrence recurrence_at_zero(const FuchsianLayout& h) {
  const double p2 = h.res0 + h.res1 + h.res_t;
  const double p1 = -h.res0 * (1 + h.t) - h.res1 * h.t - h.res_t;
  const double p0 = h.res0 * h.t;
  return {
      [=](int n) { return (n + 1) * (h.t * n + p0); },
      [=](int n) { return -(1 + h.t) * n * (n - 1) + p1 * n + h.constant; },
      [=](int n) { return (n - 1.0) * (n - 2) + p2 * (n - 1) + h.lin; },
  };
}

ThreeTermRecurrence recurrence_at_zero(const ConfluentLayout& c) {
  const double p2 = c.expo;
  const double p1 = -c.expo + c.res0 + c.res1;
  const double p0 = -c.res0;
  return {
      [=](int n) { return (n + 1) * (p0 - n); },
      [=](int n) { return double(n) * (n - 1) + p1 * n + c.constant; },
      [=](int n) { return p2 * (n - 1) + c.lin; },
  };
}

}  // namespace heunspectra
