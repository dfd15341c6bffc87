#include "heunspectra/roots.hpp"

#include <cmath>

#include "heunspectra/errors.hpp"

namespace heunspectra {

double refine_root(const std::function<double(double)>& f, double lo, double hi, double tol, int max_steps) {
  if (!(tol > 0)) throw InvalidParams("tolerance must be positive");
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi))
    throw NoSignChange("f has the same sign at both ends of the bracket");
  for (int step = 0; step < max_steps && hi - lo > tol; ++step) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if (fm == 0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<std::pair<double, double>> sign_change_brackets(const std::function<double(double)>& f, double lo,
                                                            double hi, int samples) {
  std::vector<std::pair<double, double>> out;
  if (samples < 1) return out;
  double h = (hi - lo) / samples;
  double x0 = lo, f0 = f(lo);
  for (int i = 1; i <= samples; ++i) {
    double x1 = i == samples ? hi : lo + i * h;
    double f1 = f(x1);
    if (f0 == 0 || (f1 != 0 && std::signbit(f0) != std::signbit(f1))) out.emplace_back(x0, x1);
    x0 = x1;
    f0 = f1;
  }
  return out;
}

}  // namespace heunspectra
