#pragma once

#include <functional>
#include <vector>

namespace heunspectra {

// Bisection on a sign-changing bracket. Stops once the bracket is no wider
// than tol, after max_steps halvings, or when the midpoint stops moving.
double refine_root(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12,
                   int max_steps = 200);

// Brackets [x_i, x_{i+1}] of a uniform scan over [lo, hi] where f changes sign.
std::vector<std::pair<double, double>> sign_change_brackets(const std::function<double(double)>& f, double lo,
                                                            double hi, int samples);

}  // namespace heunspectra
