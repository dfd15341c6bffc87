#include "heunspectra/confluence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heunspectra/errors.hpp"
#include "heunspectra/parallel.hpp"
#include "heunspectra/roots.hpp"

namespace heunspectra {

HeunData heun_with_A(double A, double eta, HeunVariant variant, double a, double t) {
  const double nu = (2 * a - 1 - 4 * A) / 2;
  return heun_data(t, 0, eta, a, nu, variant);
}

ConfluentLayout confluent_limit_ode(const HeunData& h, const ConfluenceParams& cp) {
  if (!std::isfinite(cp.r) || !std::isfinite(cp.k)) throw DivergentLimit("growth data must be finite");
  const double A = h.A, eta = h.eta, r = cp.r, k = cp.k;
  ConfluentLayout c;
  c.expo = -r;
  c.constant = -(2 * A) * (2 * A) + (2 * eta) * (2 * eta) - 4 * r * A + (r * k) * (r * k) - 4 * r * eta;
  if (h.variant == HeunVariant::Lambda) {
    c.res0 = 1 + A + eta;
    c.res1 = A - eta;
    c.lin = -r * (A + eta);
  } else {
    c.res0 = A + eta;
    c.res1 = 1 + A - eta;
    c.lin = -r * (A + 1 + eta);
  }
  return c;
}

HeunData confluence_prelimit(const HeunData& h, const ConfluenceParams& cp, double t) {
  const double p = cp.r * t;
  return heun_data(t, cp.k / t, h.eta, h.a + p, h.nu + p, h.variant);
}

double k_squared_from_energy(double g, double delta, double eta, double E, KConvention conv) {
  if (!(g > 0)) throw InvalidParams("g must be positive");
  const double g2 = g * g, s = E + g2;
  const double tail = conv == KConvention::matched ? 4 * g2 * eta - eta * eta : 4 * g2 * (eta - eta * eta);
  return (5 * (s * s - 4 * g2 * s + tail) - delta * delta) / (16 * g2 * g2);
}

double k_from_energy(double g, double delta, double eta, double E, KConvention conv) {
  double k2 = k_squared_from_energy(g, delta, eta, E, conv);
  const double g2 = g * g, s = E + g2;
  const double scale = (5 * (s * s + 4 * g2 * std::abs(s) + 4 * g2 * std::abs(eta) + eta * eta) + delta * delta) /
                       (16 * g2 * g2);
  if (k2 < 0 && k2 > -1e-13 * scale) k2 = 0;
  if (k2 < 0) throw NegativeRadicand("k^2 = " + std::to_string(k2));
  return std::sqrt(k2);
}

double k_constraint_branch(double g, double delta) {
  if (!(g > 0)) throw InvalidParams("g must be positive");
  return delta / (2 * g * g);
}

double q_tilde(int L, double eta, double a, int i, double t, const ConfluenceParams& cp) {
  if (i < 0 || i > std::max(L, 0)) throw IndexOutOfRange("index must lie in [0, L]");
  if (!(t > 1)) throw InvalidParams("t must exceed 1");
  return q_tilde_sequence<double>(L, eta, a, i, t, cp.r, cp.k).back();
}

BigRat q_tilde_exact(int L, const BigRat& eta, const BigRat& a, int i, const BigRat& t, const BigRat& r,
                     const BigRat& k) {
  if (i < 0 || i > std::max(L, 0)) throw IndexOutOfRange("index must lie in [0, L]");
  if (cmp(t, 1) <= 0) throw InvalidParams("t must exceed 1");
  return q_tilde_sequence<BigRat>(L, eta, a, i, t, r, k).back();
}

namespace {

int level_from(int L, double a) {
  const double n2 = L + 1 - a;
  if (n2 < 0 || n2 != std::floor(n2) || static_cast<long>(n2) % 2 != 0)
    throw NonIntegerLevel("(L + 1 - a)/2 is not a non-negative integer");
  return static_cast<int>(n2 / 2);
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    mx += xs[j];
    my += ys[j];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sxy += (xs[j] - mx) * (ys[j] - my);
    sxx += (xs[j] - mx) * (xs[j] - mx);
  }
  return sxy / sxx;
}

}  // namespace

ConvergenceTable q_tilde_convergence(int L, double eta, int i, double g, double delta,
                                     const std::vector<double>& t_grid, std::optional<double> a) {
  ConvergenceTable out;
  out.L = L;
  out.i = i;
  out.eta = eta;
  out.a = a.value_or(1.0 - L);
  out.g = g;
  out.delta = delta;
  out.N = level_from(L, out.a);
  if (i < 0 || i > std::max(L, out.N)) throw IndexOutOfRange("index out of range");
  for (std::size_t j = 0; j < t_grid.size(); ++j)
    if (!(t_grid[j] > 1) || (j > 0 && !(t_grid[j] > t_grid[j - 1])))
      throw InvalidParams("t grid must be increasing and above 1");

  const BigRat eta_q = rat_from_double(eta), a_q = rat_from_double(out.a);
  const BigRat g_q = rat_from_double(g), d_q = rat_from_double(delta);
  const BigRat r = 4 * g_q * g_q;
  const BigRat k = d_q / (2 * g_q * g_q);
  const BigRat target = constraint_poly_value<BigRat>(out.N, eta_q, i, r, BigRat(d_q * d_q));

  out.rows.resize(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t j) {
    BigRat q = q_tilde_exact(L, eta_q, a_q, i, rat_from_double(t_grid[j]), r, k);
    BigRat diff = q - target;
    out.rows[j] = {t_grid[j], q.get_d(), target.get_d(), std::abs(diff.get_d())};
  });

  std::vector<double> xs, ys;
  for (const auto& row : out.rows)
    if (row.abs_diff > 0) {
      xs.push_back(std::log(row.t));
      ys.push_back(std::log(row.abs_diff));
    }
  out.slope = least_squares_slope(xs, ys);
  return out;
}

DescentMap descent_eigenvalue(int L, double a, double eta, double g, int variant) {
  if (variant != 1 && variant != 2) throw InvalidParams("variant must be 1 or 2");
  DescentMap m;
  m.L = L;
  m.a = a;
  m.eta = eta;
  m.g = g;
  m.N = level_from(L, a);
  m.E = m.N - g * g + (variant == 1 ? eta : -eta);
  return m;
}

Compatibility compatibility_check(int N, double g, double delta, double eta, double a) {
  const BigRat gq = rat_from_double(g), dq = rat_from_double(delta), eq = rat_from_double(eta);
  auto relation = [&](const BigRat& n) { return BigRat(n * 4 * gq * gq + dq * dq - n * (n + 2 * eq)); };
  Compatibility c;
  BigRat res = relation(BigRat(N));
  c.residual = res.get_d();
  c.exact_zero = sgn(res) == 0;

  // n^2 + (2 eta - 4 g^2) n - Delta^2 = 0
  const double b = 2 * eta - 4 * g * g, disc = b * b + 4 * delta * delta;
  if (disc >= 0) {
    const double sq = std::sqrt(disc);
    for (double root : {(-b + sq) / 2, (-b - sq) / 2}) {
      const double n = std::round(root);
      if (n < 0 || std::abs(n - root) > 1e-6 * (1 + std::abs(root))) continue;
      if (sgn(relation(BigRat(static_cast<long>(n)))) != 0) continue;
      const double L = 2 * n + a - 1;
      if (L < 0 || L != std::floor(L)) continue;
      if (std::find(c.admissible_L.begin(), c.admissible_L.end(), int(L)) == c.admissible_L.end())
        c.admissible_L.push_back(static_cast<int>(L));
    }
  }
  std::sort(c.admissible_L.begin(), c.admissible_L.end());
  return c;
}

DescentTable descent_eigenfunction(int L, double eta, double g, double delta, const std::vector<double>& t_sequence,
                                   std::optional<double> a) {
  if (!(g > 0)) throw InvalidParams("g must be positive");
  DescentTable out;
  out.L = L;
  out.a = a.value_or(L % 2 == 0 ? 1.0 : 2.0);
  out.eta = eta;
  out.g = g;
  out.delta = delta;
  out.N = level_from(L, out.a);
  out.juddian = juddian_solution({g, delta, eta}, out.N).coeffs;

  const double nu = L + 0.5 + 2 * eta;
  const HeunData base = heun_data(2, 0, eta, out.a, nu, HeunVariant::Lambda);
  const double r = 4 * g * g;
  auto solve_at = [&](double t, double d) {
    HeunData h = confluence_prelimit(base, {r, k_constraint_branch(g, d)}, t);
    return heun_polynomial_solution(heun_layout(h), out.N);
  };

  out.rows.resize(t_sequence.size());
  parallel_for(t_sequence.size(), [&](std::size_t j) {
    const double t = t_sequence[j];
    auto defect = [&](double d) { return solve_at(t, d).defect; };
    auto brackets = sign_change_brackets(defect, 0.5 * delta, 1.5 * delta, 400);
    if (brackets.empty()) throw ConstraintRootLost("no sign change near delta at t = " + std::to_string(t));
    auto nearest = *std::min_element(brackets.begin(), brackets.end(), [&](const auto& u, const auto& v) {
      return std::abs(0.5 * (u.first + u.second) - delta) < std::abs(0.5 * (v.first + v.second) - delta);
    });
    DescentRow row;
    row.t = t;
    row.delta_t = refine_root(defect, nearest.first, nearest.second, 1e-14);
    row.coeffs = solve_at(t, row.delta_t).coeffs;
    for (std::size_t n = 0; n < row.coeffs.size(); ++n)
      row.distance = std::max(row.distance, std::abs(row.coeffs[n] - out.juddian[n]));
    out.rows[j] = std::move(row);
  });
  return out;
}

}  // namespace heunspectra
