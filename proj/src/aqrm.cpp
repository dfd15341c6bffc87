#include "heunspectra/aqrm.hpp"

#include <cmath>

#include "heunspectra/errors.hpp"

namespace heunspectra {

void validate(const AqrmParams& p) {
  if (!(p.g >= 0) || !std::isfinite(p.g)) throw InvalidParams("g must be non-negative");
  if (!(p.delta >= 0) || !std::isfinite(p.delta)) throw InvalidParams("delta must be non-negative");
  if (!std::isfinite(p.eta)) throw InvalidParams("eta must be finite");
}

BandedHermitian build_fock_hamiltonian(const AqrmParams& p, int n_max) {
  validate(p);
  if (n_max < 4) throw DimensionTooSmall("n_max must be at least 4");
  BandedHermitian h(2 * (n_max + 1), 3);
  for (int n = 0; n <= n_max; ++n) {
    h.set(2 * n, 2 * n, n + p.delta);
    h.set(2 * n + 1, 2 * n + 1, n - p.delta);
    if (p.eta != 0) h.set(2 * n, 2 * n + 1, p.eta);
    if (n < n_max && p.g != 0) {
      double hop = p.g * std::sqrt(n + 1.0);
      h.set(2 * n, 2 * (n + 1) + 1, hop);
      h.set(2 * n + 1, 2 * (n + 1), hop);
    }
  }
  return h;
}

SpectrumReport aqrm_spectrum(const AqrmParams& p, int n_max, int count, double degen_tol) {
  BandedHermitian h = build_fock_hamiltonian(p, n_max);
  if (count < 0 || count > h.dimension()) throw IndexOutOfRange("count exceeds dimension");
  std::vector<std::pair<std::vector<double>, Parity>> blocks;
  if (p.eta == 0) {
    std::vector<Eigen::Index> even, odd;
    for (int n = 0; n <= n_max; ++n)
      for (int s = 0; s < 2; ++s) (((n % 2 == 0) == (s == 0)) ? even : odd).push_back(2 * n + s);
    for (auto [indices, parity] : {std::pair{&even, Parity::even}, std::pair{&odd, Parity::odd}}) {
      Eigen::VectorXd ev = hermitian_eigs(h.restrict(*indices), static_cast<Eigen::Index>(indices->size()));
      blocks.emplace_back(std::vector<double>(ev.data(), ev.data() + ev.size()), parity);
    }
  } else {
    Eigen::VectorXd ev = hermitian_eigs(h, h.dimension());
    blocks.emplace_back(std::vector<double>(ev.data(), ev.data() + ev.size()), Parity::none);
  }
  return merge_blocks(blocks, count, degen_tol, static_cast<int>(h.dimension()));
}

CheData che_from_aqrm(const AqrmParams& p, double E, CheVariant variant) {
  validate(p);
  CheData c;
  c.variant = variant;
  c.E = E;
  c.g = p.g;
  c.delta = p.delta;
  c.eta = p.eta;
  const double g2 = p.g * p.g, eta = p.eta, s = E + g2;
  c.alpha_che = -(E + g2 - eta);
  c.mu = s * s - 4 * g2 * s - p.delta * p.delta;
  const double al = c.alpha_che;
  c.layout.expo = -4 * g2;
  if (variant == CheVariant::H1) {
    c.layout.res0 = al + 1;
    c.layout.res1 = al - 2 * eta;
    c.layout.lin = -4 * g2 * al;
    c.layout.constant = c.mu + 4 * eta * g2 - eta * eta;
  } else {
    c.layout.res0 = al - 2 * eta;
    c.layout.res1 = al + 1;
    c.layout.lin = -4 * g2 * (al - 2 * eta + 1);
    c.layout.constant = c.mu - 4 * eta * g2 - eta * eta;
  }
  return c;
}

CheCoefficients che_coefficients(const ConfluentLayout& c, std::complex<double> y) {
  if (y == 0.0 || y == 1.0) throw PoleEvaluation("y is a singular point");
  return {c.expo + c.res0 / y + c.res1 / (y - 1.0), (c.lin * y + c.constant) / (y * (y - 1.0))};
}

std::vector<MultiPoly> constraint_poly_sequence(int N, const BigRat& eta, int k) {
  if (k < 0 || N < 0) throw IndexOutOfRange("k and N must be non-negative");
  const std::vector<std::string> vars{"x", "y"};
  const MultiPoly x = MultiPoly::variable(vars, "x"), y = MultiPoly::variable(vars, "y");
  auto cst = [&](const BigRat& v) { return MultiPoly::constant(vars, v); };
  std::vector<MultiPoly> P{cst(1)};
  if (k >= 1) P.push_back(x + y - cst(BigRat(1 + 2 * eta)));
  for (int j = 2; j <= k; ++j) {
    MultiPoly factor = x * BigRat(j) + y - cst(BigRat(j * (j + 2 * eta)));
    P.push_back(factor * P[j - 1] - x * P[j - 2] * BigRat(j * (j - 1) * (N - j + 1)));
  }
  return P;
}

ConstraintPolynomial constraint_poly(int N, const BigRat& eta, int k) {
  if (k > N) throw IndexOutOfRange("k must not exceed N");
  return {N, k, eta, constraint_poly_sequence(N, eta, k).back()};
}

JuddianCheck juddian_check(const AqrmParams& p, int N, SignBranch branch) {
  validate(p);
  if (N < 0) throw InvalidParams("N must be non-negative");
  const double eta = branch == SignBranch::plus ? p.eta : -p.eta;
  const double x = 4 * p.g * p.g, y = p.delta * p.delta;
  return {constraint_poly_value<double>(N, eta, N, x, y), N + eta - p.g * p.g};
}

MultiPoly divisibility_quotient(int N, int ell) {
  if (N < 0 || ell < 0) throw InvalidParams("N and ell must be non-negative");
  MultiPoly num = constraint_poly(N + ell, rat(-ell, 2), N + ell).poly;
  MultiPoly den = constraint_poly(N, rat(ell, 2), N).poly;
  auto [q, r] = poly_divide(num, den, "x");
  if (!r.is_zero()) throw NonzeroRemainder("remainder " + r.str());
  return q;
}

JuddianSolution juddian_solution(const AqrmParams& p, int N, SignBranch branch, double tol) {
  validate(p);
  if (N < 0) throw InvalidParams("N must be non-negative");
  AqrmParams q = p;
  if (branch == SignBranch::minus) q.eta = -p.eta;
  const double E = N + q.eta - q.g * q.g;
  CheData che = che_from_aqrm(q, E, CheVariant::H1);
  PolynomialSolution sol = polynomial_solution(recurrence_at_zero(che.layout), N);
  if (!(sol.relative_defect <= tol))
    throw ConstraintViolated("series does not truncate at degree " + std::to_string(N) + " (defect " +
                             std::to_string(sol.relative_defect) + ")");
  return {N, branch, sol.coeffs, sol.relative_defect, E};
}

std::complex<double> che_residual(const ConfluentLayout& c, const std::vector<double>& coeffs,
                                  std::complex<double> y) {
  std::complex<double> f = 0, df = 0, d2f = 0, power = 1;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    if (n >= 2) d2f += double(n * (n - 1)) * coeffs[n] * std::pow(y, int(n - 2));
    if (n >= 1) df += double(n) * coeffs[n] * std::pow(y, int(n - 1));
    f += coeffs[n] * power;
    power *= y;
  }
  return y * (y - 1.0) * d2f + (c.expo * y * (y - 1.0) + c.res0 * (y - 1.0) + c.res1 * y) * df +
         (c.lin * y + c.constant) * f;
}

GaaEnergy gaa_energy(int N, int ell, double g, double delta) {
  if (N < 0 || ell < 0) throw InvalidParams("N and ell must be non-negative");
  const double base = N + 0.5 * ell - g * g;
  const double sign = (N + ell) % 2 == 0 ? 1.0 : -1.0;
  const double prefactor = sign * std::pow(2 * g * g, ell) * delta /
                           (2 * std::pow(std::tgamma(N + 1.0), 1.5) * std::sqrt(std::tgamma(N + ell + 1.0)));
  const double poly = constraint_poly_value<double>(N, 0.5 * ell, N, 4 * g * g, delta * delta);
  const double split = prefactor * std::exp(-2 * g * g) * poly;
  return {base + split, base - split};
}

}  // namespace heunspectra
