#include "heunspectra/ncho.hpp"

#include <cmath>

#include "heunspectra/errors.hpp"

namespace heunspectra {

void validate(const NchoParams& p) {
  if (!(p.alpha > 0) || !(p.beta > 0)) throw InvalidParams("alpha and beta must be positive");
  if (!(p.alpha * p.beta > 1)) throw InvalidParams("alpha*beta must exceed 1");
  if (p.alpha == p.beta) throw InvalidParams("alpha must differ from beta");
  if (!std::isfinite(p.eta)) throw InvalidParams("eta must be finite");
}

NchoParams params_from_xy(double x, double y, double eta) {
  if (!(x > 0) || x == 1) throw InvalidParams("x must be positive and different from 1");
  if (!(y > 0 && y < 1)) throw InvalidParams("y must lie in (0, 1)");
  NchoParams p{std::sqrt(x) / y, 1.0 / (y * std::sqrt(x)), eta};
  validate(p);
  return p;
}

DerivedNcho derive(const NchoParams& p) {
  validate(p);
  DerivedNcho d{};
  d.t = p.alpha * p.beta;
  d.delta = (p.alpha + p.beta) / (2 * d.t);
  d.eps = std::abs(p.alpha - p.beta) / (p.alpha + p.beta);
  d.sh_k = 1 / std::sqrt(d.t - 1);
  d.ch_k = std::sqrt(d.t / (d.t - 1));
  d.sh_2k = 2 * d.sh_k * d.ch_k;
  d.cth_2k = (d.t + 1) / (2 * std::sqrt(d.t));
  d.x = p.alpha / p.beta;
  d.y = 1 / std::sqrt(d.t);
  return d;
}

namespace {

double lambda_scale(const NchoParams& p) {
  validate(p);
  double t = p.alpha * p.beta;
  return 2 * std::sqrt(t * (t - 1)) / (p.alpha + p.beta);
}

}  // namespace

double nu_to_lambda(const NchoParams& p, double nu) { return lambda_scale(p) * nu; }

double lambda_to_nu(const NchoParams& p, double lambda) { return lambda / lambda_scale(p); }

BandedHermitian build_hamiltonian(const NchoParams& p, int n_max, Twist twist) {
  validate(p);
  if (n_max < 4) throw DimensionTooSmall("n_max must be at least 4");
  const Eigen::Index dim = 2 * (n_max + 1);
  const double shift = 2 * p.eta * std::sqrt(p.alpha * p.beta - 1);
  auto idx = [twist](int n, int s) -> Eigen::Index { return 2 * n + (twist == Twist::K ? 1 - s : s); };

  BandedHermitian m(dim, 5);
  for (int n = 0; n <= n_max; ++n) {
    m.set(idx(n, 0), idx(n, 0), p.alpha * (n + 0.5));
    m.set(idx(n, 1), idx(n, 1), p.beta * (n + 0.5));
    // 2 eta sqrt(ab-1) i J, with i J = [[0, -i], [i, 0]]
    if (shift != 0) m.set(idx(n, 0), idx(n, 1), Complex(0, -shift));
    if (n >= 2) {
      // J (x d/dx + 1/2) = J (psi^2 - psi^dag^2) / 2
      double c = 0.5 * std::sqrt(double(n) * (n - 1));
      m.set(idx(n - 2, 0), idx(n, 1), -c);
      m.set(idx(n - 2, 1), idx(n, 0), c);
    }
  }
  return m;
}

SpectrumReport spectrum(const NchoParams& p, int n_max, int count, double degen_tol, Twist twist) {
  BandedHermitian h = build_hamiltonian(p, n_max, twist);
  if (count < 0 || count > h.dimension()) throw IndexOutOfRange("count exceeds dimension");
  std::vector<Eigen::Index> even, odd;
  for (int n = 0; n <= n_max; ++n)
    for (int s = 0; s < 2; ++s) (n % 2 == 0 ? even : odd).push_back(2 * n + s);
  std::vector<std::pair<std::vector<double>, Parity>> blocks;
  for (auto [indices, parity] : {std::pair{&even, Parity::even}, std::pair{&odd, Parity::odd}}) {
    Eigen::VectorXd ev = hermitian_eigs(h.restrict(*indices), static_cast<Eigen::Index>(indices->size()));
    blocks.emplace_back(std::vector<double>(ev.data(), ev.data() + ev.size()), parity);
  }
  return merge_blocks(blocks, count, degen_tol, static_cast<int>(h.dimension()));
}

double finite_type_eigenvalue(const NchoParams& p, int L) {
  if (L < 0) throw InvalidParams("L must be non-negative");
  return nu_to_lambda(p, L + 0.5 + 2 * p.eta);
}

}  // namespace heunspectra
