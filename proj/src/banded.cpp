#include "heunspectra/banded.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>

#include "heunspectra/errors.hpp"

namespace heunspectra {

using Eigen::Index;

BandedHermitian::BandedHermitian(Index dimension, Index bandwidth) {
  if (dimension <= 0) throw DimensionTooSmall("dimension must be positive");
  if (bandwidth < 0) throw InvalidParams("negative bandwidth");
  band_ = Eigen::MatrixXcd::Zero(std::min(bandwidth, dimension - 1) + 1, dimension);
}

void BandedHermitian::set(Index i, Index j, Complex value) {
  if (i < 0 || j < 0 || i >= dimension() || j >= dimension()) throw IndexOutOfRange("entry outside matrix");
  if (i < j) {
    std::swap(i, j);
    value = std::conj(value);
  }
  if (i - j > bandwidth()) throw IndexOutOfRange("entry outside band");
  if (i == j && value.imag() != 0.0) throw InvalidParams("diagonal entry must be real");
  band_(i - j, j) = value;
}

void BandedHermitian::add(Index i, Index j, Complex value) {
  set(i, j, (*this)(i, j) + value);
}

Complex BandedHermitian::operator()(Index i, Index j) const {
  if (i >= j) return i - j > bandwidth() ? Complex(0) : band_(i - j, j);
  return j - i > bandwidth() ? Complex(0) : std::conj(band_(j - i, i));
}

bool BandedHermitian::is_real() const { return band_.imag().isZero(0.0); }

Eigen::MatrixXcd BandedHermitian::dense() const {
  const Index n = dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index d = 0; d <= bandwidth() && j + d < n; ++d) {
      m(j + d, j) = band_(d, j);
      m(j, j + d) = std::conj(band_(d, j));
    }
  return m;
}

BandedHermitian BandedHermitian::restrict(const std::vector<Index>& indices) const {
  Index bw = 0;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (std::abs(indices[a] - indices[b]) <= bandwidth() && (*this)(indices[a], indices[b]) != Complex(0))
        bw = std::max<Index>(bw, static_cast<Index>(a - b));
  BandedHermitian r(static_cast<Index>(indices.size()), bw);
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a >= static_cast<std::size_t>(bw) ? a - bw : 0; b <= a; ++b)
      r.band_(a - b, b) = (*this)(indices[a], indices[b]);
  return r;
}

std::vector<std::vector<Index>> BandedHermitian::components() const {
  const Index n = dimension();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index j = 0; j < n; ++j)
    for (Index d = 1; d <= bandwidth() && j + d < n; ++d)
      if (band_(d, j) != Complex(0)) parent[find(j + d)] = find(j);
  std::vector<std::vector<Index>> groups;
  std::vector<Index> slot(n, -1);
  for (Index i = 0; i < n; ++i) {
    Index root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<Index>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

namespace {

Eigen::VectorXd block_eigenvalues(const BandedHermitian& block) {
  if (block.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block.dense().real(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceFailure("QL iteration did not converge");
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("QL iteration did not converge");
  return solver.eigenvalues();
}

}  // namespace

Eigen::VectorXd hermitian_eigs(const BandedHermitian& m, Index count) {
  if (count < 0 || count > m.dimension()) throw IndexOutOfRange("count exceeds dimension");
  std::vector<double> all;
  all.reserve(m.dimension());
  auto groups = m.components();
  for (const auto& g : groups) {
    Eigen::VectorXd ev = groups.size() == 1 ? block_eigenvalues(m) : block_eigenvalues(m.restrict(g));
    all.insert(all.end(), ev.data(), ev.data() + ev.size());
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<Eigen::VectorXd>(all.data(), count);
}

Eigensystem hermitian_eigensystem(const BandedHermitian& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.dense());
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("QL iteration did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace heunspectra
