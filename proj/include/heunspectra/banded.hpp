#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace heunspectra {

using Complex = std::complex<double>;

// Hermitian matrix stored by its lower band: band_(i - j, j) holds entry (i, j)
// for 0 <= i - j <= bandwidth.
class BandedHermitian {
 public:
  BandedHermitian(Eigen::Index dimension, Eigen::Index bandwidth);

  Eigen::Index dimension() const { return band_.cols(); }
  Eigen::Index bandwidth() const { return band_.rows() - 1; }

  // Sets (i, j) and its mirror (j, i) = conj. Diagonal entries must be real.
  void set(Eigen::Index i, Eigen::Index j, Complex value);
  void add(Eigen::Index i, Eigen::Index j, Complex value);
  Complex operator()(Eigen::Index i, Eigen::Index j) const;

  bool is_real() const;
  Eigen::MatrixXcd dense() const;

  // Principal submatrix on the given (ascending) index set.
  BandedHermitian restrict(const std::vector<Eigen::Index>& indices) const;

  // Index sets of the connected components of the coupling graph.
  std::vector<std::vector<Eigen::Index>> components() const;

 private:
  Eigen::MatrixXcd band_;
};

struct Eigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

// Lowest `count` eigenvalues in ascending order. Decoupled blocks are solved
// separately; each block goes through Householder tridiagonalization and QL.
Eigen::VectorXd hermitian_eigs(const BandedHermitian& m, Eigen::Index count);

Eigensystem hermitian_eigensystem(const BandedHermitian& m);

}  // namespace heunspectra
