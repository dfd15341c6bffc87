#pragma once

#include "heunspectra/banded.hpp"
#include "heunspectra/spectrum.hpp"

namespace heunspectra {

struct NchoParams {
  double alpha = 0;
  double beta = 0;
  double eta = 0;
};

// Throws InvalidParams unless alpha, beta > 0, alpha*beta > 1, alpha != beta.
void validate(const NchoParams& p);

// Parameters with x = alpha/beta and y = 1/sqrt(alpha*beta).
NchoParams params_from_xy(double x, double y, double eta);

struct DerivedNcho {
  double t, delta, eps;
  double sh_k, ch_k, sh_2k, cth_2k;
  double x, y;
};

DerivedNcho derive(const NchoParams& p);

double nu_to_lambda(const NchoParams& p, double nu);
double lambda_to_nu(const NchoParams& p, double lambda);

enum class Twist { none, K };

// Matrix in the orthonormal Hermite basis, ordered e_n (x) spin_s -> 2n + s.
BandedHermitian build_hamiltonian(const NchoParams& p, int n_max, Twist twist = Twist::none);

// Lowest `count` eigenvalues; the even-n and odd-n blocks are diagonalized
// separately and label the parity.
SpectrumReport spectrum(const NchoParams& p, int n_max, int count, double degen_tol = 1e-4,
                        Twist twist = Twist::none);

double finite_type_eigenvalue(const NchoParams& p, int L);

}  // namespace heunspectra
