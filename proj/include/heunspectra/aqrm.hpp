#pragma once

#include <complex>

#include "heunspectra/banded.hpp"
#include "heunspectra/bigrat.hpp"
#include "heunspectra/frobenius.hpp"
#include "heunspectra/multipoly.hpp"
#include "heunspectra/spectrum.hpp"

namespace heunspectra {

struct AqrmParams {
  double g = 0;
  double delta = 0;
  double eta = 0;
};

void validate(const AqrmParams& p);

// Basis (n, s) -> 2n + s with s = 0 the +Delta level.
BandedHermitian build_fock_hamiltonian(const AqrmParams& p, int n_max);

// Parity labels only at eta = 0, where the model commutes with (-1)^n sigma_z.
SpectrumReport aqrm_spectrum(const AqrmParams& p, int n_max, int count, double degen_tol = 1e-8);

enum class CheVariant { H1, H2 };

struct CheData {
  CheVariant variant = CheVariant::H1;
  double E = 0, g = 0, delta = 0, eta = 0;
  double alpha_che = 0;
  double mu = 0;
  ConfluentLayout layout{};
};

CheData che_from_aqrm(const AqrmParams& p, double E, CheVariant variant);

struct CheCoefficients {
  std::complex<double> first, zeroth;
};
CheCoefficients che_coefficients(const ConfluentLayout& c, std::complex<double> y);

struct ConstraintPolynomial {
  int N = 0, k = 0;
  BigRat eta;
  MultiPoly poly;
};

// P_0..P_k in the variables (x, y).
std::vector<MultiPoly> constraint_poly_sequence(int N, const BigRat& eta, int k);
ConstraintPolynomial constraint_poly(int N, const BigRat& eta, int k);

// Direct evaluation of the recurrence at a point.
template <class T>
T constraint_poly_value(int N, const T& eta, int k, const T& x, const T& y) {
  T prev2(0), prev(1);
  if (k == 0) return prev;
  T cur = x + y - T(1) - T(2) * eta;
  for (int j = 2; j <= k; ++j) {
    prev2 = prev;
    prev = cur;
    cur = (T(j) * x + y - T(j) * (T(j) + T(2) * eta)) * prev - T(j * (j - 1) * (N - j + 1)) * x * prev2;
  }
  return cur;
}

enum class SignBranch { plus, minus };

struct JuddianCheck {
  double constraint_value = 0;
  double E = 0;
};

// P_N^(N, +-eta)((2g)^2, Delta^2) and E = N +- eta - g^2.
JuddianCheck juddian_check(const AqrmParams& p, int N, SignBranch branch = SignBranch::plus);

// A^l_N with P^(N+l, -l/2)_{N+l} = A^l_N P^(N, l/2)_N.
MultiPoly divisibility_quotient(int N, int ell);

struct JuddianSolution {
  int N = 0;
  SignBranch sign_branch = SignBranch::plus;
  std::vector<double> coeffs;  // K_0 = 1 .. K_N
  double truncation_defect = 0;
  double E = 0;
};

// Polynomial Frobenius solution at y = 0 of the first confluent Heun picture
// (the minus branch uses eta -> -eta). Throws ConstraintViolated when the
// truncation defect exceeds tol.
JuddianSolution juddian_solution(const AqrmParams& p, int N, SignBranch branch = SignBranch::plus,
                                 double tol = 1e-8);

// Residual of the confluent operator applied to sum K_n y^n.
std::complex<double> che_residual(const ConfluentLayout& c, const std::vector<double>& coeffs, std::complex<double> y);

struct GaaEnergy {
  double E_plus = 0, E_minus = 0;
};

GaaEnergy gaa_energy(int N, int ell, double g, double delta);

}  // namespace heunspectra
