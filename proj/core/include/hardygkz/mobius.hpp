#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hardygkz/defaults.hpp"
#include "hardygkz/disk_function.hpp"

namespace hardygkz {

// phi(z) = c (z - w) / (1 - conj(w) z), |w| < 1, |c| = 1.
struct MobiusMap {
  Complex w = Complex(0.0);
  Complex c = Complex(1.0);
};

// Column k holds the Taylor coefficients of T(z^k) in the ambient truncation.
using OperatorMatrix = Eigen::MatrixXcd;

Complex mobius_eval(const MobiusMap& m, Complex z);  // |z| <= 1
MobiusMap mobius_inverse(const MobiusMap& m);
DiskFunction mobius_taylor(const MobiusMap& m, int d);

// (phi')^{1/p} via the binomial series of (1 - conj(w) z)^{-2/p}; the branch
// is fixed by the principal root at z = 0. p = infinity gives the constant 1.
DiskFunction mobius_derivative_root(const MobiusMap& m, double p, int d);

// Column k = projection of psi * phi^k, built by iterated boundary
// multiplication on the n-grid. Requires max grid |phi| < 1 - selfmap_margin;
// the Forelli builder passes a slightly negative margin because automorphisms
// have |phi| = 1 on the circle (their column tails still decay geometrically).
OperatorMatrix wco_matrix(const DiskFunction& psi, const DiskFunction& phi, int d,
                          int n = kDefaultGrid, double selfmap_margin = 1e-6);

// Tf = c (phi')^{1/p} (f o phi), Eq-style Forelli form.
OperatorMatrix forelli_isometry(const MobiusMap& m, Complex c, double p, int d,
                                int n = kDefaultGrid);

enum class CoefficientSpace { Hardy2, Bergman2, Dirichlet };

// Operator norm of multiplication by z^n on the degree-d truncation:
// sup_{k <= d-n} sqrt(weight(k+n)/weight(k)).
double shift_multiplier_norm(CoefficientSpace space, int n, int d);

// Entry n-1 is shift_multiplier_norm(space, n, d)^{1/n} for n = 1..n_max.
std::vector<double> shift_norm_trend(CoefficientSpace space, int n_max, int d);

}  // namespace hardygkz
