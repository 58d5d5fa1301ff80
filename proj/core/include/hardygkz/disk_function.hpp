#pragma once

#include <complex>
#include <vector>

#include "hardygkz/defaults.hpp"

namespace hardygkz {

using Complex = std::complex<double>;

// Truncated Taylor series c_0..c_d of an analytic function on the unit disk.
// No canonical trimming: trailing zeros are legal, equality is approx_equal.
struct DiskFunction {
  std::vector<Complex> taylor;

  int degree() const { return static_cast<int>(taylor.size()) - 1; }
  Complex coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(taylor.size())) ? taylor[static_cast<size_t>(k)]
                                                           : Complex(0.0);
  }
};

// Samples at the n-th roots of unity e^{2 pi i j/n}, n a power of two.
struct BoundaryFunction {
  std::vector<Complex> samples;

  int n() const { return static_cast<int>(samples.size()); }
};

enum class Space { Hardy, Bergman, Dirichlet };

struct HpNormSpec {
  double p = 2.0;  // > 0; infinity allowed for Hardy
  Space space = Space::Hardy;
};

struct AnalyticProjection {
  DiskFunction taylor;
  // Energy in bins N/2+1..N-1 over total bin energy; 0 for analytic data.
  double negative_energy_ratio = 0.0;
};

// Plain Horner sum, no domain check; evaluate() enforces |z| < 1.
Complex horner(const std::vector<Complex>& coeffs, Complex z);
Complex evaluate(const DiskFunction& f, Complex z);

BoundaryFunction boundary_samples(const DiskFunction& f, int n);

AnalyticProjection project_analytic(const BoundaryFunction& b, int d);
// Same projection but throws NotAnalyticError when the ratio exceeds tol.
DiskFunction taylor_from_boundary(const BoundaryFunction& b, int d, double tol = kDefaultTol);

// Hardy p < inf: trapezoid mean of |f*|^p on the n-grid, then p-th root.
// Hardy p = inf: grid max. Bergman/Dirichlet: weighted coefficient formulas.
double hp_norm(const DiskFunction& f, const HpNormSpec& spec, int n = kDefaultGrid);

// h(z) = u_hat_0 + 2 sum_{k=1..d} u_hat_k z^k, so Re h is the Poisson
// extension of u; u_hat_0 is forced real (this pins h(0) real).
DiskFunction herglotz_transform(const BoundaryFunction& u, int d, double tol = kDefaultTol);

// Series plumbing, all truncated to degree d with fixed summation order.
DiskFunction multiply(const DiskFunction& a, const DiskFunction& b, int d);
DiskFunction exp_series(const DiskFunction& h, int d);
DiskFunction derivative(const DiskFunction& f);

// Max coefficient deviation after zero-padding, absolute tolerance.
bool approx_equal(const DiskFunction& a, const DiskFunction& b, double tol = 1e-8);
double max_coeff_deviation(const DiskFunction& a, const DiskFunction& b);

}  // namespace hardygkz
