#include "hardygkz/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardygkz/errors.hpp"
#include "hardygkz/fft.hpp"
#include "hardygkz/parallel.hpp"

namespace hardygkz {

namespace {

void validate_map(const MobiusMap& m) {
  if (!(std::abs(m.w) < 1.0))
    throw std::invalid_argument("Mobius map requires |w| < 1");
  if (std::abs(std::abs(m.c) - 1.0) > 1e-12)
    throw std::invalid_argument("Mobius map requires |c| = 1");
}

double space_weight(CoefficientSpace space, int k) {
  switch (space) {
    case CoefficientSpace::Hardy2:
      return 1.0;
    case CoefficientSpace::Bergman2:
      return 1.0 / (k + 1.0);
    case CoefficientSpace::Dirichlet:
      return k + 1.0;
  }
  return 1.0;
}

}  // namespace

Complex mobius_eval(const MobiusMap& m, Complex z) {
  validate_map(m);
  if (std::abs(z) > 1.0 + 1e-12)
    throw std::domain_error("mobius_eval: |z| must be <= 1");
  return m.c * (z - m.w) / (1.0 - std::conj(m.w) * z);
}

MobiusMap mobius_inverse(const MobiusMap& m) {
  validate_map(m);
  return MobiusMap{-m.c * m.w, std::conj(m.c)};
}

DiskFunction mobius_taylor(const MobiusMap& m, int d) {
  validate_map(m);
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  DiskFunction out;
  out.taylor.resize(static_cast<size_t>(d) + 1);
  out.taylor[0] = -m.c * m.w;
  const Complex fac = m.c * (1.0 - std::norm(m.w));
  Complex pw(1.0);
  for (int k = 1; k <= d; ++k) {
    out.taylor[static_cast<size_t>(k)] = fac * pw;
    pw *= std::conj(m.w);
  }
  return out;
}

DiskFunction mobius_derivative_root(const MobiusMap& m, double p, int d) {
  validate_map(m);
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (!(p > 0.0)) throw std::domain_error("exponent p must be positive");
  if (std::isinf(p)) return DiskFunction{{Complex(1.0)}};
  // phi'(z) = c (1-|w|^2) / (1 - conj(w) z)^2, principal root at z = 0
  const double alpha = 2.0 / p;
  const Complex a0 = std::pow(m.c * (1.0 - std::norm(m.w)), 1.0 / p);
  DiskFunction out;
  out.taylor.resize(static_cast<size_t>(d) + 1);
  Complex b(1.0);
  out.taylor[0] = a0;
  for (int k = 0; k < d; ++k) {
    b *= std::conj(m.w) * ((alpha + k) / (k + 1.0));
    out.taylor[static_cast<size_t>(k) + 1] = a0 * b;
  }
  return out;
}

OperatorMatrix wco_matrix(const DiskFunction& psi, const DiskFunction& phi, int d, int n,
                          double selfmap_margin) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (!is_power_of_two(n) || 2 * d + 2 > n)
    throw std::invalid_argument("grid size must be a power of two with d < n/2");

  const BoundaryFunction phib = boundary_samples(phi, n);
  double maxmod = 0.0;
  for (const Complex& v : phib.samples) maxmod = std::max(maxmod, std::abs(v));
  if (maxmod >= 1.0 - selfmap_margin) {
    std::ostringstream msg;
    msg << "phi is not a strict self-map at grid resolution: max |phi| = " << maxmod;
    throw HypothesisViolation(msg.str());
  }

  const BoundaryFunction psib = boundary_samples(psi, n);
  std::vector<std::vector<Complex>> colvals(static_cast<size_t>(d) + 1);
  colvals[0] = psib.samples;
  for (int k = 1; k <= d; ++k) {
    colvals[static_cast<size_t>(k)].resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      colvals[static_cast<size_t>(k)][static_cast<size_t>(j)] =
          colvals[static_cast<size_t>(k) - 1][static_cast<size_t>(j)] *
          phib.samples[static_cast<size_t>(j)];
  }

  OperatorMatrix t(d + 1, d + 1);
  parallel_for(0, d + 1, [&](int k) {
    const std::vector<Complex> bins = analysis_bins(colvals[static_cast<size_t>(k)]);
    for (int row = 0; row <= d; ++row) t(row, k) = bins[static_cast<size_t>(row)];
  });
  return t;
}

OperatorMatrix forelli_isometry(const MobiusMap& m, Complex c, double p, int d, int n) {
  validate_map(m);
  if (std::abs(std::abs(c) - 1.0) > 1e-9)
    throw std::invalid_argument("front constant must be unimodular");
  DiskFunction weight = mobius_derivative_root(m, p, d);
  for (Complex& v : weight.taylor) v *= c;
  // automorphisms graze the circle, and the degree-d truncation of phi can
  // overshoot it by its own Taylor tail; admit exactly that much
  const double aw = std::abs(m.w);
  const double tail = aw > 0.0 ? 3.0 * (1.0 - aw * aw) * std::pow(aw, d) / (1.0 - aw) : 0.0;
  return wco_matrix(weight, mobius_taylor(m, d), d, n, -(tail + 1e-9));
}

double shift_multiplier_norm(CoefficientSpace space, int n, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n < 0 || n > d)
    throw std::domain_error("shift exponent must satisfy 0 <= n <= d");
  double best = 0.0;
  for (int k = 0; k + n <= d; ++k)
    best = std::max(best, std::sqrt(space_weight(space, k + n) / space_weight(space, k)));
  return best;
}

std::vector<double> shift_norm_trend(CoefficientSpace space, int n_max, int d) {
  if (n_max < 1 || n_max > d)
    throw std::domain_error("trend endpoint must satisfy 1 <= n_max <= d");
  std::vector<double> out(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    out[static_cast<size_t>(n) - 1] = std::pow(shift_multiplier_norm(space, n, d), 1.0 / n);
  return out;
}

}  // namespace hardygkz
