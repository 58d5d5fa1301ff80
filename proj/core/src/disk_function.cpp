#include "hardygkz/disk_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardygkz/errors.hpp"
#include "hardygkz/fft.hpp"

namespace hardygkz {

namespace {

void require_grid(int n, int degree) {
  if (!is_power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
  if (2 * degree + 2 > n) {
    std::ostringstream msg;
    msg << "grid of size " << n << " is too small for degree " << degree << " (aliasing)";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0);
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

Complex evaluate(const DiskFunction& f, Complex z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("evaluate: |z| must be < 1");
  return horner(f.taylor, z);
}

BoundaryFunction boundary_samples(const DiskFunction& f, int n) {
  require_grid(n, f.degree());
  return BoundaryFunction{synthesis(f.taylor, n)};
}

AnalyticProjection project_analytic(const BoundaryFunction& b, int d) {
  const int n = b.n();
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  require_grid(n, d);
  const std::vector<Complex> bins = analysis_bins(b.samples);
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += std::norm(bins[static_cast<size_t>(k)]);
  double negative = 0.0;
  for (int k = n / 2 + 1; k < n; ++k) negative += std::norm(bins[static_cast<size_t>(k)]);
  AnalyticProjection out;
  out.taylor.taylor.assign(bins.begin(), bins.begin() + (d + 1));
  out.negative_energy_ratio = total > 0.0 ? negative / total : 0.0;
  return out;
}

DiskFunction taylor_from_boundary(const BoundaryFunction& b, int d, double tol) {
  AnalyticProjection proj = project_analytic(b, d);
  if (proj.negative_energy_ratio > tol) {
    std::ostringstream msg;
    msg << "boundary data is not analytic at grid resolution: negative-frequency energy ratio "
        << proj.negative_energy_ratio;
    throw NotAnalyticError(msg.str(), proj.negative_energy_ratio);
  }
  return std::move(proj.taylor);
}

double hp_norm(const DiskFunction& f, const HpNormSpec& spec, int n) {
  if (!(spec.p > 0.0)) throw std::domain_error("hp_norm: p must be positive");
  if (spec.space == Space::Bergman) {
    double s = 0.0;
    for (size_t k = 0; k < f.taylor.size(); ++k)
      s += std::norm(f.taylor[k]) / (static_cast<double>(k) + 1.0);
    return std::sqrt(s);
  }
  if (spec.space == Space::Dirichlet) {
    double s = 0.0;
    for (size_t k = 0; k < f.taylor.size(); ++k)
      s += (static_cast<double>(k) + 1.0) * std::norm(f.taylor[k]);
    return std::sqrt(s);
  }
  const BoundaryFunction b = boundary_samples(f, n);
  if (std::isinf(spec.p)) {
    double m = 0.0;
    for (const Complex& v : b.samples) m = std::max(m, std::abs(v));
    return m;
  }
  double mean = 0.0;
  for (const Complex& v : b.samples) mean += std::pow(std::abs(v), spec.p);
  mean /= static_cast<double>(n);
  return std::pow(mean, 1.0 / spec.p);
}

DiskFunction herglotz_transform(const BoundaryFunction& u, int d, double tol) {
  const int n = u.n();
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  require_grid(n, d);
  double umax = 0.0;
  for (const Complex& v : u.samples) umax = std::max(umax, std::abs(v));
  for (const Complex& v : u.samples) {
    if (std::abs(v.imag()) > tol * std::max(1.0, umax))
      throw std::domain_error("herglotz_transform: boundary data must be real-valued");
  }
  const std::vector<Complex> bins = analysis_bins(u.samples);
  DiskFunction h;
  h.taylor.resize(static_cast<size_t>(d) + 1);
  h.taylor[0] = Complex(bins[0].real(), 0.0);
  for (int k = 1; k <= d; ++k) h.taylor[static_cast<size_t>(k)] = 2.0 * bins[static_cast<size_t>(k)];
  return h;
}

DiskFunction multiply(const DiskFunction& a, const DiskFunction& b, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  DiskFunction out;
  out.taylor.assign(static_cast<size_t>(d) + 1, Complex(0.0));
  const int da = a.degree();
  const int db = b.degree();
  for (int k = 0; k <= d; ++k) {
    Complex s(0.0);
    const int lo = std::max(0, k - db);
    const int hi = std::min(k, da);
    for (int j = lo; j <= hi; ++j)
      s += a.taylor[static_cast<size_t>(j)] * b.taylor[static_cast<size_t>(k - j)];
    out.taylor[static_cast<size_t>(k)] = s;
  }
  return out;
}

DiskFunction exp_series(const DiskFunction& h, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  DiskFunction g;
  g.taylor.assign(static_cast<size_t>(d) + 1, Complex(0.0));
  g.taylor[0] = std::exp(h.coeff(0));
  // (exp h)' = h' exp h, coefficient by coefficient.
  for (int k = 0; k < d; ++k) {
    Complex s(0.0);
    for (int j = 0; j <= k; ++j)
      s += (static_cast<double>(j) + 1.0) * h.coeff(j + 1) * g.taylor[static_cast<size_t>(k - j)];
    g.taylor[static_cast<size_t>(k) + 1] = s / (static_cast<double>(k) + 1.0);
  }
  return g;
}

DiskFunction derivative(const DiskFunction& f) {
  DiskFunction out;
  if (f.taylor.size() <= 1) {
    out.taylor.assign(1, Complex(0.0));
    return out;
  }
  out.taylor.resize(f.taylor.size() - 1);
  for (size_t k = 1; k < f.taylor.size(); ++k)
    out.taylor[k - 1] = static_cast<double>(k) * f.taylor[k];
  return out;
}

double max_coeff_deviation(const DiskFunction& a, const DiskFunction& b) {
  const int d = std::max(a.degree(), b.degree());
  double m = 0.0;
  for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
  return m;
}

bool approx_equal(const DiskFunction& a, const DiskFunction& b, double tol) {
  return max_coeff_deviation(a, b) <= tol;
}

}  // namespace hardygkz
