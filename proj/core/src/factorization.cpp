#include "hardygkz/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hardygkz/errors.hpp"
#include "hardygkz/fft.hpp"

namespace hardygkz {

namespace {

struct ZeroDivision {
  std::vector<double> quotient;  // hole nodes filled by interpolation
  std::vector<Complex> zeros;    // accepted circle zeros, in division order
};

// Divides each |e^{i theta} - lambda| factor out of the samples. A node
// closer to lambda than half the grid spacing becomes a hole and is later
// filled with the geometric mean of its nearest intact neighbours; the
// factor's own log-mean over the circle is exactly zero, so holes only
// need an O(1)-correct stand-in. One zero per node: multiplicities are
// not resolved at grid scale.
ZeroDivision divide_boundary_zeros(const std::vector<double>& g, int n,
                                   const std::vector<Complex>& declared, bool detect,
                                   double detect_tol) {
  const std::vector<Complex>& nodes = circle_nodes(n);
  const double half_spacing = std::numbers::pi / static_cast<double>(n);

  ZeroDivision out;
  for (const Complex& lam : declared) {
    if (std::abs(std::abs(lam) - 1.0) > 1e-9)
      throw std::invalid_argument("declared boundary zero must lie on the unit circle");
    out.zeros.push_back(lam);
  }
  if (detect) {
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, v);
    for (int j = 0; j < n; ++j) {
      if (g[static_cast<size_t>(j)] > detect_tol * gmax) continue;
      const Complex lam = nodes[static_cast<size_t>(j)];
      bool known = false;
      for (const Complex& z : out.zeros)
        if (std::abs(lam - z) < half_spacing) known = true;
      if (!known) out.zeros.push_back(lam);
    }
  }

  out.quotient = g;
  std::vector<char> hole(static_cast<size_t>(n), 0);
  for (const Complex& lam : out.zeros) {
    for (int j = 0; j < n; ++j) {
      const double dist = std::abs(nodes[static_cast<size_t>(j)] - lam);
      if (dist < half_spacing)
        hole[static_cast<size_t>(j)] = 1;
      else
        out.quotient[static_cast<size_t>(j)] /= dist;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!hole[static_cast<size_t>(j)]) continue;
    int l = j, r = j, guard = 0;
    while (hole[static_cast<size_t>((l + n - 1) % n)] && guard++ < n) l = (l + n - 1) % n;
    guard = 0;
    while (hole[static_cast<size_t>((r + 1) % n)] && guard++ < n) r = (r + 1) % n;
    l = (l + n - 1) % n;
    r = (r + 1) % n;
    if (hole[static_cast<size_t>(l)] || hole[static_cast<size_t>(r)])
      throw HypothesisViolation("modulus vanishes on the whole grid");
    out.quotient[static_cast<size_t>(j)] =
        std::sqrt(out.quotient[static_cast<size_t>(l)] * out.quotient[static_cast<size_t>(r)]);
  }
  return out;
}

void require_modulus_grid(size_t n_samples, int d) {
  const int n = static_cast<int>(n_samples);
  if (!is_power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
  if (d < 0 || 2 * d + 2 > n)
    throw std::invalid_argument("degree must satisfy d < n/2");
}

}  // namespace

DiskFunction outer_from_modulus(const std::vector<double>& g_samples, int d,
                                const OuterOptions& options) {
  require_modulus_grid(g_samples.size(), d);
  const int n = static_cast<int>(g_samples.size());
  double gmax = 0.0;
  for (double v : g_samples) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("modulus samples must be finite and nonnegative");
    gmax = std::max(gmax, v);
  }
  if (gmax <= kModulusFloor)
    throw HypothesisViolation("modulus too close to zero: log G is not integrable at this scale");

  const ZeroDivision zd =
      divide_boundary_zeros(g_samples, n, options.boundary_zeros,
                            options.detect_boundary_zeros, options.detect_tol);
  for (int j = 0; j < n; ++j) {
    if (zd.quotient[static_cast<size_t>(j)] > kModulusFloor) continue;
    std::ostringstream msg;
    msg << "modulus too close to zero at grid node " << j << " (value "
        << zd.quotient[static_cast<size_t>(j)]
        << "); declare the boundary zero or raise the modulus";
    throw HypothesisViolation(msg.str());
  }

  BoundaryFunction logg;
  logg.samples.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    logg.samples[static_cast<size_t>(j)] =
        Complex(std::log(zd.quotient[static_cast<size_t>(j)]), 0.0);

  DiskFunction g = exp_series(herglotz_transform(logg, d), d);
  for (const Complex& lam : zd.zeros) {
    const DiskFunction factor{{Complex(1.0), -std::conj(lam)}};  // 1 - conj(lambda) z, positive at 0
    g = multiply(g, factor, d);
  }
  return g;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  if (std::abs(std::abs(b.front) - 1.0) > 1e-9)
    throw std::invalid_argument("Blaschke front constant must be unimodular");
  if (std::abs(z) > 1.0 + 1e-12)
    throw std::domain_error("blaschke_eval: |z| must be <= 1");
  Complex acc = b.front;
  for (const Complex& a : b.zeros) {
    if (!(std::abs(a) < 1.0))
      throw std::invalid_argument("Blaschke zeros must lie inside the open disk");
    acc *= (z - a) / (1.0 - std::conj(a) * z);
  }
  return acc;
}

DiskFunction blaschke_taylor(const BlaschkeProduct& b, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (std::abs(std::abs(b.front) - 1.0) > 1e-9)
    throw std::invalid_argument("Blaschke front constant must be unimodular");
  DiskFunction g{{b.front}};
  for (const Complex& a : b.zeros) {
    if (!(std::abs(a) < 1.0))
      throw std::invalid_argument("Blaschke zeros must lie inside the open disk");
    g = multiply(g, DiskFunction{{-a, Complex(1.0)}}, d);
    DiskFunction geo;
    geo.taylor.resize(static_cast<size_t>(d) + 1);
    Complex pw(1.0);
    for (int k = 0; k <= d; ++k) {
      geo.taylor[static_cast<size_t>(k)] = pw;
      pw *= std::conj(a);
    }
    g = multiply(g, geo, d);
  }
  return g;
}

Complex singular_inner_eval(const SingularAtom& s, Complex z) {
  if (std::abs(std::abs(s.atom) - 1.0) > 1e-9)
    throw std::invalid_argument("singular atom must lie on the unit circle");
  if (s.mass < 0.0) throw std::invalid_argument("singular mass must be nonnegative");
  if (!(std::abs(z) < 1.0)) throw std::domain_error("singular_inner_eval: |z| must be < 1");
  return std::exp(-s.mass * (s.atom + z) / (s.atom - z));
}

DiskFunction singular_inner_taylor(const SingularAtom& s, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (std::abs(std::abs(s.atom) - 1.0) > 1e-9)
    throw std::invalid_argument("singular atom must lie on the unit circle");
  if (s.mass < 0.0) throw std::invalid_argument("singular mass must be nonnegative");
  // (lambda+z)/(lambda-z) = 1 + 2 sum_{k>=1} (z/lambda)^k
  DiskFunction h;
  h.taylor.resize(static_cast<size_t>(d) + 1);
  h.taylor[0] = Complex(-s.mass);
  Complex pw = std::conj(s.atom);
  for (int k = 1; k <= d; ++k) {
    h.taylor[static_cast<size_t>(k)] = -2.0 * s.mass * pw;
    pw *= std::conj(s.atom);
  }
  return exp_series(h, d);
}

DiskFunction outer_part(const DiskFunction& f, int n, int d) {
  bool all_zero = true;
  for (const Complex& c : f.taylor)
    if (std::abs(c) >= kOriginZeroTol) all_zero = false;
  if (all_zero)
    throw std::domain_error("the zero function has no inner-outer factorization");
  const BoundaryFunction b = boundary_samples(f, n);
  std::vector<double> mod(static_cast<size_t>(n));
  double minmod = std::numeric_limits<double>::infinity();
  int argmin = 0;
  for (int j = 0; j < n; ++j) {
    mod[static_cast<size_t>(j)] = std::abs(b.samples[static_cast<size_t>(j)]);
    if (mod[static_cast<size_t>(j)] < minmod) {
      minmod = mod[static_cast<size_t>(j)];
      argmin = j;
    }
  }
  if (minmod <= kModulusFloor) {
    std::ostringstream msg;
    msg << "boundary modulus " << minmod << " at grid node " << argmin
        << " is below the floor; a boundary zero or singular inner mass is likely";
    throw HypothesisViolation(msg.str());
  }
  OuterOptions opts;
  opts.detect_boundary_zeros = false;
  return outer_from_modulus(mod, d, opts);
}

InnerOuterFactorization inner_part(const DiskFunction& f, int n, int d) {
  InnerOuterFactorization out;
  out.outer = outer_part(f, n, d);
  const BoundaryFunction fb = boundary_samples(f, n);
  const BoundaryFunction ob = boundary_samples(out.outer, n);
  out.inner_boundary.samples.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    out.inner_boundary.samples[static_cast<size_t>(j)] =
        fb.samples[static_cast<size_t>(j)] / ob.samples[static_cast<size_t>(j)];
  out.inner_taylor = project_analytic(out.inner_boundary, d).taylor;
  return out;
}

OuternessReport is_outer(const DiskFunction& f, int n, double tol) {
  size_t m = 0;
  while (m < f.taylor.size() && std::abs(f.taylor[m]) < kOriginZeroTol) ++m;
  if (m == f.taylor.size())
    throw std::domain_error("is_outer: the zero function has no inner-outer factorization");

  DiskFunction reduced;
  reduced.taylor.assign(f.taylor.begin() + static_cast<long>(m), f.taylor.end());
  const BoundaryFunction b = boundary_samples(reduced, n);
  std::vector<double> mod(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    mod[static_cast<size_t>(j)] = std::abs(b.samples[static_cast<size_t>(j)]);

  // Detected |e^{i theta} - lambda| factors contribute zero both to the
  // log-mean over the circle and to log of the value at the origin, so the
  // defect only needs the smooth quotient and the reduced leading term.
  const ZeroDivision zd = divide_boundary_zeros(mod, n, {}, true, kZeroDetectTol);
  double mean = 0.0;
  for (int j = 0; j < n; ++j) mean += std::log(zd.quotient[static_cast<size_t>(j)]);
  mean /= static_cast<double>(n);

  OuternessReport rep;
  rep.defect = mean - std::log(std::abs(reduced.taylor[0]));
  rep.zero_order_at_origin = static_cast<int>(m);
  rep.verdict = rep.defect <= tol;
  return rep;
}

}  // namespace hardygkz
