#include "hardygkz/gkz_engine.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hardygkz/errors.hpp"
#include "hardygkz/factorization.hpp"
#include "hardygkz/fft.hpp"
#include "hardygkz/mobius.hpp"

namespace hardygkz {

namespace {

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

double linf(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::vector<Complex> ring_values(const std::vector<Complex>& coeffs, double r, int n) {
  std::vector<Complex> scaled(coeffs);
  double pr = 1.0;
  for (Complex& c : scaled) {
    c *= pr;
    pr *= r;
  }
  return synthesis(scaled, n);
}

constexpr double kScanRadii[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};

double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 60; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<Complex> apply_matrix(const OperatorMatrix& t, const DiskFunction& g) {
  const int d = static_cast<int>(t.rows()) - 1;
  if (g.degree() > d)
    throw std::invalid_argument("test function degree exceeds the operator truncation");
  Eigen::VectorXcd gv = Eigen::VectorXcd::Zero(d + 1);
  for (int k = 0; k <= std::min(g.degree(), d); ++k) gv(k) = g.coeff(k);
  const Eigen::VectorXcd tg = t * gv;
  std::vector<Complex> out(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) out[static_cast<size_t>(k)] = tg(k);
  return out;
}

}  // namespace

Complex apply_functional(const CoefficientFunctional& lam, const DiskFunction& f) {
  Complex acc(0.0);
  const size_t m = std::min(lam.lambda.size(), f.taylor.size());
  for (size_t k = 0; k < m; ++k) acc += lam.lambda[k] * f.taylor[k];
  return acc;
}

RecoveryReport recover_functional(const CoefficientFunctional& lam, double tol) {
  if (lam.lambda.size() < 2)
    throw std::invalid_argument("functional needs at least two coefficients");
  if (std::abs(lam.lambda[0]) == 0.0)
    throw HypothesisViolation("functional vanishes on the outer function 1");
  RecoveryReport rep;
  rep.c = lam.lambda[0];
  rep.w = lam.lambda[1] / lam.lambda[0];
  if (!(std::abs(rep.w) < 1.0)) {
    std::ostringstream msg;
    msg << "functional vanishes on the outer function z - w with w = (" << rep.w.real()
        << ", " << rep.w.imag() << ") outside the open disk";
    throw HypothesisViolation(msg.str());
  }
  double dev = 0.0;
  Complex pw(1.0);
  for (size_t k = 0; k < lam.lambda.size(); ++k) {
    dev = std::max(dev, std::abs(lam.lambda[k] - rep.c * pw));
    pw *= rep.w;
  }
  rep.residual = dev / std::max(1.0, std::abs(rep.c));
  rep.verdict = rep.residual <= tol;
  return rep;
}

double difference_quotient_check(const CoefficientFunctional& lam, const DiskFunction& f,
                                 double tol) {
  const RecoveryReport rec = recover_functional(lam, tol);
  const Complex fw = horner(f.taylor, rec.w);
  const int df = f.degree();
  std::vector<Complex> k(static_cast<size_t>(std::max(df, 1)), Complex(0.0));
  if (df >= 1) {
    k[static_cast<size_t>(df) - 1] = f.taylor[static_cast<size_t>(df)];
    for (int j = df - 1; j >= 1; --j)
      k[static_cast<size_t>(j) - 1] =
          f.taylor[static_cast<size_t>(j)] + rec.w * k[static_cast<size_t>(j)];
  }
  const Complex rem = f.coeff(0) + rec.w * k[0];
  // f = (z - w) k + f(w) must reconstruct the coefficients
  DiskFunction recon = multiply(DiskFunction{{-rec.w, Complex(1.0)}}, DiskFunction{k},
                                std::max(df, 1));
  recon.taylor[0] += rem;
  const double scale = std::max({1.0, linf(f.taylor), linf(k)});
  if (max_coeff_deviation(recon, f) > 1e-9 * scale)
    throw std::logic_error("difference quotient reconstruction failed");
  return std::abs(apply_functional(lam, f) - rec.c * fw);
}

std::vector<DiskFunction> outer_test_family(int count, unsigned long long seed, int d) {
  if (count < 0) throw std::invalid_argument("family size must be nonnegative");
  if (d < 1) throw std::invalid_argument("degree must be at least 1");

  std::vector<DiskFunction> family;
  std::vector<std::set<int>> circle_ids;
  family.reserve(static_cast<size_t>(count));

  family.push_back(DiskFunction{{Complex(1.0)}});
  circle_ids.push_back({});
  const std::vector<Complex>& eighth = circle_nodes(8);
  for (int j = 0; j < 8 && static_cast<int>(family.size()) < count; ++j) {
    family.push_back(DiskFunction{{-eighth[static_cast<size_t>(j)], Complex(1.0)}});
    circle_ids.push_back({j});
  }

  std::mt19937_64 rng(seed);
  int n_gen = kDefaultGrid;
  while (n_gen < 2 * d + 2) n_gen <<= 1;
  const std::vector<Complex>& nodes = circle_nodes(n_gen);

  int step = 0;
  while (static_cast<int>(family.size()) < count) {
    if (step % 3 != 2) {
      // positive trigonometric polynomial, minimum pinned at 0.1
      double a[5], b[5];
      for (int m = 0; m <= 4; ++m) a[m] = 2.0 * uniform01(rng) - 1.0;
      for (int m = 1; m <= 4; ++m) b[m] = 2.0 * uniform01(rng) - 1.0;
      std::vector<double> g(static_cast<size_t>(n_gen));
      double gmin = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n_gen; ++j) {
        double v = a[0];
        Complex pw(1.0);
        for (int m = 1; m <= 4; ++m) {
          pw *= nodes[static_cast<size_t>(j)];
          v += a[m] * pw.real() + b[m] * pw.imag();
        }
        g[static_cast<size_t>(j)] = v;
        gmin = std::min(gmin, v);
      }
      for (double& v : g) v += 0.1 - gmin;
      family.push_back(outer_from_modulus(g, d));
      circle_ids.push_back({});
    } else {
      // product of two earlier members; disjoint circle zeros keep it outer
      const int size = static_cast<int>(family.size());
      int pi = 0, pj = size - 1;
      for (int attempt = 0; attempt < 64; ++attempt) {
        const int i = static_cast<int>(rng() % static_cast<unsigned long long>(size));
        const int j = static_cast<int>(rng() % static_cast<unsigned long long>(size));
        if (i == j) continue;
        bool disjoint = true;
        for (int id : circle_ids[static_cast<size_t>(i)])
          if (circle_ids[static_cast<size_t>(j)].count(id)) disjoint = false;
        if (!disjoint) continue;
        pi = i;
        pj = j;
        break;
      }
      family.push_back(
          multiply(family[static_cast<size_t>(pi)], family[static_cast<size_t>(pj)], d));
      std::set<int> ids = circle_ids[static_cast<size_t>(pi)];
      ids.insert(circle_ids[static_cast<size_t>(pj)].begin(),
                 circle_ids[static_cast<size_t>(pj)].end());
      circle_ids.push_back(std::move(ids));
    }
    ++step;
  }
  return family;
}

std::optional<FunctionalWitness> functional_witness(const CoefficientFunctional& lam,
                                                    const std::vector<DiskFunction>& family,
                                                    double tol) {
  const double scale = std::max(1.0, linf(lam.lambda));
  for (size_t idx = 0; idx < family.size(); ++idx) {
    const Complex val = apply_functional(lam, family[idx]);
    if (std::abs(val) <= tol * scale)
      return FunctionalWitness{static_cast<int>(idx), family[idx], val};
  }
  return std::nullopt;
}

WcoReport recover_operator(const OperatorMatrix& t, int n, double tol) {
  if (t.rows() != t.cols() || t.rows() < 2)
    throw std::invalid_argument("operator matrix must be square of size at least 2");
  const int d = static_cast<int>(t.rows()) - 1;
  if (!is_power_of_two(n) || 2 * d + 2 > n)
    throw std::invalid_argument("grid size must be a power of two with d < n/2");

  WcoReport rep;
  rep.psi.taylor.resize(static_cast<size_t>(d) + 1);
  for (int row = 0; row <= d; ++row) rep.psi.taylor[static_cast<size_t>(row)] = t(row, 0);

  double scan_min = std::numeric_limits<double>::infinity();
  Complex scan_at(0.0);
  double ring99 = std::numeric_limits<double>::infinity();
  const std::vector<Complex>& nodes = circle_nodes(n);
  for (double r : kScanRadii) {
    if (r == 0.0) {
      const double v = std::abs(rep.psi.taylor[0]);
      if (v < scan_min) {
        scan_min = v;
        scan_at = Complex(0.0);
      }
      continue;
    }
    const std::vector<Complex> vals = ring_values(rep.psi.taylor, r, n);
    for (int j = 0; j < n; ++j) {
      const double v = std::abs(vals[static_cast<size_t>(j)]);
      if (r == 0.99) ring99 = std::min(ring99, v);
      if (v < scan_min) {
        scan_min = v;
        scan_at = r * nodes[static_cast<size_t>(j)];
      }
    }
  }
  if (scan_min < tol) {
    std::ostringstream msg;
    msg << "weight vanishes inside the disk: |psi| = " << scan_min << " near ("
        << scan_at.real() << ", " << scan_at.imag() << ")";
    throw WeightVanishesError(msg.str(), scan_at);
  }
  rep.min_weight_modulus = ring99;

  const BoundaryFunction psib = boundary_samples(rep.psi, n);
  DiskFunction col1;
  col1.taylor.resize(static_cast<size_t>(d) + 1);
  for (int row = 0; row <= d; ++row) col1.taylor[static_cast<size_t>(row)] = t(row, 1);
  const BoundaryFunction c1b = boundary_samples(col1, n);

  double max_psib = 0.0;
  for (const Complex& v : psib.samples) max_psib = std::max(max_psib, std::abs(v));
  const double floor2 = (1e-12 * max_psib) * (1e-12 * max_psib);
  BoundaryFunction quot;
  quot.samples.resize(static_cast<size_t>(n));
  // clamped quotient: isolated boundary zeros of psi contribute one bad node,
  // which the projection spreads as O(1/n)
  for (int j = 0; j < n; ++j) {
    const Complex den = psib.samples[static_cast<size_t>(j)];
    quot.samples[static_cast<size_t>(j)] =
        c1b.samples[static_cast<size_t>(j)] * std::conj(den) / std::max(std::norm(den), floor2);
  }
  rep.phi = project_analytic(quot, d).taylor;

  const BoundaryFunction phib = boundary_samples(rep.phi, n);
  double maxphi = 0.0;
  for (const Complex& v : phib.samples) maxphi = std::max(maxphi, std::abs(v));
  rep.selfmap_margin = 1.0 - maxphi;
  if (maxphi >= 1.0 + 1e-9) {
    std::ostringstream msg;
    msg << "recovered phi is not a self-map: max boundary |phi| = " << maxphi;
    throw HypothesisViolation(msg.str());
  }

  std::vector<Complex> colvals = psib.samples;
  double res = 0.0;
  for (int kcol = 0; kcol <= d / 2; ++kcol) {
    if (kcol > 0)
      for (int j = 0; j < n; ++j)
        colvals[static_cast<size_t>(j)] *= phib.samples[static_cast<size_t>(j)];
    const std::vector<Complex> bins = analysis_bins(colvals);
    for (int row = 0; row <= d; ++row)
      res = std::max(res, std::abs(t(row, kcol) - bins[static_cast<size_t>(row)]));
  }
  rep.residual = res;
  return rep;
}

std::optional<NonvanishingWitness> check_outer_nonvanishing(
    const OperatorMatrix& t, const std::vector<DiskFunction>& family, int n, double tol) {
  if (t.rows() != t.cols() || t.rows() < 2)
    throw std::invalid_argument("operator matrix must be square of size at least 2");
  if (!is_power_of_two(n) || n < 2)
    throw std::invalid_argument("grid size must be a power of two");

  for (size_t idx = 0; idx < family.size(); ++idx) {
    const std::vector<Complex> tg = apply_matrix(t, family[idx]);
    const double scale = linf(tg);
    if (scale == 0.0)
      return NonvanishingWitness{static_cast<int>(idx), family[idx], Complex(0.0),
                                 Complex(0.0)};
    const double threshold = tol * scale;
    for (double r : kScanRadii) {
      int hit = -1;
      if (r == 0.0) {
        if (std::abs(tg[0]) < threshold) hit = 0;
      } else {
        const std::vector<Complex> vals = ring_values(tg, r, n);
        for (int j = 0; j < n; ++j) {
          if (std::abs(vals[static_cast<size_t>(j)]) < threshold) {
            hit = j;
            break;
          }
        }
      }
      if (hit < 0) continue;

      const double theta = 2.0 * std::numbers::pi * hit / n;
      const auto absf = [&tg](double rr, double th) {
        return std::abs(horner(tg, std::polar(rr, th)));
      };
      const double rbest = golden_min(
          [&](double rr) { return absf(rr, theta); }, std::max(0.0, r - 0.1),
          std::min(0.99, r + 0.1));
      const double span = 2.0 * std::numbers::pi / n;
      const double tbest = golden_min(
          [&](double th) { return absf(rbest, th); }, theta - span, theta + span);
      Complex z0 = std::polar(rbest, tbest);
      Complex val = horner(tg, z0);
      const Complex zg = std::polar(r, theta);
      const Complex vg = horner(tg, zg);
      if (std::abs(vg) < std::abs(val)) {
        z0 = zg;
        val = vg;
      }
      return NonvanishingWitness{static_cast<int>(idx), family[idx], z0, val};
    }
  }
  return std::nullopt;
}

OperatorMatrix swap_unitary(int d) {
  if (d < 1) throw std::invalid_argument("swap needs degree at least 1");
  OperatorMatrix t = OperatorMatrix::Identity(d + 1, d + 1);
  t(0, 0) = Complex(0.0);
  t(1, 1) = Complex(0.0);
  t(0, 1) = Complex(1.0);
  t(1, 0) = Complex(1.0);
  return t;
}

IsometryClassification classify_isometry(const OperatorMatrix& t,
                                         const std::vector<DiskFunction>& family, int n,
                                         double tol) {
  if (t.rows() != t.cols() || t.rows() < 2)
    throw std::invalid_argument("operator matrix must be square of size at least 2");
  const int d = static_cast<int>(t.rows()) - 1;
  // Column k of a composition operator spreads energy out to rows near
  // k (1+|w|)/(1-|w|), so the truncation only represents the leading
  // columns faithfully; d/4 leaves the edge inside the matrix for |w| <= 0.5.
  const int bsize = std::max(1, d / 4);

  Eigen::MatrixXcd e = (t.adjoint() * t).topLeftCorner(bsize, bsize);
  e -= Eigen::MatrixXcd::Identity(bsize, bsize);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
  const double deviation = es.eigenvalues().cwiseAbs().maxCoeff();
  if (deviation > tol) {
    std::ostringstream msg;
    msg << "not an isometry on the leading block: |T*T - I| = " << deviation
        << "; if T truncates a true isometry, raise the degree";
    throw HypothesisViolation(msg.str());
  }

  const std::optional<NonvanishingWitness> witness =
      check_outer_nonvanishing(t, family, n, tol);
  if (witness) return CounterexampleReport{*witness, deviation};

  const WcoReport wco = recover_operator(t, n, tol);
  const Complex a = wco.phi.coeff(0);
  const Complex b = wco.phi.coeff(1);
  if (!(std::abs(a) < 1.0))
    throw HypothesisViolation("recovered phi(0) is not inside the disk");
  Complex cphi = b / (1.0 - std::norm(a));
  if (std::abs(std::abs(cphi) - 1.0) > tol) {
    std::ostringstream msg;
    msg << "phi is not an automorphism: |phi'(0)| / (1 - |phi(0)|^2) = " << std::abs(cphi);
    throw HypothesisViolation(msg.str());
  }
  cphi /= std::abs(cphi);
  const MobiusMap fit{-a / cphi, cphi};

  const BoundaryFunction phib = boundary_samples(wco.phi, n);
  const std::vector<Complex>& nodes = circle_nodes(n);
  double fitres = 0.0;
  for (int j = 0; j < n; ++j)
    fitres = std::max(fitres, std::abs(phib.samples[static_cast<size_t>(j)] -
                                       mobius_eval(fit, nodes[static_cast<size_t>(j)])));
  if (fitres > tol) {
    std::ostringstream msg;
    msg << "phi deviates from the fitted automorphism by " << fitres << " on the boundary";
    throw HypothesisViolation(msg.str());
  }

  Complex c = wco.psi.coeff(0) / std::sqrt(b);
  if (std::abs(std::abs(c) - 1.0) > tol) {
    std::ostringstream msg;
    msg << "weight is not (c phi')^{1/2}: |psi(0) / sqrt(phi'(0))| = " << std::abs(c);
    throw HypothesisViolation(msg.str());
  }
  c /= std::abs(c);

  const OperatorMatrix rebuilt = forelli_isometry(fit, c, 2.0, d, n);
  const int rsize = std::max(1, d / 2);  // rebuild shares the truncation, so compare more
  const double rres =
      (t - rebuilt).topLeftCorner(rsize, rsize).cwiseAbs().maxCoeff();
  if (rres > tol) {
    std::ostringstream msg;
    msg << "operator deviates from the fitted isometry by " << rres;
    throw HypothesisViolation(msg.str());
  }
  return ForelliCertificate{fit, c, fitres, rres, deviation};
}

Complex quotient_constancy_check(const DiskFunction& h, int n, double tol) {
  const BoundaryFunction b = boundary_samples(h, n);
  double maxmod = 0.0;
  double minmod = std::numeric_limits<double>::infinity();
  for (const Complex& v : b.samples) {
    const double m = std::abs(v);
    maxmod = std::max(maxmod, m);
    minmod = std::min(minmod, m);
  }
  if (maxmod > 1.0 + tol || !(minmod * (1.0 + tol) >= 1.0)) {
    std::ostringstream msg;
    msg << "not a bilateral contraction: sup |h| = " << maxmod << ", inf |h| = " << minmod;
    throw HypothesisViolation(msg.str());
  }
  const Complex c0 = h.coeff(0);
  if (std::abs(std::abs(c0) - 1.0) > tol) {
    std::ostringstream msg;
    msg << "|h(0)| = " << std::abs(c0) << " is not unimodular; h is not constant";
    throw HypothesisViolation(msg.str());
  }
  return c0;
}

}  // namespace hardygkz
