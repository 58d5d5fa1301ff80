#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hardygkz/disk_function.hpp"
#include "hardygkz/errors.hpp"
#include "hardygkz/factorization.hpp"
#include "hardygkz/fft.hpp"
#include "test_rng.hpp"

using hardygkz::BlaschkeProduct;
using hardygkz::BoundaryFunction;
using hardygkz::Complex;
using hardygkz::DiskFunction;
using hardygkz::SingularAtom;

namespace {

std::vector<double> modulus_on_grid(const DiskFunction& f, int n) {
  auto b = hardygkz::boundary_samples(f, n);
  std::vector<double> g;
  g.reserve(b.samples.size());
  for (const auto& s : b.samples) g.push_back(std::abs(s));
  return g;
}

// Positive trigonometric polynomial samples with min shifted to exactly lo.
std::vector<double> random_modulus(testrng::Rng& rng, int n, double lo) {
  std::vector<double> g(static_cast<size_t>(n));
  double a1 = testrng::uniform(rng, -1.0, 1.0);
  double b1 = testrng::uniform(rng, -1.0, 1.0);
  double a2 = testrng::uniform(rng, -1.0, 1.0);
  double mn = 1e300;
  for (int j = 0; j < n; ++j) {
    double t = testrng::kTau * j / n;
    g[static_cast<size_t>(j)] = a1 * std::cos(t) + b1 * std::sin(t) + a2 * std::cos(2 * t);
    mn = std::min(mn, g[static_cast<size_t>(j)]);
  }
  for (auto& v : g) v += lo - mn;
  return g;
}

}  // namespace

TEST_CASE("outer_from_modulus of the unit modulus is the constant 1") {
  std::vector<double> g(256, 1.0);
  auto f = hardygkz::outer_from_modulus(g, 16);
  CHECK(hardygkz::max_coeff_deviation(f, DiskFunction{{Complex(1.0)}}) < 1e-13);
}

TEST_CASE("outer_from_modulus recovers 1 - z from its boundary modulus") {
  const int n = 4096;
  const auto& nodes = hardygkz::circle_nodes(n);
  std::vector<double> g;
  g.reserve(n);
  for (const auto& node : nodes) g.push_back(std::abs(node - Complex(1.0)));
  auto f = hardygkz::outer_from_modulus(g, 256);
  CHECK(hardygkz::max_coeff_deviation(f, DiskFunction{{Complex(1.0), Complex(-1.0)}}) < 1e-8);
}

TEST_CASE("outer_from_modulus recovers 2 + z from its boundary modulus") {
  const int n = 4096;
  const auto& nodes = hardygkz::circle_nodes(n);
  std::vector<double> g;
  g.reserve(n);
  for (const auto& node : nodes) g.push_back(std::abs(Complex(2.0) + node));
  auto f = hardygkz::outer_from_modulus(g, 256);
  CHECK(hardygkz::max_coeff_deviation(f, DiskFunction{{Complex(2.0), Complex(1.0)}}) < 1e-10);
}

TEST_CASE("outer_from_modulus handles a declared boundary zero off the real axis") {
  const int n = 1024;
  const auto& nodes = hardygkz::circle_nodes(n);
  const Complex lambda(0.0, 1.0);
  std::vector<double> g;
  g.reserve(n);
  for (const auto& node : nodes) g.push_back(std::abs(node - lambda));

  hardygkz::OuterOptions opt;
  opt.boundary_zeros = {lambda};
  opt.detect_boundary_zeros = false;
  auto f = hardygkz::outer_from_modulus(g, 64, opt);
  // Restored factor is 1 - conj(lambda) z, the outer function with that modulus
  // normalized positive at the origin.
  CHECK(hardygkz::max_coeff_deviation(f, DiskFunction{{Complex(1.0), Complex(0.0, 1.0)}}) <
        1e-8);

  // Detection finds the same zero without the declaration.
  auto detected = hardygkz::outer_from_modulus(g, 64);
  CHECK(hardygkz::max_coeff_deviation(f, detected) < 1e-8);
}

TEST_CASE("outer_from_modulus rejects a modulus below the floor") {
  std::vector<double> g(256, 1e-12);
  CHECK_THROWS_AS(hardygkz::outer_from_modulus(g, 16), hardygkz::HypothesisViolation);
}

TEST_CASE("outer_from_modulus output is zero-free on the 0.99 grid") {
  testrng::Rng rng(31);
  auto g = random_modulus(rng, 1024, 1.0);
  auto f = hardygkz::outer_from_modulus(g, 128);
  for (int j = 0; j < 64; ++j) {
    Complex z = std::polar(0.99, testrng::kTau * j / 64.0);
    CHECK(std::abs(hardygkz::evaluate(f, z)) > 1e-3);
  }
}

TEST_CASE("blaschke_eval basics") {
  CHECK(hardygkz::blaschke_eval(BlaschkeProduct{}, Complex(0.3, 0.4)) == Complex(1.0));
  CHECK(std::abs(hardygkz::blaschke_eval(BlaschkeProduct{{Complex(0.0)}, Complex(1.0)},
                                         Complex(0.0, 0.3)) -
                 Complex(0.0, 0.3)) < 1e-15);
  CHECK(std::abs(hardygkz::blaschke_eval(BlaschkeProduct{{Complex(0.5)}, Complex(1.0)},
                                         Complex(0.0)) -
                 Complex(-0.5)) < 1e-15);
}

TEST_CASE("blaschke products are unimodular on the circle and contractive inside") {
  testrng::Rng rng(32);
  BlaschkeProduct b;
  for (int k = 0; k < 4; ++k) b.zeros.push_back(testrng::disk_point(rng, 0.8));
  b.front = testrng::circle_point(rng);
  for (int j = 0; j < 32; ++j) {
    Complex z = std::polar(1.0, testrng::kTau * j / 32.0);
    CHECK(std::abs(std::abs(hardygkz::blaschke_eval(b, z)) - 1.0) < 1e-12);
  }
  for (int j = 0; j < 16; ++j) {
    Complex z = testrng::disk_point(rng, 0.95);
    CHECK(std::abs(hardygkz::blaschke_eval(b, z)) < 1.0 + 1e-12);
  }
}

TEST_CASE("blaschke_taylor matches pointwise evaluation") {
  testrng::Rng rng(33);
  BlaschkeProduct b;
  b.zeros = {Complex(0.5), Complex(-0.2, 0.3), Complex(0.1, -0.6)};
  b.front = Complex(0.0, 1.0);
  auto t = hardygkz::blaschke_taylor(b, 128);
  for (int reps = 0; reps < 12; ++reps) {
    Complex z = testrng::disk_point(rng, 0.7);
    CHECK(std::abs(hardygkz::evaluate(t, z) - hardygkz::blaschke_eval(b, z)) < 1e-12);
  }
}

TEST_CASE("blaschke validation rejects zeros outside the disk and bad fronts") {
  CHECK_THROWS_AS(hardygkz::blaschke_eval(BlaschkeProduct{{Complex(1.2)}, Complex(1.0)},
                                          Complex(0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hardygkz::blaschke_taylor(BlaschkeProduct{{}, Complex(2.0)}, 8),
                  std::invalid_argument);
}

TEST_CASE("singular_inner_eval examples") {
  SingularAtom tiny{Complex(1.0), 1e-15};
  CHECK(std::abs(hardygkz::singular_inner_eval(tiny, Complex(0.5)) - Complex(1.0)) < 1e-12);

  SingularAtom s{Complex(1.0), 1.0};
  CHECK(std::abs(hardygkz::singular_inner_eval(s, Complex(0.0)) - Complex(std::exp(-1.0))) <
        1e-15);

  // Modulus equals exp(-sigma * Poisson kernel) since Re((lambda+z)/(lambda-z))
  // = (1-|z|^2)/|lambda-z|^2.
  Complex z(-0.999, 0.0);
  double kernel = (1.0 - std::norm(z)) / std::norm(Complex(1.0) - z);
  double want = std::exp(-1.0 * kernel);
  CHECK(std::abs(std::abs(hardygkz::singular_inner_eval(s, z)) - want) < 1e-6);

  CHECK_THROWS_AS(hardygkz::singular_inner_eval(s, Complex(1.0)), std::domain_error);
}

TEST_CASE("singular_inner_taylor matches pointwise evaluation") {
  testrng::Rng rng(34);
  SingularAtom s{std::polar(1.0, 2.2), 0.15};
  auto t = hardygkz::singular_inner_taylor(s, 256);
  for (int reps = 0; reps < 12; ++reps) {
    Complex z = testrng::disk_point(rng, 0.6);
    CHECK(std::abs(hardygkz::evaluate(t, z) - hardygkz::singular_inner_eval(s, z)) < 1e-10);
  }
}

TEST_CASE("outer_part fixes outer inputs and strips Blaschke factors") {
  DiskFunction two_z{{Complex(2.0), Complex(1.0)}};
  auto o1 = hardygkz::outer_part(two_z, 4096, 256);
  CHECK(hardygkz::max_coeff_deviation(o1, two_z) < 1e-8);

  auto o2 = hardygkz::outer_part(DiskFunction{{Complex(1.0)}}, 256, 16);
  CHECK(hardygkz::max_coeff_deviation(o2, DiskFunction{{Complex(1.0)}}) < 1e-12);

  auto b = hardygkz::blaschke_taylor(BlaschkeProduct{{Complex(0.5)}, Complex(1.0)}, 256);
  auto f = hardygkz::multiply(b, two_z, 256);
  auto o3 = hardygkz::outer_part(f, 4096, 256);
  CHECK(hardygkz::max_coeff_deviation(o3, two_z) < 1e-6);
}

TEST_CASE("outer_part reports boundary zeros instead of guessing") {
  DiskFunction f{{Complex(1.0), Complex(-1.0)}};  // 1 - z vanishes at theta = 0
  CHECK_THROWS_AS(hardygkz::outer_part(f, 1024, 64), hardygkz::HypothesisViolation);
  try {
    hardygkz::outer_part(f, 1024, 64);
  } catch (const hardygkz::HypothesisViolation& e) {
    CHECK(std::string(e.what()).find("boundary") != std::string::npos);
  }
}

TEST_CASE("inner_part of an outer function is the constant 1") {
  auto fac = hardygkz::inner_part(DiskFunction{{Complex(2.0), Complex(1.0)}}, 2048, 128);
  for (const auto& s : fac.inner_boundary.samples) CHECK(std::abs(std::abs(s) - 1.0) < 1e-8);
  CHECK(hardygkz::max_coeff_deviation(fac.inner_taylor, DiskFunction{{Complex(1.0)}}) < 1e-6);
}

TEST_CASE("inner_part recovers a Blaschke factor") {
  BlaschkeProduct b{{Complex(0.5)}, Complex(1.0)};
  auto bt = hardygkz::blaschke_taylor(b, 256);
  auto f = hardygkz::multiply(bt, DiskFunction{{Complex(2.0), Complex(1.0)}}, 256);
  auto fac = hardygkz::inner_part(f, 4096, 256);
  CHECK(hardygkz::max_coeff_deviation(fac.inner_taylor, bt) < 1e-6);
  CHECK(hardygkz::max_coeff_deviation(fac.outer, DiskFunction{{Complex(2.0), Complex(1.0)}}) <
        1e-6);
  // Inner boundary values are unimodular.
  for (const auto& s : fac.inner_boundary.samples) CHECK(std::abs(std::abs(s) - 1.0) < 1e-6);
}

TEST_CASE("inner_part with an atom aliases only near the singularity") {
  const int n = 4096;
  const int d = 256;
  SingularAtom s{Complex(1.0), 0.1};
  auto st = hardygkz::singular_inner_taylor(s, d);
  auto f = hardygkz::multiply(st, DiskFunction{{Complex(2.0), Complex(1.0)}}, d);
  auto fac = hardygkz::inner_part(f, n, d);

  // The boundary representation reproduces f to roundoff everywhere.
  auto fb = hardygkz::boundary_samples(f, n);
  auto ob = hardygkz::boundary_samples(fac.outer, n);
  double prim_err = 0.0;
  for (size_t j = 0; j < fb.samples.size(); ++j)
    prim_err = std::max(prim_err, std::abs(fac.inner_boundary.samples[j] * ob.samples[j] -
                                           fb.samples[j]));
  CHECK(prim_err < 1e-12);

  // The degree-d projection cannot carry the chirp at the atom; its deviation
  // from the quotient concentrates near theta = 0 and stays small away.
  auto ib = hardygkz::synthesis(fac.inner_taylor.taylor, n);
  double near_err = 0.0;
  double far_err = 0.0;
  for (int j = 0; j < n; ++j) {
    double theta = testrng::kTau * j / n;
    double dist = std::min(theta, testrng::kTau - theta);
    double dev = std::abs(ib[static_cast<size_t>(j)] -
                          fac.inner_boundary.samples[static_cast<size_t>(j)]);
    if (dist < 0.3)
      near_err = std::max(near_err, dev);
    else
      far_err = std::max(far_err, dev);
  }
  CHECK(far_err < 0.1);
  CHECK(near_err > 5.0 * far_err);
}

TEST_CASE("is_outer examples") {
  auto r1 = hardygkz::is_outer(DiskFunction{{Complex(1.0)}}, 256);
  CHECK(r1.verdict);
  CHECK(std::abs(r1.defect) < 1e-12);
  CHECK(r1.zero_order_at_origin == 0);

  // Blaschke factor at 0.5: boundary log-mean 0, log|f(0)| = log(1/2).
  auto b = hardygkz::blaschke_taylor(BlaschkeProduct{{Complex(0.5)}, Complex(1.0)}, 256);
  auto r2 = hardygkz::is_outer(b, 4096);
  CHECK_FALSE(r2.verdict);
  CHECK(std::abs(r2.defect - std::log(2.0)) < 1e-6);

  // z - 1 has a boundary zero; the log singularity is integrable and the
  // defect still vanishes.
  auto r3 = hardygkz::is_outer(DiskFunction{{Complex(-1.0), Complex(1.0)}}, 4096);
  CHECK(r3.verdict);

  // z^2 (2+z): the origin zero is stripped before the comparison.
  auto r4 = hardygkz::is_outer(
      DiskFunction{{Complex(0.0), Complex(0.0), Complex(2.0), Complex(1.0)}}, 2048);
  CHECK(r4.verdict);
  CHECK(r4.zero_order_at_origin == 2);

  CHECK_THROWS_AS(hardygkz::is_outer(DiskFunction{{Complex(0.0)}}, 256), std::domain_error);
}

TEST_CASE("jensen defect matches the zero-counting closed form") {
  // For f = prod (z - a_j): defect = sum over zeros inside the disk of
  // log(1/|a_j|); zeros outside contribute nothing.
  testrng::Rng rng(35);
  for (int reps = 0; reps < 20; ++reps) {
    DiskFunction f{{Complex(1.0)}};
    double want = 0.0;
    int nz = 1 + static_cast<int>(testrng::uniform(rng, 0.0, 3.99));
    for (int k = 0; k < nz; ++k) {
      Complex a;
      if (testrng::uniform01(rng) < 0.5) {
        a = testrng::disk_point(rng, 0.8);
        if (std::abs(a) < 0.05) a += Complex(0.1);
        want += std::log(1.0 / std::abs(a));
      } else {
        a = std::polar(testrng::uniform(rng, 1.25, 2.0), testrng::kTau * testrng::uniform01(rng));
      }
      f = hardygkz::multiply(f, DiskFunction{{-a, Complex(1.0)}}, 16);
    }
    auto r = hardygkz::is_outer(f, 4096);
    CHECK(std::abs(r.defect - want) < 1e-6);
    CHECK(r.defect > -1e-8);
  }
}

TEST_CASE("defect is additive for boundary-zero-free factors") {
  testrng::Rng rng(36);
  for (int reps = 0; reps < 8; ++reps) {
    DiskFunction f{{Complex(2.0), testrng::box_point(rng, 0.5), testrng::box_point(rng, 0.5)}};
    DiskFunction g{{testrng::disk_point(rng, 0.7), Complex(1.0)}};
    auto fg = hardygkz::multiply(f, g, 8);
    double sum = hardygkz::is_outer(f, 2048).defect + hardygkz::is_outer(g, 2048).defect;
    CHECK(std::abs(hardygkz::is_outer(fg, 2048).defect - sum) < 1e-6);
  }
}

TEST_CASE("functions bounded away from zero are outer") {
  testrng::Rng rng(37);
  for (int reps = 0; reps < 10; ++reps) {
    DiskFunction g{{Complex(2.0)}};
    for (int k = 1; k <= 5; ++k) g.taylor.push_back(testrng::box_point(rng, 0.15));
    CHECK(hardygkz::is_outer(g, 2048).verdict);
  }
}

TEST_CASE("factorization round trip on seeded random instances") {
  testrng::Rng rng(38);
  const int n = 2048;
  const int d = 128;
  for (int inst = 0; inst < 10; ++inst) {
    BlaschkeProduct b;
    int nz = static_cast<int>(testrng::uniform(rng, 0.0, 3.99));
    for (int k = 0; k < nz; ++k) b.zeros.push_back(testrng::disk_point(rng, 0.8));
    DiskFunction inner = hardygkz::blaschke_taylor(b, d);
    const bool has_atom = testrng::uniform01(rng) < 0.5;
    if (has_atom) {
      SingularAtom s{testrng::circle_point(rng), testrng::uniform(rng, 0.02, 0.2)};
      inner = hardygkz::multiply(inner, hardygkz::singular_inner_taylor(s, d), d);
    }
    // gentle ripple around 2 so the degree-d truncation of the outer part is
    // faithful; the wilder moduli are exercised by the modulus-match test
    std::vector<double> g(static_cast<size_t>(n));
    const double a1 = testrng::uniform(rng, -0.3, 0.3);
    const double b1 = testrng::uniform(rng, -0.3, 0.3);
    const double a2 = testrng::uniform(rng, -0.3, 0.3);
    for (int j = 0; j < n; ++j) {
      const double t = testrng::kTau * j / n;
      g[static_cast<size_t>(j)] =
          2.0 + a1 * std::cos(t) + b1 * std::sin(t) + a2 * std::cos(2 * t);
    }
    auto outer = hardygkz::outer_from_modulus(g, d);
    auto f = hardygkz::multiply(inner, outer, d);

    auto fac = hardygkz::inner_part(f, n, d);
    auto fb = hardygkz::boundary_samples(f, n);
    auto ob = hardygkz::boundary_samples(fac.outer, n);
    double err = 0.0;
    for (size_t j = 0; j < static_cast<size_t>(n); ++j)
      err = std::max(err, std::abs(fac.inner_boundary.samples[j] * ob.samples[j] -
                                   fb.samples[j]));
    CHECK(err < 1e-5);

    // Away from atoms the projection is faithful too, so the all-Taylor
    // product must also reproduce f.
    if (!has_atom) {
      auto ib = hardygkz::synthesis(fac.inner_taylor.taylor, n);
      double terr = 0.0;
      for (size_t j = 0; j < static_cast<size_t>(n); ++j)
        terr = std::max(terr, std::abs(ib[j] * ob.samples[j] - fb.samples[j]));
      CHECK(terr < 1e-5);
    }
  }
}

TEST_CASE("outer boundary modulus matches the prescribed data") {
  testrng::Rng rng(39);
  auto g = random_modulus(rng, 1024, 0.5);
  auto f = hardygkz::outer_from_modulus(g, 128);
  auto got = modulus_on_grid(f, 1024);
  double err = 0.0;
  for (size_t j = 0; j < got.size(); ++j) err = std::max(err, std::abs(got[j] - g[j]));
  CHECK(err < 1e-8);
}
