#pragma once

#include <complex>
#include <vector>

#include "hardygkz/defaults.hpp"
#include "hardygkz/disk_function.hpp"

namespace hardygkz {

struct BlaschkeProduct {
  std::vector<Complex> zeros;    // |a_j| < 1, listed with multiplicity
  Complex front = Complex(1.0);  // |front| = 1
};

struct SingularAtom {
  Complex atom = Complex(1.0);  // |atom| = 1
  double mass = 0.0;            // > 0
};

struct OuternessReport {
  double defect = 0.0;  // mean log|f*| minus log of the reduced value at 0, in nats
  int zero_order_at_origin = 0;
  bool verdict = false;  // defect <= tol for the z^m-reduced function
};

struct OuterOptions {
  // Circle points where the modulus vanishes; each is divided out of G
  // analytically and restored afterwards as a (z - lambda) factor, since
  // trapezoid quadrature of the log-singularity is only O(N^-1 log N).
  std::vector<Complex> boundary_zeros;
  bool detect_boundary_zeros = true;
  double detect_tol = kZeroDetectTol;  // relative to max G
};

// exp(herglotz_transform(log G)) truncated to degree d, normalized with
// g(0) > 0. Grid points with G below kModulusFloor must be declared or
// detectable boundary zeros.
DiskFunction outer_from_modulus(const std::vector<double>& g_samples, int d,
                                const OuterOptions& options = {});

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);  // |z| <= 1
DiskFunction blaschke_taylor(const BlaschkeProduct& b, int d);

Complex singular_inner_eval(const SingularAtom& s, Complex z);  // |z| < 1
DiskFunction singular_inner_taylor(const SingularAtom& s, int d);

// outer_from_modulus of |f*| with zero detection off; requires
// min grid |f*| > kModulusFloor.
DiskFunction outer_part(const DiskFunction& f, int n, int d);

struct InnerOuterFactorization {
  DiskFunction outer;
  BoundaryFunction inner_boundary;  // exact grid quotient f*/outer*
  DiskFunction inner_taylor;        // projection; may alias near boundary atoms
};
InnerOuterFactorization inner_part(const DiskFunction& f, int n, int d);

OuternessReport is_outer(const DiskFunction& f, int n, double tol = kDefaultTol);

}  // namespace hardygkz
