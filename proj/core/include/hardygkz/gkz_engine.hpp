#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hardygkz/defaults.hpp"
#include "hardygkz/disk_function.hpp"
#include "hardygkz/mobius.hpp"

namespace hardygkz {

struct CoefficientFunctional {
  std::vector<Complex> lambda;  // lambda_k = Lambda(z^k)
};

struct RecoveryReport {
  Complex c;
  Complex w;
  double residual = 0.0;  // max_k |lambda_k - c w^k| / max(1, |c|)
  bool verdict = false;
};

struct WcoReport {
  DiskFunction psi;
  DiskFunction phi;
  double residual = 0.0;             // max over columns k <= d/2 of coefficient deviation
  double selfmap_margin = 0.0;       // 1 - max grid |phi|
  double min_weight_modulus = 0.0;   // min |psi| on the radius-0.99 circle
};

struct NonvanishingWitness {
  int family_index = 0;
  DiskFunction g;   // outer test function
  Complex z0;       // |z0| < 1
  Complex value;    // (Tg)(z0), below tolerance in modulus
};

struct FunctionalWitness {
  int family_index = 0;
  DiskFunction g;
  Complex value;  // Lambda(g)
};

struct ForelliCertificate {
  MobiusMap map;
  Complex c;  // unimodular front constant
  double mobius_fit_residual = 0.0;
  double rebuild_residual = 0.0;
  double isometry_deviation = 0.0;
};

struct CounterexampleReport {
  NonvanishingWitness witness;
  double isometry_deviation = 0.0;
};

using IsometryClassification = std::variant<ForelliCertificate, CounterexampleReport>;

Complex apply_functional(const CoefficientFunctional& lam, const DiskFunction& f);

// c := lambda_0, w := lambda_1/lambda_0. Throws HypothesisViolation when the
// functional provably vanishes on an outer function (lambda_0 = 0, or the
// annihilated z - w has |w| >= 1).
RecoveryReport recover_functional(const CoefficientFunctional& lam, double tol = kDefaultTol);

// |Lambda(f) - c f(w)|, with k = (f - f(w))/(z - w) checked by synthetic
// division to reproduce f exactly.
double difference_quotient_check(const CoefficientFunctional& lam, const DiskFunction& f,
                                 double tol = kDefaultTol);

// Deterministic-by-seed stream: 1, then z - lambda at the eighth roots of
// unity, then random outer functions and pairwise products. Prefix-stable in
// count for a fixed seed.
std::vector<DiskFunction> outer_test_family(int count, unsigned long long seed,
                                            int d = kDefaultDegree);

// First family member with |Lambda(g)| below tol * scale, if any.
std::optional<FunctionalWitness> functional_witness(const CoefficientFunctional& lam,
                                                    const std::vector<DiskFunction>& family,
                                                    double tol = kDefaultTol);

// psi := column 0, phi := projected quotient column1*/psi*. Throws
// WeightVanishesError when psi vanishes on the concentric scan grid and
// HypothesisViolation when phi is not a strict self-map.
WcoReport recover_operator(const OperatorMatrix& t, int n = kDefaultGrid,
                           double tol = kDefaultTol);

// Scans concentric grids r in {0, 0.1..0.9, 0.99}; the returned witness is
// the deterministic first in (family, radius, angle) order, refined by one
// golden-section pass per axis.
std::optional<NonvanishingWitness> check_outer_nonvanishing(
    const OperatorMatrix& t, const std::vector<DiskFunction>& family, int n = kDefaultGrid,
    double tol = kDefaultTol);

// Exchanges 1 and z, fixes z^k for k >= 2.
OperatorMatrix swap_unitary(int d);

// Requires T*T = I on the top-left block to tol (spectral norm). Returns a
// counterexample on a nonvanishing witness, otherwise a Forelli certificate.
IsometryClassification classify_isometry(const OperatorMatrix& t,
                                         const std::vector<DiskFunction>& family,
                                         int n = kDefaultGrid, double tol = kDefaultTol);

// For h with sup|h| <= 1+tol and sup|1/h| <= 1+tol on the grid, returns the
// unimodular constant h(0); otherwise throws "not a bilateral contraction".
Complex quotient_constancy_check(const DiskFunction& h, int n = kDefaultGrid,
                                 double tol = kDefaultTol);

}  // namespace hardygkz
