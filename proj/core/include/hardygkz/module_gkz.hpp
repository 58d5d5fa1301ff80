#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardygkz/defaults.hpp"

namespace hardygkz {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// Structure-constant algebra: e_i e_j = sum_k structure[(i*n + j)*n + k] e_k.
struct FiniteAlgebra {
  int dim = 0;
  std::vector<std::complex<double>> structure;  // flattened n*n*n, [i][j][k]
  ComplexVector unit;

  std::complex<double> structure_at(int i, int j, int k) const {
    return structure[static_cast<size_t>((i * dim + j) * dim + k)];
  }
};

ComplexVector algebra_product(const FiniteAlgebra& alg, const ComplexVector& a,
                              const ComplexVector& b);
// Matrix of b -> a*b in the basis coordinates.
ComplexMatrix left_regular(const FiniteAlgebra& alg, const ComplexVector& a);

struct AlgebraViolation {
  std::string law;  // "associativity", "left unit", "right unit"
  int i = 0, j = 0, k = 0;
  double magnitude = 0.0;
};

std::optional<AlgebraViolation> verify_algebra(const FiniteAlgebra& alg, double tol = 1e-12);

// Left module action: a acts as sum_i a_i action[i] on coordinate vectors.
struct ModuleAction {
  int dim = 0;  // module dimension m
  std::vector<ComplexMatrix> action;  // one m-by-m matrix per algebra basis element
};

ComplexMatrix action_of(const FiniteAlgebra& alg, const ModuleAction& act,
                        const ComplexVector& a);

struct ModuleViolation {
  std::string law;  // "unit action", "compatibility"
  int i = 0, j = 0;
  double magnitude = 0.0;
};

std::optional<ModuleViolation> verify_module_action(const FiniteAlgebra& alg,
                                                    const ModuleAction& act,
                                                    double tol = 1e-12);

enum class MembershipTag { AllCoordinatesNonzero, UserList };

struct GeneratingSet {
  std::vector<ComplexVector> elements;  // declared samples of S, nonempty
  MembershipTag tag = MembershipTag::UserList;
};

struct CharacterReport {
  ComplexVector chi;  // values on the algebra basis
  double max_s_deviation = 0.0;       // independence of the base point s
  double multiplicativity_defect = 0.0;
  double eq11_defect = 0.0;           // Lambda(a m) vs chi(a) Lambda(m) on basis pairs
  bool verdict = false;
};

// chi(e_i) = Lambda(action(e_i) s)/Lambda(s) for the first s, with the
// deviation over all declared s reported. Lambda is the plain dot product
// lambda . m (no conjugation). Throws VanishingOnSetError when some
// Lambda(s) vanishes.
CharacterReport extract_character(const FiniteAlgebra& alg, const ModuleAction& act,
                                  const GeneratingSet& s, const ComplexVector& lambda,
                                  double tol = kDefaultTol);

struct ScalarGkzReport {
  bool ok = false;
  std::string note;  // always labels the result as a finite sample check
  int samples_tested = 0;
  double multiplicativity_defect = 0.0;
  std::optional<ComplexVector> vanishing_invertible;  // invertible a with Lambda(a) ~ 0
  std::optional<std::pair<ComplexVector, ComplexVector>> nonmultiplicative_pair;
};

// One-sided numerical check of the scalar GKZ hypothesis/conclusion:
// Lambda(unit) = 1 required; invertibility decided by the condition number
// of the left-regular representation (threshold 1e8).
ScalarGkzReport scalar_gkz_check(const FiniteAlgebra& alg, const ComplexVector& lambda,
                                 int trials, unsigned long long seed,
                                 double tol = kDefaultTol);

struct SetAxiomReport {
  bool s2_ok = false;
  bool s3_ok = false;
  std::string note;  // "sampled check only" plus any tag caveat
  std::optional<int> s2_violation_index;
  std::optional<std::pair<int, int>> s3_failure_pair;
};

// Sampled (S2)/(S3) checks on the declared elements: invertible samples must
// keep declared elements inside the membership predicate, and each pair
// (s1, s2) needs a1 s1 = a2 s2 with a_j s_j still in S. Never claims more
// than the sample shows.
SetAxiomReport sample_set_axioms(const FiniteAlgebra& alg, const ModuleAction& act,
                                 const GeneratingSet& s, int trials,
                                 unsigned long long seed, double tol = kDefaultTol);

}  // namespace hardygkz
