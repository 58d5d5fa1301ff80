#include "hardygkz/module_gkz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hardygkz/errors.hpp"

namespace hardygkz {

namespace {

using Cplx = std::complex<double>;

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

double linf(const ComplexVector& v) {
  double m = 0.0;
  for (long i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
  return m;
}

Cplx lam_apply(const ComplexVector& lambda, const ComplexVector& v) {
  Cplx acc(0.0);
  for (long i = 0; i < v.size(); ++i) acc += lambda(i) * v(i);
  return acc;
}

void validate_algebra_shape(const FiniteAlgebra& alg) {
  if (alg.dim < 1) throw std::invalid_argument("algebra dimension must be positive");
  const size_t n = static_cast<size_t>(alg.dim);
  if (alg.structure.size() != n * n * n)
    throw std::invalid_argument("structure tensor size must be dim^3");
  if (alg.unit.size() != alg.dim)
    throw std::invalid_argument("unit vector size must match the algebra dimension");
}

void validate_module_shape(const FiniteAlgebra& alg, const ModuleAction& act) {
  if (act.dim < 1) throw std::invalid_argument("module dimension must be positive");
  if (static_cast<int>(act.action.size()) != alg.dim)
    throw std::invalid_argument("one action matrix per algebra basis element is required");
  for (const ComplexMatrix& m : act.action)
    if (m.rows() != act.dim || m.cols() != act.dim)
      throw std::invalid_argument("action matrices must be square of the module dimension");
}

bool left_regular_invertible(const FiniteAlgebra& alg, const ComplexVector& a) {
  const Eigen::JacobiSVD<ComplexMatrix> svd(left_regular(alg, a));
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(alg.dim - 1);
  return smin > 0.0 && smax / smin < 1e8;
}

ComplexVector random_vector(std::mt19937_64& rng, int dim) {
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = 2.0 * uniform01(rng) - 1.0;
    const double im = 2.0 * uniform01(rng) - 1.0;
    v(i) = Cplx(re, im);
  }
  return v;
}

}  // namespace

ComplexVector algebra_product(const FiniteAlgebra& alg, const ComplexVector& a,
                              const ComplexVector& b) {
  validate_algebra_shape(alg);
  if (a.size() != alg.dim || b.size() != alg.dim)
    throw std::invalid_argument("algebra elements must match the algebra dimension");
  ComplexVector out = ComplexVector::Zero(alg.dim);
  for (int k = 0; k < alg.dim; ++k) {
    Cplx acc(0.0);
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j) acc += a(i) * b(j) * alg.structure_at(i, j, k);
    out(k) = acc;
  }
  return out;
}

ComplexMatrix left_regular(const FiniteAlgebra& alg, const ComplexVector& a) {
  validate_algebra_shape(alg);
  if (a.size() != alg.dim)
    throw std::invalid_argument("algebra elements must match the algebra dimension");
  ComplexMatrix l = ComplexMatrix::Zero(alg.dim, alg.dim);
  for (int k = 0; k < alg.dim; ++k)
    for (int j = 0; j < alg.dim; ++j) {
      Cplx acc(0.0);
      for (int i = 0; i < alg.dim; ++i) acc += a(i) * alg.structure_at(i, j, k);
      l(k, j) = acc;
    }
  return l;
}

std::optional<AlgebraViolation> verify_algebra(const FiniteAlgebra& alg, double tol) {
  validate_algebra_shape(alg);
  const int n = alg.dim;
  for (int j = 0; j < n; ++j) {
    const ComplexVector ej = ComplexVector::Unit(n, j);
    const ComplexVector le = algebra_product(alg, alg.unit, ej);
    const ComplexVector re = algebra_product(alg, ej, alg.unit);
    for (int k = 0; k < n; ++k) {
      const double dl = std::abs(le(k) - ej(k));
      if (dl > tol) return AlgebraViolation{"left unit", j, k, k, dl};
      const double dr = std::abs(re(k) - ej(k));
      if (dr > tol) return AlgebraViolation{"right unit", j, k, k, dr};
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const ComplexVector ei = ComplexVector::Unit(n, i);
        const ComplexVector ej = ComplexVector::Unit(n, j);
        const ComplexVector ek = ComplexVector::Unit(n, k);
        const ComplexVector lhs = algebra_product(alg, algebra_product(alg, ei, ej), ek);
        const ComplexVector rhs = algebra_product(alg, ei, algebra_product(alg, ej, ek));
        const double dev = linf(lhs - rhs);
        if (dev > tol) return AlgebraViolation{"associativity", i, j, k, dev};
      }
  return std::nullopt;
}

ComplexMatrix action_of(const FiniteAlgebra& alg, const ModuleAction& act,
                        const ComplexVector& a) {
  validate_algebra_shape(alg);
  validate_module_shape(alg, act);
  if (a.size() != alg.dim)
    throw std::invalid_argument("algebra elements must match the algebra dimension");
  ComplexMatrix m = ComplexMatrix::Zero(act.dim, act.dim);
  for (int i = 0; i < alg.dim; ++i) m += a(i) * act.action[static_cast<size_t>(i)];
  return m;
}

std::optional<ModuleViolation> verify_module_action(const FiniteAlgebra& alg,
                                                    const ModuleAction& act, double tol) {
  validate_algebra_shape(alg);
  validate_module_shape(alg, act);
  const ComplexMatrix uact = action_of(alg, act, alg.unit);
  const double udev =
      (uact - ComplexMatrix::Identity(act.dim, act.dim)).cwiseAbs().maxCoeff();
  if (udev > tol) return ModuleViolation{"unit action", 0, 0, udev};
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      const ComplexVector p = algebra_product(alg, ComplexVector::Unit(alg.dim, i),
                                              ComplexVector::Unit(alg.dim, j));
      ComplexMatrix lhs = ComplexMatrix::Zero(act.dim, act.dim);
      for (int k = 0; k < alg.dim; ++k) lhs += p(k) * act.action[static_cast<size_t>(k)];
      const ComplexMatrix rhs =
          act.action[static_cast<size_t>(i)] * act.action[static_cast<size_t>(j)];
      const double dev = (lhs - rhs).cwiseAbs().maxCoeff();
      if (dev > tol) return ModuleViolation{"compatibility", i, j, dev};
    }
  return std::nullopt;
}

CharacterReport extract_character(const FiniteAlgebra& alg, const ModuleAction& act,
                                  const GeneratingSet& s, const ComplexVector& lambda,
                                  double tol) {
  validate_algebra_shape(alg);
  validate_module_shape(alg, act);
  if (s.elements.empty()) throw std::invalid_argument("generating set must be nonempty");
  if (lambda.size() != act.dim)
    throw std::invalid_argument("functional size must match the module dimension");

  const double lscale = std::max(1.0, linf(lambda));
  std::vector<Cplx> denom(s.elements.size());
  for (size_t idx = 0; idx < s.elements.size(); ++idx) {
    const ComplexVector& sv = s.elements[idx];
    if (sv.size() != act.dim)
      throw std::invalid_argument("generating set elements must match the module dimension");
    denom[idx] = lam_apply(lambda, sv);
    if (std::abs(denom[idx]) <= 1e-12 * lscale * std::max(1.0, linf(sv))) {
      std::ostringstream msg;
      msg << "functional vanishes on generating element " << idx
          << "; the character ratio is undefined there";
      throw VanishingOnSetError(msg.str(), static_cast<int>(idx));
    }
  }

  const int n = alg.dim;
  std::vector<ComplexVector> chis(s.elements.size());
  for (size_t idx = 0; idx < s.elements.size(); ++idx) {
    ComplexVector chi(n);
    for (int i = 0; i < n; ++i)
      chi(i) = lam_apply(lambda, act.action[static_cast<size_t>(i)] * s.elements[idx]) /
               denom[idx];
    chis[idx] = chi;
  }

  CharacterReport rep;
  rep.chi = chis[0];
  rep.max_s_deviation = 0.0;
  for (size_t idx = 1; idx < chis.size(); ++idx)
    rep.max_s_deviation = std::max(rep.max_s_deviation, linf(chis[idx] - chis[0]));

  rep.multiplicativity_defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cplx prod(0.0);
      for (int k = 0; k < n; ++k) prod += alg.structure_at(i, j, k) * rep.chi(k);
      rep.multiplicativity_defect =
          std::max(rep.multiplicativity_defect, std::abs(prod - rep.chi(i) * rep.chi(j)));
    }

  rep.eq11_defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < act.dim; ++j) {
      const Cplx lhs =
          lam_apply(lambda, act.action[static_cast<size_t>(i)].col(j));
      rep.eq11_defect = std::max(rep.eq11_defect, std::abs(lhs - rep.chi(i) * lambda(j)));
    }

  rep.verdict = rep.max_s_deviation <= tol && rep.multiplicativity_defect <= tol &&
                rep.eq11_defect <= tol;
  return rep;
}

ScalarGkzReport scalar_gkz_check(const FiniteAlgebra& alg, const ComplexVector& lambda,
                                 int trials, unsigned long long seed, double tol) {
  validate_algebra_shape(alg);
  if (lambda.size() != alg.dim)
    throw std::invalid_argument("functional size must match the algebra dimension");
  if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  const double lscale = std::max(1.0, linf(lambda));
  const Cplx lunit = lam_apply(lambda, alg.unit);
  if (std::abs(lunit - Cplx(1.0)) > 1e-12 * lscale) {
    std::ostringstream msg;
    msg << "functional is not normalized: Lambda(1) = (" << lunit.real() << ", "
        << lunit.imag() << ")";
    throw HypothesisViolation(msg.str());
  }

  const int n = alg.dim;
  std::vector<ComplexVector> samples;
  for (int i = 0; i < n; ++i) samples.push_back(ComplexVector::Unit(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      samples.push_back(ComplexVector::Unit(n, i) - ComplexVector::Unit(n, j));
      samples.push_back(ComplexVector::Unit(n, i) + ComplexVector::Unit(n, j));
    }
  samples.push_back(alg.unit);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) samples.push_back(random_vector(rng, n));

  ScalarGkzReport rep;
  rep.samples_tested = 0;
  for (const ComplexVector& a : samples) {
    ++rep.samples_tested;
    if (!left_regular_invertible(alg, a)) continue;
    const double scale = lscale * std::max(1.0, linf(a));
    if (std::abs(lam_apply(lambda, a)) <= 1e-12 * scale) {
      rep.ok = false;
      rep.vanishing_invertible = a;
      rep.note =
          "functional vanishes on an invertible element; it cannot satisfy the "
          "character hypothesis";
      return rep;
    }
  }

  // both sides of Lambda(ab) = Lambda(a) Lambda(b) are bilinear, so basis
  // pairs decide multiplicativity exactly
  rep.multiplicativity_defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ComplexVector ei = ComplexVector::Unit(n, i);
      const ComplexVector ej = ComplexVector::Unit(n, j);
      const Cplx lhs = lam_apply(lambda, algebra_product(alg, ei, ej));
      const Cplx rhs = lam_apply(lambda, ei) * lam_apply(lambda, ej);
      const double dev = std::abs(lhs - rhs);
      rep.multiplicativity_defect = std::max(rep.multiplicativity_defect, dev);
      if (dev > tol && !rep.nonmultiplicative_pair)
        rep.nonmultiplicative_pair = std::make_pair(ei, ej);
    }
  if (rep.nonmultiplicative_pair) {
    rep.ok = false;
    rep.note = "functional is nonvanishing on sampled invertibles but not multiplicative";
    return rep;
  }
  rep.ok = true;
  rep.note =
      "consistent with the character hypothesis at this sample size; a finite "
      "sample cannot prove it";
  return rep;
}

SetAxiomReport sample_set_axioms(const FiniteAlgebra& alg, const ModuleAction& act,
                                 const GeneratingSet& s, int trials,
                                 unsigned long long seed, double tol) {
  validate_algebra_shape(alg);
  validate_module_shape(alg, act);
  if (s.elements.empty()) throw std::invalid_argument("generating set must be nonempty");
  if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");
  for (const ComplexVector& sv : s.elements)
    if (sv.size() != act.dim)
      throw std::invalid_argument("generating set elements must match the module dimension");
  (void)tol;

  const auto member = [&s](const ComplexVector& v) {
    if (s.tag == MembershipTag::AllCoordinatesNonzero) {
      const double scale = std::max(1.0, linf(v));
      if (linf(v) == 0.0) return false;
      for (long i = 0; i < v.size(); ++i)
        if (std::abs(v(i)) <= 1e-9 * scale) return false;
      return true;
    }
    for (const ComplexVector& e : s.elements)
      if (linf(v - e) <= 1e-9 * std::max(1.0, linf(e))) return true;
    return false;
  };

  SetAxiomReport rep;
  rep.s2_ok = true;
  rep.s3_ok = true;
  rep.note =
      "sampled check only: the set axioms are verified on the declared elements "
      "and finitely many algebra samples";

  // (S2): a s stays in S for invertible a
  std::vector<ComplexVector> invertibles;
  invertibles.push_back(alg.unit);
  if (s.tag == MembershipTag::AllCoordinatesNonzero) {
    std::mt19937_64 rng(seed);
    int found = 0, attempts = 0;
    while (found < trials && attempts < 100 * (trials + 1)) {
      ++attempts;
      const ComplexVector a = random_vector(rng, alg.dim);
      if (!left_regular_invertible(alg, a)) continue;
      invertibles.push_back(a);
      ++found;
    }
  } else {
    rep.note += "; under a user-list tag only the unit action is membership-checkable";
  }
  for (const ComplexVector& a : invertibles) {
    const ComplexMatrix m = action_of(alg, act, a);
    for (size_t idx = 0; idx < s.elements.size() && rep.s2_ok; ++idx) {
      if (!member(m * s.elements[idx])) {
        rep.s2_ok = false;
        rep.s2_violation_index = static_cast<int>(idx);
      }
    }
    if (!rep.s2_ok) break;
  }

  // (S3): each pair admits a_1 s_1 = a_2 s_2 with both products in S
  const int n = alg.dim;
  const int m = act.dim;
  for (size_t p = 0; p < s.elements.size() && rep.s3_ok; ++p)
    for (size_t q = p + 1; q < s.elements.size() && rep.s3_ok; ++q) {
      ComplexMatrix m1(m, n), m2(m, n);
      for (int i = 0; i < n; ++i) {
        m1.col(i) = act.action[static_cast<size_t>(i)] * s.elements[p];
        m2.col(i) = act.action[static_cast<size_t>(i)] * s.elements[q];
      }
      std::vector<std::pair<ComplexVector, ComplexVector>> candidates;
      {
        const ComplexVector v2 = m2 * alg.unit;
        const Eigen::JacobiSVD<ComplexMatrix> svd(
            m1, Eigen::ComputeThinU | Eigen::ComputeThinV);
        candidates.emplace_back(svd.solve(v2), alg.unit);
      }
      {
        const ComplexVector v1 = m1 * alg.unit;
        const Eigen::JacobiSVD<ComplexMatrix> svd(
            m2, Eigen::ComputeThinU | Eigen::ComputeThinV);
        candidates.emplace_back(alg.unit, svd.solve(v1));
      }
      {
        ComplexMatrix k(m, 2 * n);
        k.leftCols(n) = m1;
        k.rightCols(n) = -m2;
        const Eigen::FullPivLU<ComplexMatrix> lu(k);
        const ComplexMatrix ker = lu.kernel();
        for (long col = 0; col < ker.cols(); ++col)
          candidates.emplace_back(ker.col(col).head(n), ker.col(col).tail(n));
        if (ker.cols() > 1) {
          const ComplexVector sum = ker.rowwise().sum();
          candidates.emplace_back(sum.head(n), sum.tail(n));
        }
      }

      bool found = false;
      const double sscale = std::max({1.0, linf(s.elements[p]), linf(s.elements[q])});
      for (const auto& [a1, a2] : candidates) {
        const ComplexVector v1 = m1 * a1;
        const ComplexVector v2 = m2 * a2;
        const double vscale =
            sscale * std::max({1.0, linf(a1), linf(a2)});
        if (linf(v1) <= 1e-9 * vscale) continue;
        if (linf(v1 - v2) > 1e-9 * vscale) continue;
        if (!member(v1) || !member(v2)) continue;
        if (s.tag == MembershipTag::AllCoordinatesNonzero) {
          bool stable = true;
          for (const ComplexVector& sv : s.elements) {
            if (!member(action_of(alg, act, a1) * sv) ||
                !member(action_of(alg, act, a2) * sv)) {
              stable = false;
              break;
            }
          }
          if (!stable) continue;
        }
        found = true;
        break;
      }
      if (!found) {
        rep.s3_ok = false;
        rep.s3_failure_pair = std::make_pair(static_cast<int>(p), static_cast<int>(q));
      }
    }
  if (s.tag == MembershipTag::UserList)
    rep.note += "; the a S within S side condition is not certifiable from a finite list";
  return rep;
}

}  // namespace hardygkz
