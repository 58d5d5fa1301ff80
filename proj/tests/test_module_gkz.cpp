#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hardygkz/errors.hpp"
#include "hardygkz/module_gkz.hpp"
#include "test_rng.hpp"

using hardygkz::ComplexMatrix;
using hardygkz::ComplexVector;
using hardygkz::FiniteAlgebra;
using hardygkz::GeneratingSet;
using hardygkz::MembershipTag;
using hardygkz::ModuleAction;

using Cplx = std::complex<double>;

namespace {

// C^n with the coordinatewise product: e_i e_j = delta_ij e_i.
FiniteAlgebra diagonal_algebra(int n) {
  FiniteAlgebra alg;
  alg.dim = n;
  alg.structure.assign(static_cast<size_t>(n) * n * n, Cplx(0.0));
  for (int i = 0; i < n; ++i)
    alg.structure[static_cast<size_t>((i * n + i) * n + i)] = Cplx(1.0);
  alg.unit = ComplexVector::Ones(n);
  return alg;
}

// Dual numbers C[x]/(x^2): e_0 = 1, e_1 = x.
FiniteAlgebra dual_numbers() {
  FiniteAlgebra alg;
  alg.dim = 2;
  alg.structure.assign(8, Cplx(0.0));
  alg.structure[0] = Cplx(1.0);  // e0 e0 = e0
  alg.structure[3] = Cplx(1.0);  // e0 e1 = e1
  alg.structure[5] = Cplx(1.0);  // e1 e0 = e1
  alg.unit = ComplexVector::Zero(2);
  alg.unit(0) = Cplx(1.0);
  return alg;
}

ModuleAction regular_module(const FiniteAlgebra& alg) {
  ModuleAction act;
  act.dim = alg.dim;
  for (int i = 0; i < alg.dim; ++i) {
    ComplexVector e = ComplexVector::Zero(alg.dim);
    e(i) = Cplx(1.0);
    act.action.push_back(hardygkz::left_regular(alg, e));
  }
  return act;
}

ComplexVector vec2(Cplx a, Cplx b) {
  ComplexVector v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("algebra_product and left_regular on the diagonal algebra") {
  auto alg = diagonal_algebra(2);
  auto p = hardygkz::algebra_product(alg, vec2(2.0, 3.0), vec2(5.0, Cplx(0.0, 1.0)));
  CHECK(std::abs(p(0) - Cplx(10.0)) < 1e-15);
  CHECK(std::abs(p(1) - Cplx(0.0, 3.0)) < 1e-15);

  ComplexMatrix l = hardygkz::left_regular(alg, vec2(2.0, 3.0));
  CHECK(std::abs(l(0, 0) - Cplx(2.0)) < 1e-15);
  CHECK(std::abs(l(1, 1) - Cplx(3.0)) < 1e-15);
  CHECK(std::abs(l(0, 1)) < 1e-15);
}

TEST_CASE("verify_algebra accepts lawful algebras") {
  FiniteAlgebra c1;
  c1.dim = 1;
  c1.structure = {Cplx(1.0)};
  c1.unit = ComplexVector::Ones(1);
  CHECK_FALSE(hardygkz::verify_algebra(c1).has_value());

  CHECK_FALSE(hardygkz::verify_algebra(diagonal_algebra(2)).has_value());
  CHECK_FALSE(hardygkz::verify_algebra(diagonal_algebra(5)).has_value());
  CHECK_FALSE(hardygkz::verify_algebra(dual_numbers()).has_value());
}

TEST_CASE("verify_algebra locates a broken unit law") {
  auto alg = diagonal_algebra(2);
  alg.structure[0] = Cplx(1.1);
  auto v = hardygkz::verify_algebra(alg);
  REQUIRE(v.has_value());
  CHECK(v->law.find("unit") != std::string::npos);
  CHECK(v->magnitude == doctest::Approx(0.1));
}

TEST_CASE("verify_algebra locates an associativity break") {
  // Unit laws hold; e1 e1 = e2, e1 e2 = e0, e2 e1 = 0 is not associative.
  FiniteAlgebra alg;
  alg.dim = 3;
  alg.structure.assign(27, Cplx(0.0));
  auto at = [&](int i, int j, int k) -> Cplx& {
    return alg.structure[static_cast<size_t>((i * 3 + j) * 3 + k)];
  };
  for (int j = 0; j < 3; ++j) {
    at(0, j, j) = Cplx(1.0);
    at(j, 0, j) = Cplx(1.0);
  }
  at(1, 1, 2) = Cplx(1.0);
  at(1, 2, 0) = Cplx(1.0);
  alg.unit = ComplexVector::Zero(3);
  alg.unit(0) = Cplx(1.0);

  auto v = hardygkz::verify_algebra(alg);
  REQUIRE(v.has_value());
  CHECK(v->law == "associativity");
  CHECK(v->i == 1);
  CHECK(v->j == 1);
  CHECK(v->k == 1);
}

TEST_CASE("verify_module_action accepts the regular module and flags breaks") {
  auto alg = diagonal_algebra(2);
  CHECK_FALSE(hardygkz::verify_module_action(alg, regular_module(alg)).has_value());

  auto bad_unit = regular_module(alg);
  bad_unit.action[0] *= Cplx(1.1);
  auto v1 = hardygkz::verify_module_action(alg, bad_unit);
  REQUIRE(v1.has_value());
  CHECK(v1->law == "unit action");

  // action(unit) = I but action(e1)^2 != action(e1 e1).
  ModuleAction bad_compat;
  bad_compat.dim = 2;
  ComplexMatrix a1 = ComplexMatrix::Zero(2, 2);
  a1(0, 0) = Cplx(0.5);
  a1(1, 1) = Cplx(1.0);
  bad_compat.action.push_back(ComplexMatrix::Identity(2, 2) - a1);
  bad_compat.action.push_back(a1);
  auto v2 = hardygkz::verify_module_action(alg, bad_compat);
  REQUIRE(v2.has_value());
  CHECK(v2->law == "compatibility");
}

TEST_CASE("action_of is linear in the algebra coordinates") {
  auto alg = diagonal_algebra(3);
  auto act = regular_module(alg);
  ComplexVector a(3);
  a << Cplx(1.0, 2.0), Cplx(-0.5), Cplx(0.0, 1.0);
  ComplexMatrix m = hardygkz::action_of(alg, act, a);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(m(i, i) - a(i)) < 1e-15);
}

TEST_CASE("extract_character on the scalar algebra") {
  FiniteAlgebra c1;
  c1.dim = 1;
  c1.structure = {Cplx(1.0)};
  c1.unit = ComplexVector::Ones(1);
  ModuleAction act;
  act.dim = 1;
  act.action.push_back(ComplexMatrix::Identity(1, 1));
  GeneratingSet s;
  s.elements.push_back(ComplexVector::Ones(1));
  s.tag = MembershipTag::UserList;
  auto rep = hardygkz::extract_character(c1, act, s, ComplexVector::Ones(1));
  CHECK(rep.verdict);
  CHECK(std::abs(rep.chi(0) - Cplx(1.0)) < 1e-14);
  CHECK(rep.max_s_deviation < 1e-14);
  CHECK(rep.multiplicativity_defect < 1e-14);
  CHECK(rep.eq11_defect < 1e-14);
}

TEST_CASE("extract_character finds the first-coordinate character") {
  auto alg = diagonal_algebra(2);
  auto act = regular_module(alg);
  GeneratingSet s;
  s.elements = {vec2(1.0, 1.0), vec2(1.0, 2.0), vec2(2.0, 1.0)};
  s.tag = MembershipTag::AllCoordinatesNonzero;
  ComplexVector lam = vec2(1.0, 0.0);
  auto rep = hardygkz::extract_character(alg, act, s, lam);
  CHECK(rep.verdict);
  CHECK(std::abs(rep.chi(0) - Cplx(1.0)) < 1e-13);
  CHECK(std::abs(rep.chi(1)) < 1e-13);
  CHECK(rep.max_s_deviation < 1e-13);
  CHECK(rep.eq11_defect < 1e-13);
}

TEST_CASE("extract_character rejects functionals vanishing on S, naming the element") {
  auto alg = diagonal_algebra(2);
  auto act = regular_module(alg);
  GeneratingSet s;
  s.elements = {vec2(1.0, 1.0), vec2(1.0, -1.0)};
  s.tag = MembershipTag::UserList;
  try {
    hardygkz::extract_character(alg, act, s, vec2(1.0, 1.0));
    FAIL("expected VanishingOnSetError");
  } catch (const hardygkz::VanishingOnSetError& e) {
    CHECK(e.element_index == 1);
    CHECK(std::string(e.what()).find("vanishes") != std::string::npos);
  }
}

TEST_CASE("character is independent of the base point ordering") {
  auto alg = diagonal_algebra(3);
  auto act = regular_module(alg);
  ComplexVector lam = ComplexVector::Zero(3);
  lam(1) = Cplx(2.0, 1.0);

  GeneratingSet s;
  for (int k = 0; k < 8; ++k) {
    ComplexVector v(3);
    v << Cplx(1.0 + k), Cplx(2.0, 0.5 * k), Cplx(-1.0, 1.0 + k);
    s.elements.push_back(v);
  }
  s.tag = MembershipTag::AllCoordinatesNonzero;
  auto rep = hardygkz::extract_character(alg, act, s, lam);
  CHECK(rep.verdict);
  CHECK(rep.max_s_deviation < 1e-12);

  GeneratingSet rotated;
  rotated.tag = s.tag;
  for (size_t k = 0; k < s.elements.size(); ++k)
    rotated.elements.push_back(s.elements[(k + 3) % s.elements.size()]);
  auto rep2 = hardygkz::extract_character(alg, act, rotated, lam);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(rep.chi(i) - rep2.chi(i)) < 1e-12);
}

TEST_CASE("conjugated diagonal instances extract the indicator character") {
  testrng::Rng rng(61);
  for (int inst = 0; inst < 10; ++inst) {
    const int n = 2 + static_cast<int>(testrng::uniform(rng, 0.0, 2.99));
    ComplexMatrix v = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v(i, j) += 0.25 * Cplx(testrng::uniform(rng, -1.0, 1.0),
                                                         testrng::uniform(rng, -1.0, 1.0));
    ComplexMatrix vinv = v.inverse();

    auto alg = diagonal_algebra(n);
    ModuleAction act;
    act.dim = n;
    for (int i = 0; i < n; ++i) {
      ComplexMatrix e = ComplexMatrix::Zero(n, n);
      e(i, i) = Cplx(1.0);
      act.action.push_back(v * e * vinv);
    }
    const int target = static_cast<int>(testrng::uniform(rng, 0.0, n - 0.01));
    const Cplx r(testrng::uniform(rng, 0.5, 2.0), testrng::uniform(rng, -0.5, 0.5));
    ComplexVector lam = vinv.transpose().col(target) * r;

    GeneratingSet s;
    s.tag = MembershipTag::UserList;
    for (int k = 0; k < 8; ++k) {
      ComplexVector u(n);
      for (int i = 0; i < n; ++i)
        u(i) = Cplx(testrng::uniform(rng, 0.5, 1.5), testrng::uniform(rng, -1.0, 1.0));
      s.elements.push_back(v * u);
    }

    auto rep = hardygkz::extract_character(alg, act, s, lam);
    CHECK(rep.verdict);
    CHECK(rep.max_s_deviation < 1e-10);
    CHECK(rep.multiplicativity_defect < 1e-10);
    CHECK(rep.eq11_defect < 1e-10);
    for (int i = 0; i < n; ++i) {
      Cplx want = (i == target) ? Cplx(1.0) : Cplx(0.0);
      CHECK(std::abs(rep.chi(i) - want) < 1e-10);
    }
  }
}

TEST_CASE("scalar_gkz_check accepts characters") {
  FiniteAlgebra c1;
  c1.dim = 1;
  c1.structure = {Cplx(1.0)};
  c1.unit = ComplexVector::Ones(1);
  auto r1 = hardygkz::scalar_gkz_check(c1, ComplexVector::Ones(1), 32, 42);
  CHECK(r1.ok);
  CHECK(r1.note.find("finite sample") != std::string::npos);

  auto alg = diagonal_algebra(2);
  auto r2 = hardygkz::scalar_gkz_check(alg, vec2(1.0, 0.0), 32, 42);
  CHECK(r2.ok);
  CHECK(r2.multiplicativity_defect < 1e-12);
  CHECK(r2.samples_tested > 0);
}

TEST_CASE("scalar_gkz_check finds the invertible zero of the mean functional") {
  auto alg = diagonal_algebra(2);
  auto rep = hardygkz::scalar_gkz_check(alg, vec2(0.5, 0.5), 32, 42);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.vanishing_invertible.has_value());
  const ComplexVector& a = *rep.vanishing_invertible;
  CHECK(std::abs(a(0) * Cplx(0.5) + a(1) * Cplx(0.5)) < 1e-9);
  CHECK(rep.note.find("invertible") != std::string::npos);
}

TEST_CASE("scalar_gkz_check reports a non-multiplicative pair on the dual numbers") {
  // Lambda = 1 + x-coefficient/2 never vanishes on invertibles (those have
  // nonzero constant term away from the measure-zero line), yet fails
  // multiplicativity at (x, x) since Lambda(x^2) = 0 but Lambda(x)^2 = 1/4.
  auto rep = hardygkz::scalar_gkz_check(dual_numbers(), vec2(1.0, 0.5), 64, 42);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.nonmultiplicative_pair.has_value());
  CHECK(rep.multiplicativity_defect == doctest::Approx(0.25));
  CHECK_FALSE(rep.vanishing_invertible.has_value());
}

TEST_CASE("scalar_gkz_check requires normalization") {
  auto alg = diagonal_algebra(2);
  CHECK_THROWS_AS(hardygkz::scalar_gkz_check(alg, vec2(2.0, 0.0), 8, 42),
                  hardygkz::HypothesisViolation);
}

TEST_CASE("sample_set_axioms passes the coordinatewise nonzero set") {
  auto alg = diagonal_algebra(2);
  auto act = regular_module(alg);
  GeneratingSet s;
  s.elements = {vec2(1.0, 1.0), vec2(1.0, 2.0), vec2(2.0, 1.0)};
  s.tag = MembershipTag::AllCoordinatesNonzero;
  auto rep = hardygkz::sample_set_axioms(alg, act, s, 16, 42);
  CHECK(rep.s2_ok);
  CHECK(rep.s3_ok);
  CHECK(rep.note.find("sampled") != std::string::npos);
}

TEST_CASE("sample_set_axioms flags an element outside the membership predicate") {
  auto alg = diagonal_algebra(2);
  auto act = regular_module(alg);
  GeneratingSet s;
  s.elements = {vec2(1.0, 1.0), vec2(1.0, 0.0)};
  s.tag = MembershipTag::AllCoordinatesNonzero;
  auto rep = hardygkz::sample_set_axioms(alg, act, s, 16, 42);
  CHECK_FALSE(rep.s2_ok);
  REQUIRE(rep.s2_violation_index.has_value());
  CHECK(*rep.s2_violation_index == 1);
}

TEST_CASE("sample_set_axioms reports an unpairable couple") {
  auto alg = diagonal_algebra(2);
  auto act = regular_module(alg);
  GeneratingSet s;
  s.elements = {vec2(1.0, 0.0), vec2(0.0, 1.0)};
  s.tag = MembershipTag::UserList;
  auto rep = hardygkz::sample_set_axioms(alg, act, s, 16, 42);
  CHECK_FALSE(rep.s3_ok);
  REQUIRE(rep.s3_failure_pair.has_value());
  CHECK(rep.s3_failure_pair->first == 0);
  CHECK(rep.s3_failure_pair->second == 1);
  CHECK(rep.note.find("user-list") != std::string::npos);
}

TEST_CASE("sample_set_axioms pairs user-list elements through the diagonal action") {
  auto alg = diagonal_algebra(3);
  auto act = regular_module(alg);
  GeneratingSet s;
  ComplexVector v1(3), v2(3);
  v1 << Cplx(1.0), Cplx(2.0), Cplx(0.5, 0.5);
  v2 << Cplx(2.0, -1.0), Cplx(1.0), Cplx(1.0);
  s.elements = {v1, v2};
  s.tag = MembershipTag::UserList;
  auto rep = hardygkz::sample_set_axioms(alg, act, s, 16, 42);
  CHECK(rep.s3_ok);
}
