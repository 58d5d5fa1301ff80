#include "hardygkz/serialize.hpp"

#include <stdexcept>

namespace hardygkz {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex values must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json complex_vector_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(complex_from_json(e));
  return out;
}

void to_json(Json& j, const DiskFunction& f) {
  j = Json{{"taylor", complex_vector_to_json(f.taylor)}};
}

void from_json(const Json& j, DiskFunction& f) {
  f.taylor = complex_vector_from_json(j.at("taylor"));
}

void to_json(Json& j, const BoundaryFunction& b) {
  j = Json{{"n", b.n()}, {"samples", complex_vector_to_json(b.samples)}};
}

void from_json(const Json& j, BoundaryFunction& b) {
  b.samples = complex_vector_from_json(j.at("samples"));
  if (j.at("n").get<long long>() != static_cast<long long>(b.samples.size()))
    throw std::invalid_argument("boundary sample count does not match n");
}

void to_json(Json& j, const BlaschkeProduct& b) {
  j = Json{{"zeros", complex_vector_to_json(b.zeros)}, {"front", complex_to_json(b.front)}};
}

void from_json(const Json& j, BlaschkeProduct& b) {
  b.zeros = complex_vector_from_json(j.at("zeros"));
  b.front = j.contains("front") ? complex_from_json(j.at("front")) : Complex(1.0);
}

void to_json(Json& j, const SingularAtom& s) {
  j = Json{{"lambda", complex_to_json(s.atom)}, {"mass", s.mass}};
}

void from_json(const Json& j, SingularAtom& s) {
  s.atom = complex_from_json(j.at("lambda"));
  s.mass = j.at("mass").get<double>();
}

void to_json(Json& j, const OuternessReport& r) {
  j = Json{{"defect", r.defect}, {"order", r.zero_order_at_origin}, {"verdict", r.verdict}};
}

void from_json(const Json& j, OuternessReport& r) {
  r.defect = j.at("defect").get<double>();
  r.zero_order_at_origin = j.at("order").get<int>();
  r.verdict = j.at("verdict").get<bool>();
}

void to_json(Json& j, const MobiusMap& m) {
  j = Json{{"w", complex_to_json(m.w)}, {"c", complex_to_json(m.c)}};
}

void from_json(const Json& j, MobiusMap& m) {
  m.w = complex_from_json(j.at("w"));
  m.c = j.contains("c") ? complex_from_json(j.at("c")) : Complex(1.0);
}

void to_json(Json& j, const CoefficientFunctional& f) {
  j = Json{{"lambda", complex_vector_to_json(f.lambda)}};
}

void from_json(const Json& j, CoefficientFunctional& f) {
  f.lambda = complex_vector_from_json(j.at("lambda"));
}

void to_json(Json& j, const RecoveryReport& r) {
  j = Json{{"c", complex_to_json(r.c)},
           {"w", complex_to_json(r.w)},
           {"residual", r.residual},
           {"verdict", r.verdict}};
}

void to_json(Json& j, const WcoReport& r) {
  j = Json{{"psi", r.psi},
           {"phi", r.phi},
           {"residual", r.residual},
           {"selfmap_margin", r.selfmap_margin},
           {"min_weight_modulus", r.min_weight_modulus}};
}

void to_json(Json& j, const NonvanishingWitness& w) {
  j = Json{{"family_index", w.family_index},
           {"g", w.g},
           {"z0", complex_to_json(w.z0)},
           {"value", complex_to_json(w.value)}};
}

void to_json(Json& j, const FunctionalWitness& w) {
  j = Json{{"family_index", w.family_index}, {"g", w.g}, {"value", complex_to_json(w.value)}};
}

void to_json(Json& j, const ForelliCertificate& c) {
  j = Json{{"map", c.map},
           {"c", complex_to_json(c.c)},
           {"mobius_fit_residual", c.mobius_fit_residual},
           {"rebuild_residual", c.rebuild_residual},
           {"isometry_deviation", c.isometry_deviation}};
}

void to_json(Json& j, const CounterexampleReport& r) {
  j = Json{{"witness", r.witness}, {"isometry_deviation", r.isometry_deviation}};
}

void to_json(Json& j, const CharacterReport& r) {
  j = Json{{"chi", eigen_vector_to_json(r.chi)},
           {"max_s_deviation", r.max_s_deviation},
           {"multiplicativity_defect", r.multiplicativity_defect},
           {"eq11_defect", r.eq11_defect},
           {"verdict", r.verdict}};
}

void to_json(Json& j, const ScalarGkzReport& r) {
  j = Json{{"ok", r.ok},
           {"note", r.note},
           {"samples_tested", r.samples_tested},
           {"multiplicativity_defect", r.multiplicativity_defect}};
  if (r.vanishing_invertible)
    j["vanishing_invertible"] = eigen_vector_to_json(*r.vanishing_invertible);
  if (r.nonmultiplicative_pair)
    j["nonmultiplicative_pair"] =
        Json::array({eigen_vector_to_json(r.nonmultiplicative_pair->first),
                     eigen_vector_to_json(r.nonmultiplicative_pair->second)});
}

void to_json(Json& j, const SetAxiomReport& r) {
  j = Json{{"s2_ok", r.s2_ok}, {"s3_ok", r.s3_ok}, {"note", r.note}};
  if (r.s2_violation_index) j["s2_violation_index"] = *r.s2_violation_index;
  if (r.s3_failure_pair)
    j["s3_failure_pair"] = Json::array({r.s3_failure_pair->first, r.s3_failure_pair->second});
}

Json operator_matrix_to_json(const OperatorMatrix& t) {
  Json rows = Json::array();
  for (long r = 0; r < t.rows(); ++r) {
    Json row = Json::array();
    for (long c = 0; c < t.cols(); ++c) row.push_back(complex_to_json(t(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OperatorMatrix operator_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  const size_t rows = j.size();
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw std::invalid_argument("matrix rows must be nonempty arrays");
  OperatorMatrix t(static_cast<long>(rows), static_cast<long>(cols));
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw std::invalid_argument("matrix rows must all have the same length");
    for (size_t c = 0; c < cols; ++c) t(static_cast<long>(r), static_cast<long>(c)) =
        complex_from_json(j[r][c]);
  }
  return t;
}

Json algebra_to_json(const FiniteAlgebra& alg) {
  return Json{{"dim", alg.dim},
              {"structure", complex_vector_to_json(alg.structure)},
              {"unit", eigen_vector_to_json(alg.unit)}};
}

FiniteAlgebra algebra_from_json(const Json& j) {
  FiniteAlgebra alg;
  alg.dim = j.at("dim").get<int>();
  alg.structure = complex_vector_from_json(j.at("structure"));
  alg.unit = eigen_vector_from_json(j.at("unit"));
  if (alg.dim < 1 || alg.structure.size() != static_cast<size_t>(alg.dim) * alg.dim * alg.dim ||
      alg.unit.size() != alg.dim)
    throw std::invalid_argument("algebra fields are inconsistent with dim");
  return alg;
}

Json module_action_to_json(const ModuleAction& act) {
  Json mats = Json::array();
  for (const ComplexMatrix& m : act.action) mats.push_back(operator_matrix_to_json(m));
  return Json{{"dim", act.dim}, {"action", std::move(mats)}};
}

ModuleAction module_action_from_json(const Json& j) {
  ModuleAction act;
  act.dim = j.at("dim").get<int>();
  if (act.dim < 1) throw std::invalid_argument("module dimension must be positive");
  for (const Json& e : j.at("action")) {
    const OperatorMatrix m = operator_matrix_from_json(e);
    if (m.rows() != act.dim || m.cols() != act.dim)
      throw std::invalid_argument("action matrices must be square of the module dimension");
    act.action.push_back(m);
  }
  return act;
}

Json generating_set_to_json(const GeneratingSet& s) {
  Json elems = Json::array();
  for (const ComplexVector& v : s.elements) elems.push_back(eigen_vector_to_json(v));
  return Json{{"elements", std::move(elems)},
              {"tag", s.tag == MembershipTag::AllCoordinatesNonzero ? "all-coordinates-nonzero"
                                                                    : "user-list"}};
}

GeneratingSet generating_set_from_json(const Json& j) {
  GeneratingSet s;
  for (const Json& e : j.at("elements")) s.elements.push_back(eigen_vector_from_json(e));
  const std::string tag = j.value("tag", std::string("user-list"));
  if (tag == "all-coordinates-nonzero")
    s.tag = MembershipTag::AllCoordinatesNonzero;
  else if (tag == "user-list")
    s.tag = MembershipTag::UserList;
  else
    throw std::invalid_argument("unknown membership tag: " + tag);
  return s;
}

ComplexVector eigen_vector_from_json(const Json& j) {
  const std::vector<Complex> v = complex_vector_from_json(j);
  ComplexVector out(static_cast<long>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<long>(i)) = v[i];
  return out;
}

Json eigen_vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

}  // namespace hardygkz
