#pragma once

#include <nlohmann/json.hpp>

#include "hardygkz/disk_function.hpp"
#include "hardygkz/factorization.hpp"
#include "hardygkz/gkz_engine.hpp"
#include "hardygkz/mobius.hpp"
#include "hardygkz/module_gkz.hpp"

// Wire format: every complex number is a [re, im] pair, never a string.
// nlohmann::json orders object keys alphabetically, so serialized reports
// are byte-stable across runs.

namespace hardygkz {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json complex_vector_to_json(const std::vector<Complex>& v);
std::vector<Complex> complex_vector_from_json(const Json& j);

// ADL serializers so Json(x) and j.get<T>() work for the value types.
void to_json(Json& j, const DiskFunction& f);       // {"taylor": [...]}
void from_json(const Json& j, DiskFunction& f);
void to_json(Json& j, const BoundaryFunction& b);   // {"n": N, "samples": [...]}
void from_json(const Json& j, BoundaryFunction& b);
void to_json(Json& j, const BlaschkeProduct& b);    // {"zeros": [...], "front": [re,im]}
void from_json(const Json& j, BlaschkeProduct& b);
void to_json(Json& j, const SingularAtom& s);       // {"lambda": [re,im], "mass": m}
void from_json(const Json& j, SingularAtom& s);
void to_json(Json& j, const OuternessReport& r);
void from_json(const Json& j, OuternessReport& r);
void to_json(Json& j, const MobiusMap& m);          // {"w": [re,im], "c": [re,im]}
void from_json(const Json& j, MobiusMap& m);
void to_json(Json& j, const CoefficientFunctional& f);  // {"lambda": [...]}
void from_json(const Json& j, CoefficientFunctional& f);
void to_json(Json& j, const RecoveryReport& r);
void to_json(Json& j, const WcoReport& r);
void to_json(Json& j, const NonvanishingWitness& w);
void to_json(Json& j, const FunctionalWitness& w);
void to_json(Json& j, const ForelliCertificate& c);
void to_json(Json& j, const CounterexampleReport& r);
void to_json(Json& j, const CharacterReport& r);
void to_json(Json& j, const ScalarGkzReport& r);
void to_json(Json& j, const SetAxiomReport& r);

// Row-major nested arrays of [re, im].
Json operator_matrix_to_json(const OperatorMatrix& t);
OperatorMatrix operator_matrix_from_json(const Json& j);

Json algebra_to_json(const FiniteAlgebra& alg);     // {"dim", "structure", "unit"}
FiniteAlgebra algebra_from_json(const Json& j);
Json module_action_to_json(const ModuleAction& act);  // {"dim", "action"}
ModuleAction module_action_from_json(const Json& j);
Json generating_set_to_json(const GeneratingSet& s);  // {"elements", "tag"}
GeneratingSet generating_set_from_json(const Json& j);

ComplexVector eigen_vector_from_json(const Json& j);
Json eigen_vector_to_json(const ComplexVector& v);

}  // namespace hardygkz
