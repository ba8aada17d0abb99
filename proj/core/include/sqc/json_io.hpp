#pragma once

#include <string>

#include <json.hpp>

#include "sqc/algebra.hpp"
#include "sqc/classify.hpp"
#include "sqc/grading.hpp"
#include "sqc/group.hpp"
#include "sqc/maps.hpp"
#include "sqc/matrix.hpp"
#include "sqc/scalar.hpp"

namespace sqc {

/// Order-preserving JSON document type used for all serialization, so output
/// key order is deterministic.
using Json = nlohmann::ordered_json;

/// Parses text into a document; malformed input raises parse_error.
Json parse_document(const std::string& text);

// Scalar: array of 4 strings "p/q" in lowest terms, coefficients of the
// powers z^0..z^3.
Json scalar_to_json(const Scalar& a);
Scalar scalar_from_json(const Json& j);

// Matrix: {"rows": n, "cols": m, "entries": [Scalar,...]} row-major.
// LinEndo uses the same format.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// KElem: [left, right].
Json kelem_to_json(const KElem& k);
KElem kelem_from_json(const Json& j);

// AlgElem: {"k0": KElem, "k1": KElem, "k2": KElem, "k3": KElem}.
Json alg_elem_to_json(const AlgElem& a);
AlgElem alg_elem_from_json(const Json& j);

// AutFactors: {"r1": KElem, "r2": KElem, "psi": "id"|"neg_s",
//              "sigma": [images of 1, 2, 3]}.
Json aut_factors_to_json(const AutFactors& f);
AutFactors aut_factors_from_json(const Json& j);

// AbGroup: {"free": r, "torsion": [m,...]}; GroupElem: [ints].
Json group_to_json(const AbGroup& g);
AbGroup group_from_json(const Json& j);
Json group_elem_to_json(const GroupElem& e);
GroupElem group_elem_from_json(const Json& j);

// Grading: {"group": AbGroup, "components": [{"degree": GroupElem,
//           "basis": [AlgElem,...]},...]}.
Json grading_to_json(const Grading& g);
Grading grading_from_json(const Json& j);

// FamilyParams: a list holding the scalar parameters (as Scalar documents)
// followed by the group-element parameters, in constructor order.
Json family_params_to_json(const FamilyParams& p);

// Classification: {"family": tag, "params": [...], "witness": AutFactors,
//                  "support": [GroupElem,...]}.
Json classification_to_json(const Classification& c);

} // namespace sqc
