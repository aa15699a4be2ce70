#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wittorders/crossed.hpp"
#include "wittorders/lifting.hpp"

namespace wittorders::io {

using Json = nlohmann::json;

// Every parse function throws InvalidInput (with a JSON-pointer-like path in
// the message) when a document does not match its schema.

Json ring_to_json(const CoefficientRing& ring);
CoefficientRing ring_from_json(const Json& j);

// Scalars are arrays of n Witt components, each an array of deg integers
// modulo p. A bare integer is accepted on input as the image of that integer.
Json scalar_to_json(const CoefficientRing& ring, const Scalar& s);
Scalar scalar_from_json(const CoefficientRing& ring, const Json& j);

Json vector_to_json(const CoefficientRing& ring, const Vector& v);
Vector vector_from_json(const CoefficientRing& ring, const Json& j, std::size_t expected);

Json matrix_to_json(const CoefficientRing& ring, const Matrix& m);
Matrix matrix_from_json(const CoefficientRing& ring, const Json& j, std::size_t rows,
                        std::size_t cols);

Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const Json& j, const Guards& guards = {});

Json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const Json& j, const Guards& guards = {});

Json parameter_set_to_json(const ParameterSet& p);
ParameterSet parameter_set_from_json(const Json& j, const Guards& guards = {});

Json map_check_to_json(const MapCheck& c);
Json parameter_check_to_json(const ParameterCheck& c);
Json unit_search_to_json(const CoefficientRing& ring, const UnitSearch& s);
Json lift_trace_to_json(const LiftTrace& t);
Json witt_table_to_json(const WittPolynomialTable& t);
Json enumeration_to_json(const EnumerationReport& r);

Json parse(const std::string& text);

}  // namespace wittorders::io
