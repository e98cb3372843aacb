#pragma once

#include <string>

#include <json.hpp>

#include "hermult/multiindex.hpp"
#include "hermult/polyoracle.hpp"
#include "hermult/tensor.hpp"

namespace hermult {

using Json = nlohmann::json;

/// %.17g, with ".0" appended when the result would otherwise read as an integer.
std::string format_double(double v);

/// Compact JSON with every floating-point number printed by format_double.
std::string dump_json(const Json& value);

Json to_json(const MultiIndex& k);
MultiIndex multiindex_from_json(const Json& j);

Json to_json(const Vector<double>& v);
Json to_json(const RationalVector& v);
Json to_json(const Matrix<double>& m);
Json to_json(const RationalMatrix& m);

Vector<double> vector_from_json(const Json& j);
/// Accepts integers, "p/q" strings and decimal strings exactly; JSON
/// floating-point numbers are converted exactly from their binary value.
RationalVector rational_vector_from_json(const Json& j);
Matrix<double> matrix_from_json(const Json& j);
RationalMatrix rational_matrix_from_json(const Json& j);
BigRational rational_from_json(const Json& j);

/// [{"mono":[...],"coeff":"p/q"}, ...] in canonical monomial order.
Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j, std::size_t arity);

}  // namespace hermult
