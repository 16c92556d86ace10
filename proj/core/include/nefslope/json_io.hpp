#pragma once

#include "nefslope/generators.hpp"
#include "nefslope/numdata.hpp"
#include "nefslope/polyroot.hpp"
#include "nefslope/simplicity.hpp"
#include "nefslope/slope.hpp"

#include <nlohmann/json.hpp>

namespace nefslope {

using Json = nlohmann::ordered_json;

/// Integers and rationals are written as decimal strings; on input both
/// strings and JSON numbers are accepted. Malformed documents raise InputError.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

Json to_json(const IntersectionProfile& p);
IntersectionProfile profile_from_json(const Json& j);

Json to_json(const SymMatrixModel& m);
SymMatrixModel matrix_from_json(const Json& j);

/// True when j looks like a matrix model (has "F").
bool is_matrix_json(const Json& j);

/// Profile from either form; matrix inputs go through profile_from_matrix.
IntersectionProfile any_profile_from_json(const Json& j);

Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json to_json(const AlgebraicNumber& a);

Json to_json(const NefReport& r);
Json to_json(const Rationality& r);
Json to_json(const SlopeResult& r);
Json to_json(const ValidationReport& r);
Json to_json(const KernelWitness& k);
Json to_json(const SimplicityScan& s);
Json to_json(const Instance& i);

std::vector<ScanInstance> scan_instances_from_json(const Json& j);

/// Parses text, reporting the byte offset of syntax errors.
Json parse_json(std::string_view text);

}  // namespace nefslope
