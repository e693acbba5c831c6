#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "dcx/bicomplex.hpp"
#include "dcx/geometry.hpp"
#include "dcx/zigzags.hpp"

namespace dcx {

using Json = nlohmann::ordered_json;

/// {"field": "Q", "components": [{"p","q","dim"}], "d1": [{"p","q","matrix": [["1/2", ...]]}], "d2": [...]}.
/// Components and maps are written in (p,q) order; zero maps are omitted.
Json complex_to_json(const DoubleComplex& a);
/// Shape-checks every matrix (DimensionMismatch) but does not validate the identities.
DoubleComplex complex_from_json(const Json& doc);

/// {"multiplicities": [{"shape": "S_1^{0,0}", "count": 1}]}.
Json multiplicities_to_json(const MultiplicityVector& m);
MultiplicityVector multiplicities_from_json(const Json& doc);

/// {"dim": 6, "brackets": [[i, j, k, "c"]], "J": [[...]]}, with 1-based indices and
/// [e_i, e_j] ∋ c e_k; J rows given as scalar strings or integers.
LieData lie_data_from_json(const Json& doc);
Json lie_data_to_json(const LieData& data);

/// {"hodge": [{"p","q","h"}]}.
std::map<Bidegree, int> hodge_table_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace dcx
