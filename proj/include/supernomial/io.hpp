#pragma once

#include "supernomial/bijection.hpp"
#include "supernomial/partition.hpp"
#include "supernomial/qpoly.hpp"
#include "supernomial/ribbon.hpp"
#include "supernomial/rigged.hpp"
#include "supernomial/tableau.hpp"

#include <json.hpp>

#include <string>

namespace supernomial::io {

using Json = nlohmann::json;

// All readers throw std::invalid_argument on malformed input.

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Dense ascending coefficients; coefficients beyond 64 bits become strings.
Json to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const Json& j);

Json to_json(const MultiPartition& p);
MultiPartition multipartition_from_json(const Json& j);

// {"shape": [[...],...], "fillings": [[[...],...],...], "n": alphabet}
Json to_json(const MultiTableau& t);
MultiTableau multitableau_from_json(const Json& j);

// {"L": L, "shape": [...], "chain": [[...],...]}; "inner" added when skew.
Json to_json(const RibbonTableau& t);
RibbonTableau ribbon_tableau_from_json(const Json& j);

// {"mode", "lambda", "mu", "n", "nu": [nu(1)..nu(n-1)], "riggings": [a][i]}
Json to_json(const RiggedConfiguration& rc);
RiggedConfiguration rigged_from_json(const Json& j);

Json to_json(const RiggedState& s);
Json to_json(const BijectionTrace& trace);
Json to_json(const DeltaReport& report);

// Parses JSON text, reading from a file when the text starts with '@'.
Json parse_argument(const std::string& text);
// Reads "2,2,1", "[2,2,1]" or "@file".
std::vector<int> parse_int_argument(const std::string& text);

} // namespace supernomial::io
