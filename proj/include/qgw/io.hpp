#pragma once
#include <json.hpp>
#include <string>

#include "qgw/coideal.hpp"
#include "qgw/groups.hpp"
#include "qgw/hopf.hpp"
#include "qgw/twist.hpp"

namespace qgw {

using Json = nlohmann::ordered_json;

// {order, coeffs: [[num, den], ...]}; integers beyond 64 bits become strings.
Json cyc_to_json(const CycNum& c);
CycNum cyc_from_json(const Json& j);

// qgw-1 document.  Throws ParseError on malformed input.
Json hopf_to_json(const HopfAlgebraData& h);
HopfPtr hopf_from_json(const Json& j);

// Companion sections.
Json group_to_json(const FiniteGroup& g);
Json cocycle_to_json(const Cocycle& c);
Json coideal_to_json(const CoidealSubalgebra& c);

std::string dump_qgw1(const Json& doc);
Json parse_qgw1(const std::string& text);

} // namespace qgw
