#pragma once

#include "listcrit/audits.hpp"
#include "listcrit/bounds.hpp"
#include "listcrit/fractional.hpp"
#include "listcrit/quadruple.hpp"

#include <json.hpp>

namespace listcrit {

// Machine interface: rationals as "num/den" strings, decimals display-only
// (truncated), stable key order throughout.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Json to_json(const Quadruple& q);
Json to_json(const Condition& c);
Json to_json(const ConditionReport& r);
Json to_json(const TreeCheck& c);
Json to_json(const TreeVerification& v);
Json to_json(const BoundResult& b);
Json to_json(const TableRow& row);
Json table_to_json(const std::vector<TableRow>& rows);
Json to_json(const LpSolution& s);
Json to_json(const FractionalSolution& s);
Json to_json(const OptimizeResult& r);
Json to_json(const ATVerdict& v);
Json to_json(const AuditReport& r);
Json to_json(const GraphAuditResult& r);

}  // namespace listcrit
