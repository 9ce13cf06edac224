#pragma once

#include <string>

#include <json.hpp>

#include "bendix/bending.hpp"
#include "bendix/polytope.hpp"
#include "bendix/search.hpp"

namespace bendix {

using Json = nlohmann::json;

// Readers. All throw Error(ParseError / UnknownEdge / ...) on bad input.

/// {"edges":[{"id":"e1","length":"3/2"}, ...]}; lengths may be JSON integers.
LengthFunction length_function_from_json(const Json& doc);
/// ["e4","e5"]
EdgeSubset edge_subset_from_json(const Json& doc, const LengthFunction& lengths);
/// {"members":[["e4","e5"], ...]}; singletons are implicit. Validated.
BendingSet bending_set_from_json(const Json& doc, const LengthFunction& lengths);
/// "p/q" string or JSON integer.
Rational rational_from_json(const Json& value);

Json parse_json_text(const std::string& text);

// Writers. Rationals are strings; subsets list the dominant edge first
// when lopsided, then canonical order.

Json to_json(const Rational& value);
Json to_json(const Integer& value);
Json to_json(const LengthFunction& lengths);
Json to_json(const Interval& interval);
Json to_json(Equivalence verdict);
Json to_json(TheoremB status);
Json subset_to_json(const LengthFunction& lengths, EdgeSubset subset);
Json partition_to_json(const LengthFunction& lengths, const Partition& blocks);
Json bending_set_to_json(const LengthFunction& lengths, const BendingSet& set);
Json polytope_to_json(const LengthFunction& lengths, const LatticePolytope& polytope);
Json torus_report_to_json(const LengthFunction& lengths, const TorusReport& report);
Json nonbending_to_json(const LengthFunction& lengths, const NonbendingReport& report);
Json classes_to_json(const LengthFunction& lengths, const EquivalenceClassReport& report);
Json probe_to_json(const LengthFunction& lengths, const TwoLongEdgeProbe& probe);

/// One "x,y[,z]" line per vertex after a header row of coordinate labels.
std::string polytope_vertices_csv(const LengthFunction& lengths, const LatticePolytope& polytope);

}  // namespace bendix
