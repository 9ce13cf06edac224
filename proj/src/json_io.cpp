#include "bendix/json_io.hpp"

#include <limits>

#include "bendix/error.hpp"

namespace bendix {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::string edge_label(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw Error(ErrorCode::ParseError, "edge ids must be strings", value.dump());
}

}  // namespace

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw Error(ErrorCode::ParseError, "expected a rational as \"p/q\" or an integer", value.dump());
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON", e.what());
  }
}

LengthFunction length_function_from_json(const Json& doc) {
  const Json& edges = require(doc, "edges");
  if (!edges.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
  std::vector<Edge> out;
  for (const auto& e : edges) {
    out.push_back({edge_label(require(e, "id")), rational_from_json(require(e, "length"))});
  }
  return LengthFunction(std::move(out));
}

EdgeSubset edge_subset_from_json(const Json& doc, const LengthFunction& lengths) {
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "an edge subset is an array of edge ids", doc.dump());
  std::vector<std::string> ids;
  for (const auto& id : doc) ids.push_back(edge_label(id));
  return lengths.subset(ids);
}

BendingSet bending_set_from_json(const Json& doc, const LengthFunction& lengths) {
  const Json& members = require(doc, "members");
  if (!members.is_array()) throw Error(ErrorCode::ParseError, "\"members\" must be an array");
  std::vector<EdgeSubset> family;
  for (const auto& m : members) family.push_back(edge_subset_from_json(m, lengths));
  return validate_bending_set(lengths, family);
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json to_json(const LengthFunction& lengths) {
  Json edges = Json::array();
  for (const auto& e : lengths.edges()) edges.push_back({{"id", e.id}, {"length", to_json(e.length)}});
  return {{"edges", edges}};
}

Json to_json(const Interval& interval) { return {{"lo", to_json(interval.lo)}, {"hi", to_json(interval.hi)}}; }

Json to_json(Equivalence verdict) {
  switch (verdict) {
    case Equivalence::Equivalent: return "equivalent";
    case Equivalence::NotEquivalent: return "not_equivalent";
    case Equivalence::Unknown: return "unknown";
  }
  return "unknown";
}

Json to_json(TheoremB status) {
  return status == TheoremB::MaximalHamiltonian ? "MaximalHamiltonian" : "NotApplicable";
}

Json subset_to_json(const LengthFunction& lengths, EdgeSubset subset) {
  Json out = Json::array();
  std::optional<std::size_t> first;
  if (is_lopsided(lengths, subset)) first = lengths.longest(subset);
  if (first) out.push_back(lengths.id(*first));
  for (std::size_t i : subset.indices()) {
    if (i != first) out.push_back(lengths.id(i));
  }
  return out;
}

Json partition_to_json(const LengthFunction& lengths, const Partition& blocks) {
  Json out = Json::array();
  for (auto b : sorted_partition(blocks)) out.push_back(subset_to_json(lengths, b));
  return out;
}

Json bending_set_to_json(const LengthFunction& lengths, const BendingSet& set) {
  Json members = Json::array();
  for (auto m : set.non_singletons()) members.push_back(subset_to_json(lengths, m));
  return {{"members", members}};
}

Json polytope_to_json(const LengthFunction& lengths, const LatticePolytope& polytope) {
  Json labels = Json::array();
  for (auto l : polytope.labels) labels.push_back(subset_to_json(lengths, l));
  Json halfspaces = Json::array();
  for (const auto& h : polytope.halfspaces) {
    Json normal = Json::array();
    for (Eigen::Index i = 0; i < h.normal.size(); ++i) normal.push_back(to_json(h.normal(i)));
    halfspaces.push_back({{"normal", normal}, {"offset", to_json(h.offset)}});
  }
  Json vertices = Json::array();
  for (const auto& v : polytope.vertices) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(to_json(v(i)));
    vertices.push_back(row);
  }
  return {{"dim", polytope.dim}, {"labels", labels}, {"halfspaces", halfspaces}, {"vertices", vertices}};
}

Json torus_report_to_json(const LengthFunction& lengths, const TorusReport& report) {
  return {
      {"bending_set", bending_set_to_json(lengths, report.bending_set)},
      {"dimension", report.dimension},
      {"is_full", report.is_full},
      {"maximal_blocks", partition_to_json(lengths, report.maximal_blocks)},
      {"is_maximal_bending", report.is_maximal_bending},
      {"theorem_b", to_json(report.theorem_b)},
      {"common_value", report.common_value ? to_json(*report.common_value) : Json(nullptr)},
  };
}

Json nonbending_to_json(const LengthFunction& lengths, const NonbendingReport& report) {
  Json c_edges = Json::array();
  for (auto i : report.c_edges) c_edges.push_back(lengths.id(i));
  return {
      {"a", to_json(report.a)},
      {"c", to_json(report.c)},
      {"unit_edge", lengths.id(report.unit_edge)},
      {"a_edge", lengths.id(report.a_edge)},
      {"c_edges", c_edges},
      {"hamiltonian_classes", to_json(report.hamiltonian_classes)},
      {"bending_classes", report.bending_classes},
      {"hypothesis_c_gt_a1_gt_3", report.strong_hypothesis},
      {"nonbending_tori_exist", report.nonbending_tori_exist},
      {"symplectic_model", "S2 x S2 with form omega1 + a*omega2"},
      {"rectangle", {{"bending_set", bending_set_to_json(lengths, report.rectangle_set)},
                     {"polytope", polytope_to_json(lengths, report.rectangle)}}},
      {"trapezoid", {{"bending_set", bending_set_to_json(lengths, report.trapezoid_set)},
                     {"polytope", polytope_to_json(lengths, report.trapezoid)},
                     {"vs_rectangle", to_json(report.trapezoid_vs_rectangle)}}},
      {"printed_t2", {{"bending_set", bending_set_to_json(lengths, report.printed_set)},
                      {"polytope", polytope_to_json(lengths, report.printed)},
                      {"vs_rectangle", to_json(report.printed_vs_rectangle)}}},
      {"printed_t2_discrepancy", report.printed_vs_rectangle == Equivalence::Equivalent &&
                                     report.trapezoid_vs_rectangle == Equivalence::NotEquivalent},
  };
}

Json classes_to_json(const LengthFunction& lengths, const EquivalenceClassReport& report) {
  Json classes = Json::array();
  for (const auto& c : report.classes) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(bending_set_to_json(lengths, m));
    classes.push_back({{"representative", polytope_to_json(lengths, c.representative)},
                       {"delzant", is_delzant(c.representative)},
                       {"members", members}});
  }
  return {{"class_count", report.classes.size()}, {"complete", report.complete}, {"classes", classes}};
}

Json probe_to_json(const LengthFunction& lengths, const TwoLongEdgeProbe& probe) {
  Json pairs = Json::array();
  for (const auto& [a, b] : probe.long_pairs) pairs.push_back({lengths.id(a), lengths.id(b)});
  Json partition = nullptr;
  if (probe.partition) {
    partition = {subset_to_json(lengths, probe.partition->first), subset_to_json(lengths, probe.partition->second)};
  }
  return {{"long_pairs", pairs}, {"partition", partition}};
}

std::string polytope_vertices_csv(const LengthFunction& lengths, const LatticePolytope& polytope) {
  std::string out;
  for (std::size_t k = 0; k < polytope.labels.size(); ++k) {
    if (k > 0) out += ",";
    std::string label;
    for (const auto& id : subset_to_json(lengths, polytope.labels[k])) {
      if (!label.empty()) label += "+";
      label += id.get<std::string>();
    }
    out += label;
  }
  out += "\n";
  for (const auto& v : polytope.vertices) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i > 0) out += ",";
      out += to_string(v(i));
    }
    out += "\n";
  }
  return out;
}

}  // namespace bendix
