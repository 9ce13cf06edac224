#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "bendix/error.hpp"
#include "bendix_cli.hpp"

namespace bendix::cli {

namespace {

PolygonSpace space_of(std::vector<std::string> lengths, const Limits& limits) {
  std::vector<Rational> values;
  for (const auto& text : lengths) values.push_back(parse_rational(text));
  return PolygonSpace(LengthFunction::from_lengths(values), limits);
}

BendingSet family(const PolygonSpace& space, const std::vector<std::vector<std::string>>& members) {
  std::vector<EdgeSubset> subsets;
  for (const auto& ids : members) subsets.push_back(space.lengths().subset(ids));
  return validate_bending_set(space.lengths(), subsets);
}

Json spectrum_json(const MaximalTori& tori) {
  Json dims = Json::array();
  Json counts = Json::object();
  for (const auto& [dim, count] : tori.spectrum) {
    dims.push_back(dim);
    counts[std::to_string(dim)] = to_json(count);
  }
  return {{"spectrum", dims}, {"spectrum_counts", counts}, {"listed", tori.reports.size()},
          {"truncated", tori.truncated}};
}

/// Fills the family, then reports it as a torus.
Json family_json(const PolygonSpace& space, const BendingSet& given) {
  const auto full = fill(space.lengths(), given);
  Json out = torus_report_to_json(space.lengths(), torus_report(space, full));
  out["given"] = bending_set_to_json(space.lengths(), given);
  return out;
}

Json pentagon_critical(const Limits& limits) {
  const auto space = space_of({"1", "1", "1", "1", "3/2"}, limits);
  const auto& lengths = space.lengths();
  const auto circle = lengths.subset({"e4", "e5"});
  const auto n = min_lopsided_partition(space, limits);
  const auto tori = enumerate_maximal_tori(space, SIZE_MAX, limits);
  Json values = Json::array();
  for (const auto& v : critical_values(space, circle)) values.push_back(to_json(v));
  Json statuses = Json::array();
  for (const auto& t : tori.reports) statuses.push_back(to_json(t.theorem_b));
  return {{"lengths", to_json(lengths)},
          {"N", n.count},
          {"witness", partition_to_json(lengths, n.blocks)},
          {"max_bending_dim", max_bending_dim(space, limits)},
          {"circle", subset_to_json(lengths, circle)},
          {"image", to_json(moment_image(space, circle))},
          {"critical_values", values},
          {"maximal_tori", spectrum_json(tori)},
          {"theorem_b", statuses}};
}

/// Lopsided partitions of a length function with no genericity assumption.
Json combinatorial_json(const LengthFunction& lengths, const Limits& limits) {
  std::size_t fewest = lengths.size();
  Partition best;
  for (const auto& p : lopsided_partitions(lengths, lengths.size())) {
    if (p.size() < fewest || best.empty()) {
      fewest = p.size();
      best = p;
    }
  }
  return {{"lengths", to_json(lengths)},
          {"generic", is_generic(lengths, limits)},
          {"fewest_lopsided_blocks", fewest},
          {"witness", partition_to_json(lengths, best)}};
}

Json two_long_edge(const Limits& limits) {
  const auto literal = LengthFunction::from_lengths({1, 1, 1, 1, 3, 3});
  const auto space = space_of({"1", "1", "1", "1", "3", "5/2"}, limits);
  const auto& lengths = space.lengths();
  const auto n = min_lopsided_partition(space, limits);
  const auto probe = two_long_edge_partition(space);
  Json out = {{"lengths", to_json(lengths)},
              {"N", n.count},
              {"witness", partition_to_json(lengths, n.blocks)},
              {"max_bending_dim", max_bending_dim(space, limits)},
              {"probe", probe_to_json(lengths, probe)},
              {"toric", nullptr},
              {"non_generic_variant", combinatorial_json(literal, limits)}};
  if (probe.partition) {
    const std::vector<EdgeSubset> halves{probe.partition->first, probe.partition->second};
    const auto full = fill(lengths, validate_bending_set(lengths, halves));
    const auto polytope = moment_polytope(space, full);
    out["toric"] = {{"bending_set", bending_set_to_json(lengths, full)},
                    {"dimension", torus_dimension(space, full)},
                    {"polytope_dim", polytope.dim},
                    {"vertex_count", polytope.vertices.size()},
                    {"delzant", is_delzant(polytope)}};
  }
  return out;
}

Json pab_mixed(const Limits& limits) {
  const auto space = space_of({"1", "1", "1", "3/2", "3/4"}, limits);
  const auto& lengths = space.lengths();
  const auto circle = family(space, {{"e4", "e5"}});
  const auto toric = family(space, {{"e4", "e1"}, {"e5", "e2"}});
  const auto polytope = moment_polytope(space, toric);
  const auto tori = enumerate_maximal_tori(space, SIZE_MAX, limits);
  return {{"lengths", to_json(lengths)},
          {"circle", torus_report_to_json(lengths, torus_report(space, circle))},
          {"toric", torus_report_to_json(lengths, torus_report(space, toric))},
          {"toric_polytope", polytope_to_json(lengths, polytope)},
          {"toric_delzant", is_delzant(polytope)},
          {"maximal_tori", spectrum_json(tori)}};
}

Json heptagon_spectrum(const Limits& limits) {
  const auto space = space_of({"1", "1", "2", "2", "3", "3", "3"}, limits);
  const auto& lengths = space.lengths();
  const std::vector<BendingSet> families{
      family(space, {{"e3", "e1"}, {"e4", "e2"}}),
      family(space, {{"e3", "e1"}, {"e5", "e2"}, {"e6", "e4"}}),
      family(space, {{"e5", "e1", "e2"}, {"e6", "e4"}, {"e7", "e3"}}),
  };
  Json reports = Json::array();
  for (const auto& f : families) reports.push_back(family_json(space, f));

  const auto pair = lengths.subset({"e6", "e4"});
  const auto tori = enumerate_maximal_tori(space, SIZE_MAX, limits);
  std::set<int> containing;
  for (const auto& t : tori.reports) {
    if (t.bending_set.contains(pair)) containing.insert(t.dimension);
  }
  const auto circle = family(space, {{"e6", "e4"}});
  return {{"lengths", to_json(lengths)},
          {"generic", is_generic(lengths, limits)},
          {"families", reports},
          {"maximal_tori", spectrum_json(tori)},
          {"pair", subset_to_json(lengths, pair)},
          {"pair_maximal_dims", containing},
          {"pair_max_containing_dim", max_containing_dim(space, circle, limits).dimension}};
}

Json heptagon_7m(const Limits& limits) {
  const auto space = space_of({"1", "1", "2", "2", "3", "3", "3", "1/2", "1/4"}, limits);
  const auto& lengths = space.lengths();
  const std::vector<BendingSet> families{
      family(space, {{"e3", "e1"}, {"e4", "e2"}, {"e5", "e8", "e9"}}),
      family(space, {{"e3", "e1"}, {"e5", "e2"}, {"e6", "e4"}, {"e7", "e8", "e9"}}),
      family(space, {{"e5", "e1", "e2", "e8", "e9"}, {"e6", "e4"}, {"e7", "e3"}}),
  };
  Json reports = Json::array();
  for (const auto& f : families) reports.push_back(family_json(space, f));
  const auto tori = enumerate_maximal_tori(space, 25, limits);
  return {{"lengths", to_json(lengths)},
          {"generic", is_generic(lengths, limits)},
          {"families", reports},
          {"maximal_tori", spectrum_json(tori)}};
}

Json conjugacy_1a444(const Limits& limits) {
  const auto space = space_of({"1", "2", "4", "4", "4"}, limits);
  Json out = classes_to_json(space.lengths(), conjugacy_classes(space, limits));
  const auto nonbending = nonbending_report(space, limits);
  out["nonbending"] = nonbending ? nonbending_to_json(space.lengths(), *nonbending) : Json(nullptr);
  return out;
}

Json prop_nonbending(const Limits& limits) {
  const auto space = space_of({"1", "5/2", "4", "4", "4"}, limits);
  const auto report = nonbending_report(space, limits);
  return report ? nonbending_to_json(space.lengths(), *report) : Json(nullptr);
}

Json probe_11122(const Limits& limits) {
  const auto space = space_of({"1", "1", "1", "2", "2"}, limits);
  const auto& lengths = space.lengths();
  const auto n = min_lopsided_partition(space, limits);
  return {{"lengths", to_json(lengths)},
          {"probe", probe_to_json(lengths, two_long_edge_partition(space))},
          {"N", n.count},
          {"witness", partition_to_json(lengths, n.blocks)},
          {"max_bending_dim", max_bending_dim(space, limits)},
          {"top_dimension", static_cast<int>(space.edge_count()) - 3}};
}

std::optional<Json> read_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace

const std::vector<ExampleCase>& example_registry() {
  static const std::vector<ExampleCase> registry{
      {"pentagon-critical", "almost regular pentagon (1,1,1,1,3/2)", pentagon_critical},
      {"two-long-edge", "two long edges (1,1,1,1,3,5/2); (1,1,1,1,3,3) is not generic", two_long_edge},
      {"pab-mixed", "pentagon (1,1,1,3/2,3/4): maximal tori of dimensions 1 and 2", pab_mixed},
      {"heptagon-spectrum", "heptagon (1,1,2,2,3,3,3): dimensions 2, 3, 4", heptagon_spectrum},
      {"heptagon-7m", "heptagon with little edges 1/2, 1/4", heptagon_7m},
      {"conjugacy-1a444", "pentagon (1,2,4,4,4): toric bending tori up to conjugacy", conjugacy_1a444},
      {"nonbending-tori", "pentagon (1,5/2,4,4,4): non-bending maximal tori", prop_nonbending},
      {"probe-11122", "two-long-edge probe on (1,1,1,2,2)", probe_11122},
  };
  return registry;
}

Outcome run_examples(const std::optional<std::string>& id, const std::string& golden_dir, bool write,
                     const Limits& limits) {
  std::vector<const ExampleCase*> selected;
  for (const auto& c : example_registry()) {
    if (!id || c.id == *id) selected.push_back(&c);
  }
  if (selected.empty()) throw Error(ErrorCode::InvalidInput, "unknown example id", *id);

  Json summary = Json::array();
  Json single;
  bool ok = true;
  for (const auto* c : selected) {
    const Json report = c->compute(limits);
    const auto path = std::filesystem::path(golden_dir) / (c->id + ".json");
    std::string status;
    if (write) {
      std::filesystem::create_directories(golden_dir);
      std::ofstream(path) << report.dump(2) << "\n";
      status = "written";
    } else {
      const auto golden = read_golden(path);
      status = !golden ? "missing" : (*golden == report ? "pass" : "fail");
    }
    ok = ok && status != "fail" && status != "missing";
    summary.push_back({{"id", c->id}, {"title", c->title}, {"status", status}});
    single = {{"id", c->id}, {"title", c->title}, {"status", status}, {"report", report}};
  }
  const Json doc = id ? single : Json{{"examples", summary}, {"all_passed", ok}};
  return {ok ? kExitOk : kExitInternal, doc.dump() + "\n", ok ? "" : "golden mismatch\n"};
}

}  // namespace bendix::cli
