#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bendix/error.hpp"
#include "bendix_cli.hpp"

#ifndef BENDIX_GOLDEN_DIR
#define BENDIX_GOLDEN_DIR "golden"
#endif

namespace bendix::cli {

namespace {

Json error_object(std::string_view code, const std::string& message, const std::string& context) {
  return {{"code", code}, {"message", message}, {"context", context}};
}

std::string emit(const Json& doc, Format format) {
  if (format == Format::Table) return render_table(doc);
  return doc.dump() + "\n";
}

const Json& need(const std::optional<Json>& doc, const char* flag, const std::string& command) {
  if (!doc) {
    throw Error(ErrorCode::InvalidInput, command + " requires " + flag);
  }
  return *doc;
}

LengthFunction need_lambda(const Request& r) {
  return length_function_from_json(need(r.lambda, "-f/--lambda", r.command));
}

Limits request_limits(const Request& r) {
  Limits limits = Limits::from_environment();
  limits.force = r.force;
  return limits;
}

Json command_check(const Request& r, const Limits& limits) {
  const auto lengths = need_lambda(r);
  const bool generic = is_generic(lengths, limits);
  const bool nonempty = is_nonempty(lengths);
  Json out = {{"edges", lengths.size()}, {"generic", generic}, {"nonempty", nonempty},
              {"dimension", nullptr}};
  if (generic && nonempty) out["dimension"] = pol_dimension(lengths, limits);
  return out;
}

Json command_lopsided(const Request& r, const Limits& limits) {
  const auto lengths = need_lambda(r);
  if (r.subset) {
    const auto s = edge_subset_from_json(*r.subset, lengths);
    const bool lop = is_lopsided(lengths, s);
    return {{"subset", subset_to_json(lengths, s)},
            {"lopsided", lop},
            {"dominant", lop ? Json(lengths.id(dominant_edge(lengths, s))) : Json(nullptr)}};
  }
  limits.check_enumeration(lengths.size());
  std::vector<EdgeSubset> found;
  const std::uint64_t full = lengths.all().bits();
  for (std::uint64_t bits = 1; bits <= full && bits != 0; ++bits) {
    const EdgeSubset s(bits);
    if (s.size() > 1 && is_lopsided(lengths, s)) found.push_back(s);
  }
  std::sort(found.begin(), found.end(), canonical_less);
  Json list = Json::array();
  for (auto s : found) list.push_back(subset_to_json(lengths, s));
  return {{"count", found.size()}, {"lopsided_subsets", list}};
}

Json command_nmin(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto& lengths = space.lengths();
  if (r.bending) {
    const auto set = bending_set_from_json(*r.bending, lengths);
    const auto blocks = maximal_elements(set);
    const auto result = min_coarser_partition(space, blocks, limits);
    return {{"N", result.count},
            {"witness", partition_to_json(lengths, result.blocks)},
            {"coarser_than", partition_to_json(lengths, blocks)}};
  }
  const auto result = min_lopsided_partition(space, limits);
  return {{"N", result.count}, {"witness", partition_to_json(lengths, result.blocks)}};
}

Json command_dim(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto& lengths = space.lengths();
  if (r.bending) {
    const auto set = bending_set_from_json(*r.bending, lengths);
    const auto containing = max_containing_dim(space, set, limits);
    return {{"torus_dimension", torus_dimension(space, set)},
            {"is_full", is_full(set)},
            {"maximal_blocks", partition_to_json(lengths, maximal_elements(set))},
            {"max_containing_dim", containing.dimension},
            {"N_coarser", containing.coarse.count},
            {"witness", bending_set_to_json(lengths, containing.witness)}};
  }
  const auto n = min_lopsided_partition(space, limits);
  return {{"pol_dimension", space.dimension()},
          {"N", n.count},
          {"max_bending_dim", static_cast<int>(space.edge_count()) - std::max<int>(3, static_cast<int>(n.count))},
          {"two_long_edge", probe_to_json(lengths, two_long_edge_partition(space))}};
}

Json command_fill(const Request& r, const Limits&) {
  const auto lengths = need_lambda(r);
  const auto set = bending_set_from_json(need(r.bending, "-b/--bending", r.command), lengths);
  const auto filled = fill(lengths, set);
  return {{"input", bending_set_to_json(lengths, set)},
          {"filled", bending_set_to_json(lengths, filled)},
          {"is_full", is_full(filled)}};
}

Json command_maximal(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto set = bending_set_from_json(need(r.bending, "-b/--bending", r.command), space.lengths());
  return torus_report_to_json(space.lengths(), torus_report(space, set));
}

Json command_enumerate(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto result = enumerate_maximal_tori(space, r.limit, limits);
  Json reports = Json::array();
  for (const auto& t : result.reports) reports.push_back(torus_report_to_json(space.lengths(), t));
  Json dims = Json::array();
  Json counts = Json::object();
  for (const auto& [dim, count] : result.spectrum) {
    dims.push_back(dim);
    counts[std::to_string(dim)] = to_json(count);
  }
  return {{"reports", reports},
          {"listed", result.reports.size()},
          {"truncated", result.truncated},
          {"spectrum", dims},
          {"spectrum_counts", counts}};
}

Json command_image(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto s = edge_subset_from_json(need(r.subset, "-I/--subset", r.command), space.lengths());
  return to_json(moment_image(space, s));
}

Json command_critical(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto s = edge_subset_from_json(need(r.subset, "-I/--subset", r.command), space.lengths());
  Json values = Json::array();
  for (const auto& v : critical_values(space, s)) values.push_back(to_json(v));
  Json out = {{"image", to_json(moment_image(space, s))}, {"critical_values", values}};
  if (r.value) {
    const Rational t = parse_rational(*r.value);
    out["t"] = to_json(t);
    out["regular"] = is_regular_value(space, s, t);
  }
  return out;
}

Json command_reduce(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  const auto s = edge_subset_from_json(need(r.subset, "-I/--subset", r.command), space.lengths());
  if (!r.value) throw Error(ErrorCode::InvalidInput, "reduce requires -t/--value");
  const Rational t = parse_rational(*r.value);
  const auto result = reduce(space, s, t, limits);
  return {{"cluster", subset_to_json(space.lengths(), s)},
          {"t", to_json(t)},
          {"left", to_json(result.left)},
          {"right", to_json(result.right)},
          {"left_generic", result.left_generic},
          {"right_generic", result.right_generic}};
}

Json command_conjugacy(const Request& r, const Limits& limits) {
  const PolygonSpace space(need_lambda(r), limits);
  Json out = classes_to_json(space.lengths(), conjugacy_classes(space, limits));
  const auto nonbending = nonbending_report(space, limits);
  out["nonbending"] = nonbending ? nonbending_to_json(space.lengths(), *nonbending) : Json(nullptr);
  return out;
}

Json dispatch(const Request& r, const Limits& limits) {
  const std::string& c = r.command;
  if (c == "check") return command_check(r, limits);
  if (c == "lopsided") return command_lopsided(r, limits);
  if (c == "nmin") return command_nmin(r, limits);
  if (c == "dim") return command_dim(r, limits);
  if (c == "fill") return command_fill(r, limits);
  if (c == "maximal") return command_maximal(r, limits);
  if (c == "enumerate") return command_enumerate(r, limits);
  if (c == "image") return command_image(r, limits);
  if (c == "critical") return command_critical(r, limits);
  if (c == "reduce") return command_reduce(r, limits);
  if (c == "conjugacy") return command_conjugacy(r, limits);
  throw Error(ErrorCode::InvalidInput, "unknown command", c);
}

void flatten(const Json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (node.is_object()) {
    if (node.empty()) rows.emplace_back(path, "{}");
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (node.is_array()) {
    const bool flat = std::none_of(node.begin(), node.end(), [](const Json& v) { return v.is_structured(); });
    if (flat) {
      std::string joined = "[";
      for (std::size_t i = 0; i < node.size(); ++i) joined += (i ? ", " : "") + scalar(node[i]);
      rows.emplace_back(path, joined + "]");
    } else {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.emplace_back(path, scalar(node));
  }
}

std::optional<Json> read_json_file(const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read file", path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check", "lopsided", "nmin", "dim", "fill",
                                              "maximal", "enumerate", "polytope", "conjugacy",
                                              "reduce", "image", "critical", "examples"};
  return names;
}

std::string render_table(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v + "\n";
  }
  return out;
}

Outcome run(const Request& request) {
  try {
    const Limits limits = request_limits(request);
    if (request.command == "examples") {
      const std::string dir = request.golden_dir.empty() ? BENDIX_GOLDEN_DIR : request.golden_dir;
      Outcome o = run_examples(request.example_id, dir, request.write_golden, limits);
      if (request.format == Format::Table && !o.out.empty()) o.out = render_table(parse_json_text(o.out));
      return o;
    }
    if (request.command == "polytope") {
      const PolygonSpace space(need_lambda(request), limits);
      const auto set = bending_set_from_json(need(request.bending, "-b/--bending", "polytope"), space.lengths());
      const auto polytope = moment_polytope(space, set);
      if (request.csv) return {kExitOk, polytope_vertices_csv(space.lengths(), polytope), ""};
      return {kExitOk, emit(polytope_to_json(space.lengths(), polytope), request.format), ""};
    }
    return {kExitOk, emit(dispatch(request, limits), request.format), ""};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::Internal ? kExitInternal : kExitValidation;
    return {code, "", error_object(to_string(e.code()), e.what(), e.context()).dump() + "\n"};
  } catch (const std::exception& e) {
    return {kExitInternal, "", error_object("Internal", e.what(), "").dump() + "\n"};
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"bendix: bending tori, moment polytopes and lopsided partitions of polygon spaces"};
  app.require_subcommand(1);

  std::string lambda_file, bending_file, subset_text, value, format = "json", golden_dir, example_id;
  bool force = false, csv = false, write_golden = false;
  std::size_t limit = 1000;

  static const std::map<std::string, std::string> descriptions{
      {"check", "genericity, nonemptiness and dimension of Pol(E, lambda)"},
      {"lopsided", "lopsided test for -I, or every lopsided subset"},
      {"nmin", "fewest lopsided blocks, optionally coarser than -b"},
      {"dim", "bending torus dimensions"},
      {"fill", "complete a bending set to a full one"},
      {"maximal", "maximality of a full bending torus"},
      {"enumerate", "all maximal bending tori and their dimension spectrum"},
      {"polytope", "moment polytope of a toric bending set"},
      {"conjugacy", "toric bending sets grouped by lattice equivalence"},
      {"reduce", "collapse I and E-I to virtual edges of length t"},
      {"image", "moment image of the bending function on I"},
      {"critical", "critical values of the bending function on I"},
      {"examples", "run the worked examples against golden files"},
  };
  for (const auto& name : command_names()) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--force", force, "lift the edge-count guards");
    if (name == "examples") {
      sub->add_option("--id", example_id, "run one registered example");
      sub->add_option("--golden", golden_dir, "golden file directory");
      sub->add_flag("--write-golden", write_golden, "regenerate golden files");
      continue;
    }
    sub->add_option("-f,--lambda", lambda_file, "length function JSON file")->required();
    if (name == "nmin" || name == "dim" || name == "fill" || name == "maximal" || name == "polytope") {
      sub->add_option("-b,--bending", bending_file, "bending set JSON file");
    }
    if (name == "lopsided" || name == "image" || name == "critical" || name == "reduce") {
      sub->add_option("-I,--subset", subset_text, "edge subset as a JSON array");
    }
    if (name == "critical" || name == "reduce") sub->add_option("-t,--value", value, "rational value p/q");
    if (name == "enumerate") sub->add_option("--limit", limit, "maximum number of reports");
    if (name == "polytope") sub->add_flag("--csv", csv, "emit a CSV vertex list instead of JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_object("ParseError", e.what(), "").dump() << "\n";
    return kExitValidation;
  }

  Request request;
  request.command = app.get_subcommands().front()->get_name();
  request.format = format == "table" ? Format::Table : Format::Json;
  request.force = force;
  request.limit = limit;
  request.csv = csv;
  request.golden_dir = golden_dir;
  request.write_golden = write_golden;
  if (!example_id.empty()) request.example_id = example_id;
  if (!value.empty()) request.value = value;
  try {
    request.lambda = read_json_file(lambda_file);
    request.bending = read_json_file(bending_file);
    if (!subset_text.empty()) request.subset = parse_json_text(subset_text);
  } catch (const Error& e) {
    err << error_object(to_string(e.code()), e.what(), e.context()).dump() << "\n";
    return kExitValidation;
  }

  const Outcome o = run(request);
  out << o.out;
  err << o.err;
  return o.exit_code;
}

}  // namespace bendix::cli
