#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bendix/json_io.hpp"

namespace bendix::cli {

enum class Format { Json, Table };

/// A parsed command line. Payload documents are kept raw and validated by run().
struct Request {
  std::string command;
  std::optional<Json> lambda;
  std::optional<Json> bending;
  std::optional<Json> subset;
  std::optional<std::string> value;
  Format format = Format::Json;
  bool force = false;
  std::size_t limit = 1000;
  bool csv = false;
  std::optional<std::string> example_id;
  std::string golden_dir;
  bool write_golden = false;
};

struct Outcome {
  int exit_code = 0;
  std::string out;  // standard output
  std::string err;  // standard error
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;

const std::vector<std::string>& command_names();

/// Dispatches one request. Library errors map to exit code 2, anything else to 1.
Outcome run(const Request& request);

/// Full command-line entry point, used by main().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Aligned two-column rendering of a JSON document, one leaf per row.
std::string render_table(const Json& doc);

struct ExampleCase {
  std::string id;
  std::string title;
  std::function<Json(const Limits&)> compute;
};

const std::vector<ExampleCase>& example_registry();

/**
 * Runs the registered reproductions (all, or the one named) and compares
 * each report with <golden_dir>/<id>.json. With `write`, the golden files
 * are replaced instead.
 */
Outcome run_examples(const std::optional<std::string>& id, const std::string& golden_dir, bool write,
                     const Limits& limits);

}  // namespace bendix::cli
