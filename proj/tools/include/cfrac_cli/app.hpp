#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cfrac::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string algo;
  std::string x0;
  std::string backend = "auto";  // exact, float or auto
  std::string suite = "all";
  std::string lattice = "Z2";
  std::string space;
  std::string algebra;
  std::size_t depth = 0;  // 0 selects the command default
  std::size_t trials = 100;
  std::size_t levels = 2;
  unsigned long seed = 1;
  int grid = 120;
  std::string out;
  std::string svg;
  std::string format = "records";  // records, csv or svg
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat "key = value" text with '#' comments.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::string& path);
void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv);

struct CheckRecord {
  std::string name;
  bool pass = true;
  json measured = json::object();
  std::string tolerance;
  std::string detail;
};

struct RunReport {
  std::vector<CheckRecord> checks;
  std::vector<json> records;
  std::vector<std::string> lines;
  std::string svg;

  void check(std::string name, bool pass, json measured = json::object(), std::string tolerance = "",
             std::string detail = "");
  bool failed() const;
  int exit_status() const { return failed() ? 1 : 0; }
};

// Catalog name with the short aliases lipschitz, hurwitz, gausenstein, third,
// cayley, cayley-1pe1, heisenberg, X1H, X1C, X3R, XnR.
std::string canonical_algorithm_name(const std::string& name);

RunReport cmd_expand(const RunConfig& cfg);
RunReport cmd_iwasawa_expand(const RunConfig& cfg);
RunReport cmd_verify(const RunConfig& cfg);
RunReport cmd_boundary(const RunConfig& cfg);
RunReport cmd_catalog(const RunConfig& cfg);
RunReport cmd_render(const RunConfig& cfg);

std::vector<std::string> suite_names();

std::string records_text(const RunReport& r);
std::string csv_text(const RunReport& r);

// Writes the data file (or prints it) and the summary.  Returns the exit status.
int emit(const RunConfig& cfg, const RunReport& r, std::ostream& out);

// Full command line: 0 pass, 1 check failure, 2 configuration error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfrac::cli
