#include <fstream>
#include <sstream>

#include "cfrac_cli/app.hpp"

namespace cfrac::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t to_size(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long n = std::stoll(v, &used);
    if (used != v.size() || n < 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects a nonnegative integer, got '" + v + "'");
  }
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) {
    if (k == "command") cfg.command = v;
    else if (k == "algo") cfg.algo = v;
    else if (k == "x0") cfg.x0 = v;
    else if (k == "backend") cfg.backend = v;
    else if (k == "suite") cfg.suite = v;
    else if (k == "lattice") cfg.lattice = v;
    else if (k == "space") cfg.space = v;
    else if (k == "algebra") cfg.algebra = v;
    else if (k == "depth") cfg.depth = to_size(k, v);
    else if (k == "trials") cfg.trials = to_size(k, v);
    else if (k == "levels") cfg.levels = to_size(k, v);
    else if (k == "seed") cfg.seed = static_cast<unsigned long>(to_size(k, v));
    else if (k == "grid") cfg.grid = static_cast<int>(to_size(k, v));
    else if (k == "out") cfg.out = v;
    else if (k == "svg") cfg.svg = v;
    else if (k == "format") cfg.format = v;
    else throw ConfigError("unknown config key '" + k + "'");
  }
  if (cfg.backend != "exact" && cfg.backend != "float" && cfg.backend != "auto")
    throw ConfigError("backend must be exact, float or auto");
  if (cfg.format != "records" && cfg.format != "csv" && cfg.format != "svg")
    throw ConfigError("format must be records, csv or svg");
}

}  // namespace cfrac::cli
