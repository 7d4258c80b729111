#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "cfrac_cli/app.hpp"

namespace cfrac::cli {

void RunReport::check(std::string name, bool pass, json measured, std::string tolerance, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(measured), std::move(tolerance), std::move(detail)});
}

bool RunReport::failed() const {
  for (const auto& c : checks)
    if (!c.pass) return true;
  return false;
}

namespace {

json check_json(const CheckRecord& c) {
  json j;
  j["check"] = c.name;
  j["status"] = c.pass ? "PASS" : "FAIL";
  j["measured"] = c.measured;
  if (!c.tolerance.empty()) j["tolerance"] = c.tolerance;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

std::string records_text(const RunReport& r) {
  std::ostringstream os;
  for (const auto& rec : r.records) os << rec.dump() << "\n";
  for (const auto& c : r.checks) os << check_json(c).dump() << "\n";
  return os.str();
}

std::string csv_text(const RunReport& r) {
  std::vector<json> rows = r.records;
  if (rows.empty())
    for (const auto& c : r.checks) rows.push_back(check_json(c));
  std::vector<std::string> cols;
  std::set<std::string> seen;
  for (const auto& row : rows)
    for (const auto& [k, v] : row.items())
      if (seen.insert(k).second) cols.push_back(k);
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ",";
      if (row.contains(cols[i])) os << csv_cell(row[cols[i]]);
    }
    os << "\n";
  }
  return os.str();
}

int emit(const RunConfig& cfg, const RunReport& r, std::ostream& out) {
  std::string data;
  if (cfg.format == "csv") data = csv_text(r);
  else if (cfg.format == "svg") {
    if (r.svg.empty()) throw ConfigError("this command produces no figure; use --format records or csv");
    data = r.svg;
  } else data = records_text(r);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + cfg.out + "'");
    f << data;
  }
  if (!cfg.svg.empty() && !r.svg.empty()) {
    std::ofstream f(cfg.svg, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + cfg.svg + "'");
    f << r.svg;
  }
  const bool to_stdout = cfg.out.empty();
  const bool xml = to_stdout && cfg.format == "svg";
  const std::string pre = xml ? "<!-- " : to_stdout ? "# " : "", post = xml ? " -->" : "";
  if (to_stdout) out << data;
  for (const auto& l : r.lines) out << pre << l << post << "\n";
  for (const auto& c : r.checks)
    out << pre << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << post
        << "\n";
  return r.exit_status();
}

}  // namespace cfrac::cli
