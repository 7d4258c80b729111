#include <iostream>

#include "CLI11.hpp"
#include "cfrac/errors.hpp"
#include "cfrac_cli/app.hpp"

namespace cfrac::cli {

namespace {

RunReport dispatch(const RunConfig& cfg) {
  if (cfg.command == "expand") return cmd_expand(cfg);
  if (cfg.command == "iwasawa-expand") return cmd_iwasawa_expand(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "boundary") return cmd_boundary(cfg);
  if (cfg.command == "catalog") return cmd_catalog(cfg);
  if (cfg.command == "render") return cmd_render(cfg);
  throw ConfigError(cfg.command.empty() ? "no command given" : "unknown command '" + cfg.command + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized continued fractions over division algebras and Iwasawa spaces", "cfrac"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::map<std::string, std::string> flags;
  std::string config_path;
  auto flag = [&](const std::string& name, const std::string& help) {
    app.add_option("--" + name, flags[name], help);
  };
  app.add_option("--config", config_path, "flat key = value file; command-line flags take precedence");
  flag("backend", "exact, float or auto");
  flag("seed", "random seed");
  flag("out", "data file (stdout when omitted)");
  flag("format", "records, csv or svg");
  flag("algo", "catalog name, alias or inline algorithm");
  flag("x0", "starting element");
  flag("depth", "expansion depth");
  flag("suite", "verification suite");
  flag("trials", "random instances per check");
  flag("algebra", "R, C, H or O");
  flag("space", "Iwasawa space: X1H, X1C or X3R");
  flag("lattice", "Z1, Z2, Z3 or Zi_times_1pi");
  flag("levels", "boundary levels");
  flag("svg", "figure file");
  flag("grid", "domain figure resolution");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"expand", "continued-fraction expansion with convergents and error bounds"},
      {"iwasawa-expand", "expansion on an Iwasawa inversion space"},
      {"verify", "run a verification suite"},
      {"boundary", "boundary decomposition of the unit sphere"},
      {"catalog", "list algorithms and orders"},
      {"render", "SVG figure of a decomposition or a digit domain"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) kv = read_config_file(config_path);
    for (auto* sub : app.get_subcommands()) kv["command"] = sub->get_name();
    bool format_given = kv.count("format") > 0;
    for (const auto& [name, value] : flags)
      if (app.count("--" + name) > 0) {
        kv[name] = value;
        format_given = format_given || name == "format";
      }
    apply_config(cfg, kv);
    if (cfg.command == "render" && !format_given) cfg.format = "svg";
    RunReport r = dispatch(cfg);
    return emit(cfg, r, out);
  } catch (const ConfigError& e) {
    err << "cfrac: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "cfrac: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << "cfrac: " << e.what() << "\n";
    return 2;
  } catch (const InvalidConfiguration& e) {
    err << "cfrac: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedBackend& e) {
    err << "cfrac: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "cfrac: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cfrac::cli
