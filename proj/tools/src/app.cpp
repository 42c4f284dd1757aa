#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "noregret/errors.hpp"
#include "noregret/strategies.hpp"
#include "noregret_cli/app.hpp"

namespace noregret::cli {

namespace {

struct SubcommandOptions {
  explicit SubcommandOptions(Experiment e) : experiment(e) {}

  Experiment experiment;
  CLI::App* app = nullptr;
  std::string config_path;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

void add_experiment(CLI::App& root, SubcommandOptions& sub, const std::string& name,
                    const std::string& description) {
  sub.app = root.add_subcommand(name, description);
  sub.app->add_option("--config", sub.config_path, "key=value configuration file");
  for (const KeySpec& spec : config_keys()) {
    std::string help = spec.help;
    if (spec.default_value) help += " [default: " + *spec.default_value + "]";
    sub.options[spec.name] = sub.app->add_option("--" + spec.name, sub.values[spec.name], help);
  }
}

int execute(const SubcommandOptions& sub, std::ostream& out, std::ostream& err) {
  std::map<std::string, std::string> overrides;
  for (const auto& [name, option] : sub.options) {
    if (option->count() > 0) overrides[name] = sub.values.at(name);
  }
  const auto file_values =
      sub.config_path.empty() ? std::map<std::string, std::string>{} : load_config_file(sub.config_path);
  const ExperimentConfig config = resolve_config(sub.experiment, file_values, overrides);
  config.echo(err);

  const std::string& path = config.get("out");
  if (path == "-") return run_experiment(config, out, err);
  // Write to a buffer first so a failed run leaves no partial file behind.
  std::ostringstream buffer;
  const int code = run_experiment(config, buffer, err);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write output file '" + path + "'");
  file << buffer.str();
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App root{"Variable-parameter mirror descent experiments", "noregret"};
  root.require_subcommand(1);

  SubcommandOptions regret{Experiment::regret};
  SubcommandOptions continuous{Experiment::continuous_check};
  SubcommandOptions convex{Experiment::convex};
  SubcommandOptions stochastic{Experiment::stochastic};
  add_experiment(root, regret, "run-regret", "play a strategy against a payoff stream");
  add_experiment(root, continuous, "continuous-check",
                 "compare the interpolated run with the discrete one per interval");
  add_experiment(root, convex, "run-convex", "minimise a convex loss with mirror descent");
  add_experiment(root, stochastic, "run-stochastic",
                 "minimise a convex loss from noisy subgradients");
  auto* list = root.add_subcommand("list-algorithms", "print the named strategies");

  try {
    root.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = root.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (list->parsed()) {
      for (Algorithm a : all_algorithms()) out << to_string(a) << '\t' << describe(a) << '\n';
      return kExitOk;
    }
    for (const SubcommandOptions* sub : {&regret, &continuous, &convex, &stochastic}) {
      if (sub->app->parsed()) return execute(*sub, out, err);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const noregret::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace noregret::cli
