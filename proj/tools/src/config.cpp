#include "noregret_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace noregret::cli {

std::string_view to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::regret: return "regret";
    case Experiment::continuous_check: return "continuous-check";
    case Experiment::convex: return "convex";
    case Experiment::stochastic: return "stochastic";
  }
  return "unknown";
}

const std::vector<KeySpec>& config_keys() {
  static const std::vector<KeySpec> keys = {
      {"n", "1000", "horizon (number of stages)"},
      {"seed", "0", "seed for every random component"},
      {"out", "-", "CSV output path, '-' for stdout"},
      {"d", "10", "dimension of the action set"},
      {"strategy.name", "EW", "EW, EW_PRIME, SFP, VSFP, OGD_L or OMD_L"},
      {"strategy.eta", std::nullopt, "base parameter eta (step scale for convex runs)"},
      {"strategy.alpha", "0.5", "VSFP / power-schedule exponent in (0, 1)"},
      {"regularizer.kind", "auto", "auto (per algorithm / problem), entropy or euclidean"},
      {"body.kind", "auto",
       "auto (simplex for regret runs, ball for convex runs), simplex, box or ball"},
      {"body.radius", "1", "radius of body.kind=ball"},
      {"schedule.kind", "auto",
       "auto (the algorithm's own) or constant, inv_sqrt, harmonic, power, anytime, doubling"},
      {"schedule.eta", "auto", "schedule base parameter; auto uses strategy.eta"},
      {"schedule.alpha", "auto", "power-schedule exponent; auto uses strategy.alpha"},
      {"env.kind", "iid", "iid or adversarial payoff stream"},
      {"env.M", "1", "dual-norm bound on payoffs"},
      {"env.seed", "auto", "stream / noise seed; auto uses seed"},
      {"env.noise_scale", "0.1", "noise amplitude per coordinate (stochastic runs)"},
      {"nodes_per_interval", "64", "Simpson panels per interval (even)"},
      {"continuous.tolerance", "1e-6", "allowed |lhs - rhs| per interval"},
      {"convex.method", "varstep", "varstep (gamma_k = eta/sqrt(k)) or vartemp (eta_n anytime)"},
      {"convex.problem", "quadratic",
       "quadratic (diag(1..2) curvature, minimiser inside the body) or distance"},
      {"convex.target_scale", "0.5", "length of the minimiser / target vector"},
      {"stochastic.replications", "200", "independent replications (>= 2)"},
      {"stochastic.z", "3", "standard errors of slack in the final-stage check"},
  };
  return keys;
}

namespace {

bool known_key(std::string_view key) {
  const auto& keys = config_keys();
  return std::any_of(keys.begin(), keys.end(), [&](const KeySpec& s) { return s.name == key; });
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!known_key(key)) {
      throw ConfigError("line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
    values[key] = value;
  }
  return values;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

ExperimentConfig::ExperimentConfig(Experiment experiment,
                                   std::map<std::string, std::string> values)
    : experiment_(experiment), values_(std::move(values)) {}

bool ExperimentConfig::has(const std::string& key) const { return values_.count(key) != 0; }

const std::string& ExperimentConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
  const std::string& raw = get(key);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
    throw ConfigError("key '" + key + "': '" + raw + "' is not a number");
  }
  return value;
}

std::uint64_t ExperimentConfig::get_uint(const std::string& key) const {
  const std::string& raw = get(key);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
    throw ConfigError("key '" + key + "': '" + raw + "' is not a nonnegative integer");
  }
  return value;
}

void ExperimentConfig::echo(std::ostream& os) const {
  os << "experiment = " << to_string(experiment_) << '\n';
  for (const auto& spec : config_keys()) {
    const auto it = values_.find(spec.name);
    os << spec.name << " = " << (it == values_.end() ? "<required>" : it->second) << '\n';
  }
}

ExperimentConfig resolve_config(Experiment experiment,
                                const std::map<std::string, std::string>& file_values,
                                const std::map<std::string, std::string>& overrides) {
  std::map<std::string, std::string> values;
  for (const auto& spec : config_keys()) {
    if (spec.default_value) values[spec.name] = *spec.default_value;
  }
  for (const auto* layer : {&file_values, &overrides}) {
    for (const auto& [key, value] : *layer) {
      if (!known_key(key)) throw ConfigError("unknown key '" + key + "'");
      values[key] = value;
    }
  }
  return ExperimentConfig(experiment, std::move(values));
}

}  // namespace noregret::cli
