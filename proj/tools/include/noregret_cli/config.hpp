#pragma once

// Flat key=value experiment configuration. Every key has an explicit default
// except the required ones; the parsed config echoes all values.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace noregret::cli {

enum class Experiment { regret, continuous_check, convex, stochastic };

std::string_view to_string(Experiment experiment);

/// Raised for unknown keys, malformed values and missing required keys.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeySpec {
  std::string name;
  /// nullopt marks a required key.
  std::optional<std::string> default_value;
  std::string help;
};

/// All recognised keys, in echo order.
const std::vector<KeySpec>& config_keys();

/// Parses "key = value" lines; '#' starts a comment, blank lines are skipped.
/// Unknown keys raise ConfigError with the line number.
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// parse_config_text on a file's contents.
std::map<std::string, std::string> load_config_file(const std::string& path);

class ExperimentConfig {
 public:
  ExperimentConfig(Experiment experiment, std::map<std::string, std::string> values);

  Experiment experiment() const noexcept { return experiment_; }

  /// Raw value; throws ConfigError naming the key if it is unset.
  const std::string& get(const std::string& key) const;
  double get_double(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key) const;
  bool has(const std::string& key) const;

  /// "key = value" per line, every key, unset required keys as "<required>".
  void echo(std::ostream& os) const;

 private:
  Experiment experiment_;
  std::map<std::string, std::string> values_;
};

/// Defaults overlaid with `file_values` and then `overrides`.
ExperimentConfig resolve_config(Experiment experiment,
                                const std::map<std::string, std::string>& file_values,
                                const std::map<std::string, std::string>& overrides);

}  // namespace noregret::cli
