#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zeno/channel.hpp"
#include "zeno/model.hpp"

namespace zeno {

enum class Command { Populations, TraceDistance, BlpSweep, BlochMap, Validate };

std::string to_string(Command c);
Command command_from_string(const std::string& name);

// Fully resolved scenario. lambda = 1 throughout; every quantity is in units
// of lambda (times are lambda t).
struct ScenarioConfig
{
	Command command = Command::Populations;
	std::vector<CavityTag> regimes{CavityTag::Good};
	std::optional<double> gamma_over_lambda; // only with regime = custom
	std::vector<double> g_over_lambda{1.0};
	double t_max_lambda = 20.0;
	std::size_t n_grid = 4001;
	std::size_t n_samples = 500;
	std::uint64_t seed = 42;
	std::string out;

	// command-specific
	std::array<double, 3> direction{0.0, 0.0, 1.0}; // trace-distance
	std::size_t n_modes = 2000;                       // validate
	double window_lambda = 50.0;                      // validate
	double oracle_step = 0.0;                         // validate; 0 = 0.001/max(1, g, gamma)
	int romberg_levels = 3;
	unsigned threads = 0;

	CavityRegime regime(CavityTag tag) const;
	CavityRegime regime() const { return regime(regimes.front()); }
	TimeGrid grid() const { return {t_max_lambda, n_grid}; }
	ChannelOptions channel_options() const { return {romberg_levels, Quadrature::Fast}; }

	// Throws ConfigError naming the offending field.
	void validate() const;

	// "# key = value" lines echoing every resolved setting.
	std::vector<std::string> header_lines() const;
};

// Defaults for a command: couplings, regimes and output file.
ScenarioConfig default_config(Command c);

using ConfigValues = std::map<std::string, std::string>;

// Parses "key = value" lines; '#' starts a comment. Unknown keys and
// duplicate keys raise ConfigError.
ConfigValues parse_config_text(const std::string& text);
ConfigValues read_config_file(const std::string& path);

// Applies values on top of cfg (later calls win). Throws ConfigError.
void apply_config(ScenarioConfig& cfg, const ConfigValues& values);

// Shortest round-trip-stable rendering used in every output file.
std::string format_number(double x);

} // namespace zeno
