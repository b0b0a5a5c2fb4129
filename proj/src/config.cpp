#include "zeno/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

const std::set<std::string>& known_keys()
{
	static const std::set<std::string> keys{
		"regime", "gamma_over_lambda", "g_over_lambda", "t_max_lambda", "n_grid", "n_samples",
		"seed", "out", "direction", "n_modes", "window_lambda", "oracle_step", "romberg_levels",
		"threads"};
	return keys;
}

std::string trim(const std::string& s)
{
	const auto first = s.find_first_not_of(" \t\r\n");
	if (first == std::string::npos)
		return {};
	const auto last = s.find_last_not_of(" \t\r\n");
	return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s)
{
	std::vector<std::string> out;
	std::string item;
	std::istringstream in(s);
	while (std::getline(in, item, ',')) {
		item = trim(item);
		if (!item.empty())
			out.push_back(item);
	}
	return out;
}

double parse_double(const std::string& key, const std::string& text)
{
	const std::string t = trim(text);
	char* end = nullptr;
	errno = 0;
	const double v = std::strtod(t.c_str(), &end);
	if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
		throw ConfigError(key, "expected a number, got '" + text + "'");
	return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text)
{
	const std::string t = trim(text);
	if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
		throw ConfigError(key, "expected a nonnegative integer, got '" + text + "'");
	errno = 0;
	const auto v = std::strtoull(t.c_str(), nullptr, 10);
	if (errno == ERANGE)
		throw ConfigError(key, "integer out of range");
	return v;
}

CavityTag parse_regime(const std::string& text)
{
	if (text == "good")
		return CavityTag::Good;
	if (text == "bad")
		return CavityTag::Bad;
	if (text == "custom")
		return CavityTag::Custom;
	throw ConfigError("regime", "expected good, bad or custom, got '" + text + "'");
}

} // namespace

std::string to_string(Command c)
{
	switch (c) {
	case Command::Populations: return "populations";
	case Command::TraceDistance: return "trace-distance";
	case Command::BlpSweep: return "blp-sweep";
	case Command::BlochMap: return "bloch-map";
	case Command::Validate: return "validate";
	}
	return "populations";
}

Command command_from_string(const std::string& name)
{
	for (auto c : {Command::Populations, Command::TraceDistance, Command::BlpSweep,
	               Command::BlochMap, Command::Validate})
		if (to_string(c) == name)
			return c;
	throw ConfigError("command", "unknown command '" + name + "'");
}

std::string format_number(double x)
{
	if (x == 0.0)
		return "0"; // also folds -0
	char buf[64];
	for (int precision = 6; precision <= 17; ++precision) {
		std::snprintf(buf, sizeof buf, "%.*g", precision, x);
		if (std::strtod(buf, nullptr) == x)
			break;
	}
	return buf;
}

CavityRegime ScenarioConfig::regime(CavityTag tag) const
{
	switch (tag) {
	case CavityTag::Good: return CavityRegime::good();
	case CavityTag::Bad: return CavityRegime::bad();
	case CavityTag::Custom:
		if (!gamma_over_lambda)
			throw ConfigError("gamma_over_lambda", "required when regime = custom");
		return CavityRegime::custom(*gamma_over_lambda);
	}
	return CavityRegime::good();
}

ScenarioConfig default_config(Command c)
{
	ScenarioConfig cfg;
	cfg.command = c;
	switch (c) {
	case Command::Populations:
		cfg.g_over_lambda = {1.0};
		cfg.out = "populations.csv";
		break;
	case Command::TraceDistance:
		cfg.g_over_lambda = {1.0, 10.0};
		cfg.out = "trace_distance.csv";
		break;
	case Command::BlpSweep:
		cfg.regimes = {CavityTag::Good, CavityTag::Bad};
		cfg.g_over_lambda = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};
		cfg.out = "blp_sweep.csv";
		break;
	case Command::BlochMap:
		cfg.g_over_lambda = {10.0};
		cfg.out = "bloch_map.csv";
		break;
	case Command::Validate:
		cfg.g_over_lambda = {10.0};
		cfg.out = "validate.txt";
		break;
	}
	return cfg;
}

void ScenarioConfig::validate() const
{
	if (regimes.empty())
		throw ConfigError("regime", "at least one regime is required");
	const bool sweep = command == Command::BlpSweep;
	if (!sweep && regimes.size() != 1)
		throw ConfigError("regime", "this command takes a single regime");
	if (sweep && regimes.size() > 2)
		throw ConfigError("regime", "blp-sweep takes one or two regimes");
	for (std::size_t i = 0; i < regimes.size(); ++i)
		for (std::size_t j = i + 1; j < regimes.size(); ++j)
			if (regimes[i] == regimes[j])
				throw ConfigError("regime", "regimes must be distinct");
	const bool custom = std::find(regimes.begin(), regimes.end(), CavityTag::Custom) != regimes.end();
	if (custom && !gamma_over_lambda)
		throw ConfigError("gamma_over_lambda", "required when regime = custom");
	if (!custom && gamma_over_lambda)
		throw ConfigError("gamma_over_lambda", "only allowed with regime = custom");
	if (gamma_over_lambda && !(*gamma_over_lambda >= 0.0))
		throw ConfigError("gamma_over_lambda", "must be nonnegative");

	for (std::size_t i = 0; i < g_over_lambda.size(); ++i) {
		if (!(g_over_lambda[i] >= 0.0))
			throw ConfigError("g_over_lambda", "values must be nonnegative");
		if (i > 0 && !(g_over_lambda[i] > g_over_lambda[i - 1]))
			throw ConfigError("g_over_lambda", "sweep lists must be sorted ascending without repeats");
	}
	const bool single_g = command == Command::Populations || command == Command::BlochMap
	                      || command == Command::Validate;
	if (single_g && g_over_lambda.size() != 1)
		throw ConfigError("g_over_lambda", "this command takes a single value");
	if (command == Command::TraceDistance && g_over_lambda.empty())
		throw ConfigError("g_over_lambda", "at least one value is required");

	if (!(t_max_lambda > 0.0))
		throw ConfigError("t_max_lambda", "must be positive");
	if (n_grid < 2)
		throw ConfigError("n_grid", "must be at least 2");
	if (n_samples < 1)
		throw ConfigError("n_samples", "must be at least 1");
	if (out.empty())
		throw ConfigError("out", "must not be empty");
	const double norm = std::sqrt(direction[0] * direction[0] + direction[1] * direction[1]
	                              + direction[2] * direction[2]);
	if (!(norm > 0.0))
		throw ConfigError("direction", "must be a nonzero vector");
	if (n_modes < 100)
		throw ConfigError("n_modes", "must be at least 100");
	if (!(window_lambda >= 20.0))
		throw ConfigError("window_lambda", "must be at least 20");
	if (!(oracle_step >= 0.0))
		throw ConfigError("oracle_step", "must be nonnegative (0 selects the default)");
	if (romberg_levels < 1 || romberg_levels > 6)
		throw ConfigError("romberg_levels", "must be between 1 and 6");
}

std::vector<std::string> ScenarioConfig::header_lines() const
{
	auto join = [](const auto& xs, auto&& fmt) {
		std::string s;
		for (std::size_t i = 0; i < xs.size(); ++i)
			s += (i ? "," : "") + fmt(xs[i]);
		return s;
	};
	const auto num = [](double x) { return format_number(x); };
	std::vector<std::string> lines;
	lines.push_back("# command = " + to_string(command));
	lines.push_back("# regime = " + join(regimes, [](CavityTag t) { return to_string(t); }));
	lines.push_back("# gamma_over_lambda = "
	                + join(regimes, [&](CavityTag t) { return format_number(regime(t).ratio); }));
	lines.push_back("# g_over_lambda = " + join(g_over_lambda, num));
	lines.push_back("# t_max_lambda = " + format_number(t_max_lambda));
	lines.push_back("# n_grid = " + std::to_string(n_grid));
	lines.push_back("# n_samples = " + std::to_string(n_samples));
	lines.push_back("# seed = " + std::to_string(seed));
	lines.push_back("# out = " + out);
	lines.push_back("# direction = " + join(direction, num));
	lines.push_back("# n_modes = " + std::to_string(n_modes));
	lines.push_back("# window_lambda = " + format_number(window_lambda));
	lines.push_back("# oracle_step = " + format_number(oracle_step));
	lines.push_back("# romberg_levels = " + std::to_string(romberg_levels));
	return lines;
}

ConfigValues parse_config_text(const std::string& text)
{
	ConfigValues values;
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		if (const auto hash = line.find('#'); hash != std::string::npos)
			line.erase(hash);
		line = trim(line);
		if (line.empty())
			continue;
		const auto eq = line.find('=');
		if (eq == std::string::npos)
			throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
		const std::string key = trim(line.substr(0, eq));
		const std::string value = trim(line.substr(eq + 1));
		if (!known_keys().contains(key))
			throw ConfigError(key, "unknown configuration key");
		if (values.contains(key))
			throw ConfigError(key, "given more than once");
		values[key] = value;
	}
	return values;
}

ConfigValues read_config_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw ConfigError("config", "cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return parse_config_text(ss.str());
}

void apply_config(ScenarioConfig& cfg, const ConfigValues& values)
{
	for (const auto& [key, value] : values) {
		if (!known_keys().contains(key))
			throw ConfigError(key, "unknown configuration key");
		if (key == "regime") {
			cfg.regimes.clear();
			for (const auto& item : split_list(value))
				cfg.regimes.push_back(parse_regime(item));
			if (cfg.regimes.empty())
				throw ConfigError(key, "empty value");
		} else if (key == "gamma_over_lambda") {
			cfg.gamma_over_lambda = parse_double(key, value);
		} else if (key == "g_over_lambda") {
			cfg.g_over_lambda.clear();
			for (const auto& item : split_list(value))
				cfg.g_over_lambda.push_back(parse_double(key, item));
		} else if (key == "t_max_lambda") {
			cfg.t_max_lambda = parse_double(key, value);
		} else if (key == "n_grid") {
			cfg.n_grid = parse_unsigned(key, value);
		} else if (key == "n_samples") {
			cfg.n_samples = parse_unsigned(key, value);
		} else if (key == "seed") {
			cfg.seed = parse_unsigned(key, value);
		} else if (key == "out") {
			cfg.out = value;
		} else if (key == "direction") {
			const auto items = split_list(value);
			if (items.size() != 3)
				throw ConfigError(key, "expected three comma-separated components");
			for (int i = 0; i < 3; ++i)
				cfg.direction[i] = parse_double(key, items[i]);
		} else if (key == "n_modes") {
			cfg.n_modes = parse_unsigned(key, value);
		} else if (key == "window_lambda") {
			cfg.window_lambda = parse_double(key, value);
		} else if (key == "oracle_step") {
			cfg.oracle_step = parse_double(key, value);
		} else if (key == "romberg_levels") {
			cfg.romberg_levels = static_cast<int>(parse_unsigned(key, value));
		} else if (key == "threads") {
			cfg.threads = static_cast<unsigned>(parse_unsigned(key, value));
		}
	}
}

} // namespace zeno
