#include "zeno/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "zeno/blp.hpp"
#include "zeno/errors.hpp"
#include "zeno/oracle.hpp"
#include "zeno/parallel.hpp"

namespace zeno {

void Table::write(std::ostream& os) const
{
	for (const auto& line : header)
		os << line << '\n';
	for (std::size_t i = 0; i < columns.size(); ++i)
		os << (i ? "," : "") << columns[i];
	os << '\n';
	for (const auto& row : rows) {
		for (std::size_t i = 0; i < row.size(); ++i)
			os << (i ? "," : "") << row[i];
		os << '\n';
	}
}

namespace {

template <typename Writer>
void write_output(const std::string& path, Writer&& writer)
{
	if (path == "-") {
		writer(std::cout);
		std::cout.flush();
		return;
	}
	std::ofstream os(path, std::ios::binary | std::ios::trunc);
	if (!os)
		throw IoError("cannot open '" + path + "' for writing");
	writer(os);
	os.flush();
	if (!os)
		throw IoError("failed writing '" + path + "'");
}

std::vector<std::string> row_of(std::initializer_list<double> xs)
{
	std::vector<std::string> out;
	for (double x : xs)
		out.push_back(format_number(x));
	return out;
}

ModelParams params_for(const ScenarioConfig& cfg, CavityTag tag, double g)
{
	return cfg.regime(tag).params(g);
}

} // namespace

void write_table(const Table& table, const std::string& path)
{
	write_output(path, [&](std::ostream& os) { table.write(os); });
}

std::string directions_path(const std::string& out)
{
	if (out == "-")
		return "-";
	const auto slash = out.find_last_of('/');
	const auto dot = out.find_last_of('.');
	if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
		return out.substr(0, dot) + "_directions" + out.substr(dot);
	return out + "_directions.csv";
}

Table populations_table(const ScenarioConfig& cfg)
{
	cfg.validate();
	const auto p = params_for(cfg, cfg.regimes.front(), cfg.g_over_lambda.front());
	const ChannelCoefficients coeffs(p, cfg.grid(), cfg.channel_options());

	Table t;
	t.header = cfg.header_lines();
	t.header.push_back("# initial state = |a><a|");
	t.columns = {"lambda_t", "pop_a", "pop_b_total", "pop_m_total"};
	for (std::size_t k = 0; k < coeffs.size(); ++k) {
		const auto rho = evolve_state(BlockState::excited(), coeffs, k);
		t.rows.push_back(row_of({coeffs.grid().time(k), rho(0, 0).real(), rho(1, 1).real(),
		                         rho(2, 2).real()}));
	}
	return t;
}

Table trace_distance_table(const ScenarioConfig& cfg)
{
	cfg.validate();
	const auto dir = BlochDirection::normalized(cfg.direction[0], cfg.direction[1], cfg.direction[2]);
	std::vector<std::vector<double>> columns(cfg.g_over_lambda.size());
	parallel_for(cfg.g_over_lambda.size(), cfg.threads, [&](std::size_t i) {
		const auto p = params_for(cfg, cfg.regimes.front(), cfg.g_over_lambda[i]);
		const ChannelCoefficients coeffs(p, cfg.grid(), cfg.channel_options());
		columns[i] = trace_distance_trajectory(dir, coeffs);
	});

	Table t;
	t.header = cfg.header_lines();
	t.columns = {"lambda_t"};
	for (double g : cfg.g_over_lambda)
		t.columns.push_back("D_g" + format_number(g));
	const TimeGrid grid = cfg.grid();
	for (std::size_t k = 0; k < grid.size(); ++k) {
		std::vector<std::string> row{format_number(grid.time(k))};
		for (const auto& col : columns)
			row.push_back(format_number(col[k]));
		t.rows.push_back(std::move(row));
	}
	return t;
}

SweepTables blp_sweep_tables(const ScenarioConfig& cfg)
{
	cfg.validate();
	BlpProtocol protocol;
	protocol.grid = cfg.grid();
	protocol.n_samples = cfg.n_samples;
	protocol.seed = cfg.seed;
	protocol.channel = cfg.channel_options();
	protocol.threads = cfg.threads;

	std::vector<std::vector<std::pair<double, BlpResult>>> per_regime;
	for (CavityTag tag : cfg.regimes)
		per_regime.push_back(blp_sweep(cfg.regime(tag).params(0.0), cfg.g_over_lambda, protocol));

	SweepTables out;
	out.measure.header = cfg.header_lines();
	out.measure.header.push_back("# N is the largest accumulated trace-distance increase over the "
	                             "sampled directions (a lower bound on the supremum)");
	out.measure.columns = {"g_over_lambda"};
	for (CavityTag tag : cfg.regimes)
		out.measure.columns.push_back("N_" + to_string(tag));
	for (std::size_t i = 0; i < cfg.g_over_lambda.size(); ++i) {
		std::vector<std::string> row{format_number(cfg.g_over_lambda[i])};
		for (const auto& sweep : per_regime)
			row.push_back(format_number(sweep[i].second.value));
		out.measure.rows.push_back(std::move(row));
	}

	out.directions.header = cfg.header_lines();
	out.directions.columns = {"regime", "g_over_lambda", "rx", "ry", "rz", "N"};
	for (std::size_t r = 0; r < cfg.regimes.size(); ++r) {
		for (const auto& [g, result] : per_regime[r]) {
			const auto& d = result.best_direction;
			out.directions.rows.push_back({to_string(cfg.regimes[r]), format_number(g),
			                               format_number(d.x()), format_number(d.y()),
			                               format_number(d.z()), format_number(result.value)});
		}
	}
	return out;
}

Table bloch_map_table(const ScenarioConfig& cfg)
{
	cfg.validate();
	const auto p = params_for(cfg, cfg.regimes.front(), cfg.g_over_lambda.front());
	const ChannelCoefficients coeffs(p, cfg.grid(), cfg.channel_options());
	const auto directions = sample_directions(cfg.n_samples, cfg.seed);
	const auto result = blp_measure(coeffs, directions, cfg.threads);

	Table t;
	t.header = cfg.header_lines();
	t.columns = {"rx", "ry", "rz", "raw_value", "normalized_value"};
	for (const auto& dv : result.per_direction)
		t.rows.push_back(row_of({dv.direction.x(), dv.direction.y(), dv.direction.z(), dv.raw,
		                         dv.normalized}));
	return t;
}

bool ValidationReport::passed() const
{
	for (const auto& c : checks)
		if (!c.passed)
			return false;
	return true;
}

void ValidationReport::write(std::ostream& os, const std::vector<std::string>& header) const
{
	for (const auto& line : header)
		os << line << '\n';
	for (const auto& w : warnings)
		os << "WARNING " << w << '\n';
	for (const auto& c : checks) {
		os << (c.passed ? "PASS " : "FAIL ") << c.name << ": value=" << format_number(c.value)
		   << " tolerance=" << format_number(c.tolerance);
		if (!c.detail.empty())
			os << " (" << c.detail << ")";
		os << '\n';
	}
	os << (passed() ? "RESULT PASS" : "RESULT FAIL") << '\n';
}

namespace {

struct OracleRun
{
	std::optional<OracleTrajectory> trajectory;
	std::string error;
	double drift = 0.0;
};

OracleRun run_oracle(const ScenarioConfig& cfg, const ModelParams& p, std::size_t n_modes,
                     complex_t alpha0, complex_t beta0)
{
	const auto bath = discretize_bath(p, n_modes, cfg.window_lambda);
	const double step = cfg.oracle_step > 0.0 ? cfg.oracle_step : default_oracle_step(p);
	OracleRun run;
	try {
		run.trajectory = integrate_full(bath, p, FullState::initial(bath.count(), alpha0, beta0),
		                                cfg.grid(), step);
		run.drift = run.trajectory->max_norm_drift;
	} catch (const NormDrift& e) {
		run.error = std::string("NormDrift: ") + e.what();
		run.drift = e.drift();
	}
	return run;
}

void add_check(ValidationReport& report, std::string name, double value, double tol,
               std::string detail = {})
{
	report.checks.push_back({std::move(name), value <= tol, value, tol, std::move(detail)});
}

void add_drift_check(ValidationReport& report, const std::string& label, const OracleRun& run)
{
	if (!run.trajectory)
		report.checks.push_back({label + "_norm_drift", false, run.drift, 1e-6, run.error});
	else
		add_check(report, label + "_norm_drift", run.drift, 1e-6);
}

} // namespace

ValidationReport run_validation(const ScenarioConfig& cfg)
{
	cfg.validate();
	ValidationReport report;
	const double g = cfg.g_over_lambda.front();
	const auto p = params_for(cfg, cfg.regimes.front(), g);
	const TimeGrid grid = cfg.grid();

	{
		const auto bath = discretize_bath(p, cfg.n_modes, cfg.window_lambda);
		if (bath.recurrence_time() <= cfg.t_max_lambda)
			report.warnings.push_back("bath recurrence time " + format_number(bath.recurrence_time())
			                          + " does not exceed t_max; increase n_modes");
	}

	// gamma = 0: the excited state is decoupled and must not move.
	{
		const auto p0 = p.with_gamma(0.0);
		const auto run = run_oracle(cfg, p0, kMinModes, 1.0, 0.0);
		add_drift_check(report, "trivial", run);
		if (run.trajectory) {
			double dev = 0.0;
			for (const auto& s : run.trajectory->samples)
				dev = std::max(dev, std::abs(s.alpha - 1.0));
			add_check(report, "trivial_alpha_frozen", dev, 1e-8);
		}
	}

	// g = 0: two-level damped decay against the residue formula.
	{
		const auto p0 = p.with_g(0.0);
		const GreenFunction green(p0);
		const auto run = run_oracle(cfg, p0, cfg.n_modes, 1.0, 0.0);
		add_drift_check(report, "two_level", run);
		if (run.trajectory) {
			double dev = 0.0;
			for (const auto& s : run.trajectory->samples)
				dev = std::max(dev, std::abs(std::abs(s.alpha) - std::abs(green(s.time))));
			add_check(report, "two_level_alpha", dev, 1e-3);
		}
	}

	// Configured parameters, superposition initial state touching every entry.
	{
		const complex_t alpha0 = std::sqrt(0.6);
		const complex_t beta0 = std::polar(std::sqrt(0.4), 1.0);
		const auto run = run_oracle(cfg, p, cfg.n_modes, alpha0, beta0);
		add_drift_check(report, "channel", run);
		if (run.trajectory) {
			const ChannelCoefficients coeffs(p, grid, cfg.channel_options());
			const BlockState rho0{std::norm(alpha0), alpha0 * std::conj(beta0), std::norm(beta0)};
			const double a2 = std::norm(alpha0);
			double rho_dev = 0.0, green_dev = 0.0, bath_dev = 0.0;
			for (std::size_t k = 0; k < grid.size(); ++k) {
				const auto& s = run.trajectory->samples[k];
				const auto rho = evolve_state(rho0, coeffs, k);
				const auto ref = s.reduced_density();
				for (int i = 0; i < 3; ++i)
					for (int j = 0; j < 3; ++j)
						rho_dev = std::max(rho_dev, std::abs(rho(i, j) - ref(i, j)));
				green_dev = std::max(green_dev, std::abs(alpha0 * coeffs.green(k) - s.alpha));
				const auto& m = coeffs.moments(k);
				bath_dev = std::max({bath_dev, std::abs(a2 * m.pop_b - s.pop_b),
				                     std::abs(a2 * m.pop_m - s.pop_m),
				                     std::abs(a2 * m.coh_bm - s.coh_bm)});
			}
			add_check(report, "green_function", green_dev, 1e-3);
			add_check(report, "bath_moments", bath_dev, 1e-3);
			add_check(report, "density_matrix", rho_dev, 1e-3);
		}
	}
	return report;
}

int run_command(const ScenarioConfig& cfg)
{
	cfg.validate();
	switch (cfg.command) {
	case Command::Populations:
		write_table(populations_table(cfg), cfg.out);
		return 0;
	case Command::TraceDistance:
		write_table(trace_distance_table(cfg), cfg.out);
		return 0;
	case Command::BlpSweep: {
		const auto tables = blp_sweep_tables(cfg);
		write_table(tables.measure, cfg.out);
		if (cfg.out != "-")
			write_table(tables.directions, directions_path(cfg.out));
		return 0;
	}
	case Command::BlochMap:
		write_table(bloch_map_table(cfg), cfg.out);
		return 0;
	case Command::Validate: {
		const auto report = run_validation(cfg);
		write_output(cfg.out, [&](std::ostream& os) { report.write(os, cfg.header_lines()); });
		return report.passed() ? 0 : 3;
	}
	}
	return 0;
}

} // namespace zeno
