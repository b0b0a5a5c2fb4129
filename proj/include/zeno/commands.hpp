#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zeno/config.hpp"

namespace zeno {

// Comma-separated table preceded by a '#' header block.
struct Table
{
	std::vector<std::string> header; // comment lines, each starting with '#'
	std::vector<std::string> columns;
	std::vector<std::vector<std::string>> rows;

	void write(std::ostream& os) const;
};

// Writes to `path`, or to stdout when path is "-". Throws IoError.
void write_table(const Table& table, const std::string& path);

Table populations_table(const ScenarioConfig& cfg);
Table trace_distance_table(const ScenarioConfig& cfg);

struct SweepTables
{
	Table measure;    // g_over_lambda, N_<regime>...
	Table directions; // best direction per (regime, g)
};
SweepTables blp_sweep_tables(const ScenarioConfig& cfg);

Table bloch_map_table(const ScenarioConfig& cfg);

struct ValidationCheck
{
	std::string name;
	bool passed = false;
	double value = 0.0;
	double tolerance = 0.0;
	std::string detail;
};

struct ValidationReport
{
	std::vector<ValidationCheck> checks;
	std::vector<std::string> warnings;

	bool passed() const;
	void write(std::ostream& os, const std::vector<std::string>& header) const;
};

// Oracle cross-checks for the configured regime and coupling.
ValidationReport run_validation(const ScenarioConfig& cfg);

// Companion path for the per-g best directions: "<stem>_directions.csv".
std::string directions_path(const std::string& out);

// Runs the configured command and writes its output files. Returns the
// process exit status (0, or 3 for a failed validation).
int run_command(const ScenarioConfig& cfg);

} // namespace zeno
