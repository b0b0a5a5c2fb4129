#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

// Two cubic roots closer than the residue formula tolerates.
class DegenerateRoots : public Error
{
public:
	using Error::Error;
};

class GridTooCoarse : public Error
{
public:
	using Error::Error;
};

class InvalidInitialState : public Error
{
public:
	using Error::Error;
};

class WindowTooNarrow : public Error
{
public:
	using Error::Error;
};

// Oracle integration lost more norm than allowed; the step is too large.
class NormDrift : public Error
{
public:
	NormDrift(const std::string& what, double drift) : Error(what), drift_(drift) {}
	double drift() const { return drift_; }

private:
	double drift_;
};

class ConfigError : public Error
{
public:
	ConfigError(const std::string& field, const std::string& message)
		: Error(field + ": " + message), field_(field)
	{}
	const std::string& field() const { return field_; }

private:
	std::string field_;
};

class IoError : public Error
{
public:
	using Error::Error;
};

} // namespace zeno
