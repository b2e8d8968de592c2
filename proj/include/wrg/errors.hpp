#pragma once

#include <stdexcept>
#include <string>

namespace wrg {

/// Raised when a configured cap or search budget is exceeded
/// (vertex caps, enumeration caps, minor-search node budgets).
class ResourceError : public std::runtime_error
{
public:
	explicit ResourceError(const std::string& what)
		: std::runtime_error(what)
	{
	}
};

/// Raised when an iterative numerical routine fails to converge.
class ConvergenceError : public std::runtime_error
{
public:
	explicit ConvergenceError(const std::string& what)
		: std::runtime_error(what)
	{
	}
};

} // namespace wrg
