#pragma once

#include <stdexcept>
#include <string>

namespace artinlab {

/// Raised when an input exceeds a configured size limit (sieve bound, enumeration size).
class capacity_error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Raised for invalid experiment configuration or malformed user input.
class config_error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Raised when a function is evaluated outside its domain.
class domain_error : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// The prime lies in the excluded set (bad reduction, 2, ramified in F, or a point denominator).
class excluded_prime : public std::runtime_error {
public:
	explicit excluded_prime(std::uint64_t p, const std::string &why)
	    : std::runtime_error("prime " + std::to_string(p) + " excluded: " + why), prime(p)
	{
	}
	std::uint64_t prime;
};

} // namespace artinlab
