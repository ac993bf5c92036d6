#pragma once

#include <utility>
#include <vector>

#include "artinlab/rational.hpp"

namespace artinlab {

/// Exponents (alpha, beta, gamma) of the main error budget and auxiliary pairs (alpha_i, beta_i).
struct ErrorBudget {
	Rational alpha = Rational(3, 2);
	Rational beta = 2;
	Rational gamma = 0;
	std::vector<std::pair<Rational, Rational>> aux{{Rational(1), Rational(1)}};

	/// The constants for elliptic curves: (3/2, 2, 0) with one auxiliary pair (1, 1).
	static ErrorBudget elliptic_default() { return {}; }
	/// Throws domain_error unless alpha > 1/2, the x exponent is below 1 and every auxiliary
	/// exponent alpha_i - beta_i (alpha - 1/2) / (gamma + beta + 1) is below 1.
	void validate() const;
};

struct EnvelopeExponents {
	Rational x_power;   ///< 1/2 + (alpha - 1/2)(1 + gamma) / (beta + gamma + 1)
	Rational log_power; ///< 1 - (1 + gamma) / (beta + gamma + 1)
	Rational y_power;   ///< 1 / (beta + gamma + 1), applied to x^(alpha - 1/2) / log x
};

EnvelopeExponents envelope_exponents(const ErrorBudget &budget);

/// Splitting cutoff 2 sqrt(x).
double cutoff_s(double x);

/// y(x) = (x^(alpha - 1/2) / log x)^(1 / (beta + gamma + 1)); needs x > e.
double cutoff_y(double x, const ErrorBudget &budget = {});

/// x^(x_power) (log x)^(log_power), constant 1. A trend shape, not a proven bound.
double error_envelope(double x, const ErrorBudget &budget = {});

/// y(x)^(1 - e) x / log x for a family with delta_k << k^(-e).
double tail_envelope(double x, const ErrorBudget &budget = {}, double e = 1.5);

struct ChebotarevEstimate {
	double main = 0;
	double envelope = 0;
};

/// (|C|/|G|) li(x) and the envelope (|C|/|G|) sqrt(x) (log_disc + degree log x), constant 1.
ChebotarevEstimate chebotarev_error(double x, double class_size, double group_size, double log_disc,
                                    double degree_over_Q);

/// n log d_K + degree (1 - 1/n) sum log p + degree log n.
double discriminant_log_bound(unsigned n, double log_dK, const std::vector<unsigned long> &ramified_primes,
                              double degree_over_Q);

/// li(2) = 1.0451637801174927848...
inline constexpr double li2 = 1.0451637801174927848445888891946131365226155781512;

/// li(x) = li(2) + integral from 2 to x of dt / log t. Throws domain_error for x < 2.
double log_integral(double x);

} // namespace artinlab
