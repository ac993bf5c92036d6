#include "artinlab/envelope.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "artinlab/errors.hpp"

namespace artinlab {

void ErrorBudget::validate() const
{
	if (alpha <= Rational(1, 2))
		throw domain_error("error budget: alpha must exceed 1/2");
	if (beta < 0 || gamma < 0)
		throw domain_error("error budget: beta and gamma must be non-negative");
	const Rational denom = beta + gamma + 1;
	if (Rational(1, 2) + (alpha - Rational(1, 2)) * (1 + gamma) / denom >= 1)
		throw domain_error("error budget: main exponent is not below 1");
	for (const auto &[ai, bi] : aux) {
		if (ai < 0 || bi < 0)
			throw domain_error("error budget: auxiliary exponents must be non-negative");
		if (ai - bi * (alpha - Rational(1, 2)) / denom >= 1)
			throw domain_error("error budget: auxiliary exponent is not below 1");
	}
}

EnvelopeExponents envelope_exponents(const ErrorBudget &budget)
{
	budget.validate();
	const Rational denom = budget.beta + budget.gamma + 1;
	EnvelopeExponents e;
	e.x_power = Rational(1, 2) + (budget.alpha - Rational(1, 2)) * (1 + budget.gamma) / denom;
	e.log_power = 1 - (1 + budget.gamma) / denom;
	e.y_power = 1 / denom;
	e.x_power.canonicalize();
	e.log_power.canonicalize();
	e.y_power.canonicalize();
	return e;
}

double cutoff_s(double x)
{
	if (!(x > 0))
		throw domain_error("cutoff_s: x must be positive");
	return 2 * std::sqrt(x);
}

double cutoff_y(double x, const ErrorBudget &budget)
{
	if (!(x > std::exp(1.0)))
		throw domain_error("cutoff_y: x must exceed e");
	auto e = envelope_exponents(budget);
	const double a = Rational(budget.alpha - Rational(1, 2)).get_d();
	return std::pow(std::pow(x, a) / std::log(x), e.y_power.get_d());
}

double error_envelope(double x, const ErrorBudget &budget)
{
	if (!(x > 1))
		throw domain_error("error_envelope: x must exceed 1");
	auto e = envelope_exponents(budget);
	return std::pow(x, e.x_power.get_d()) * std::pow(std::log(x), e.log_power.get_d());
}

double tail_envelope(double x, const ErrorBudget &budget, double e)
{
	return std::pow(cutoff_y(x, budget), 1 - e) * x / std::log(x);
}

ChebotarevEstimate chebotarev_error(double x, double class_size, double group_size, double log_disc,
                                    double degree_over_Q)
{
	if (!(x >= 2) || !(class_size > 0) || !(group_size > 0) || log_disc < 0 || !(degree_over_Q > 0))
		throw domain_error("chebotarev_error: inputs must be positive and x >= 2");
	const double ratio = class_size / group_size;
	return {ratio * log_integral(x), ratio * std::sqrt(x) * (log_disc + degree_over_Q * std::log(x))};
}

double discriminant_log_bound(unsigned n, double log_dK, const std::vector<unsigned long> &ramified_primes,
                              double degree_over_Q)
{
	if (n < 1)
		throw domain_error("discriminant_log_bound: n must be >= 1");
	double s = 0;
	for (unsigned long p : ramified_primes)
		s += std::log(static_cast<double>(p));
	return n * log_dK + degree_over_Q * (1 - 1.0 / n) * s + degree_over_Q * std::log(static_cast<double>(n));
}

double log_integral(double x)
{
	if (!(x >= 2))
		throw domain_error("log_integral: x must be >= 2");
	if (x == 2)
		return li2;
	auto f = [](double t) { return 1 / std::log(t); };
	double err = 0;
	double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 2.0, x, 30, 1e-13, &err);
	return li2 + v;
}

} // namespace artinlab
