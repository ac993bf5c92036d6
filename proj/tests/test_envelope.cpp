#include "doctest.h"

#include <cmath>

#include <boost/math/special_functions/expint.hpp>

#include "artinlab/envelope.hpp"
#include "artinlab/errors.hpp"
#include "artinlab/primes.hpp"

using namespace artinlab;

TEST_CASE("cutoffs")
{
	CHECK(cutoff_s(4) == doctest::Approx(4));
	CHECK(cutoff_s(1e6) == doctest::Approx(2000));
	CHECK(cutoff_y(1e6) == doctest::Approx(std::cbrt(1e6 / std::log(1e6))));
	CHECK(std::abs(cutoff_y(1e6) - 41.7) < 0.05);
	double prev = cutoff_y(10);
	for (double x = 20; x < 1e9; x *= 1.7) {
		double y = cutoff_y(x);
		CHECK(y > prev);
		prev = y;
	}
	CHECK_THROWS_AS(cutoff_y(2), domain_error);
}

TEST_CASE("budget and exponents")
{
	auto b = ErrorBudget::elliptic_default();
	CHECK_NOTHROW(b.validate());
	auto e = envelope_exponents(b);
	CHECK(e.x_power == Rational(5, 6));
	CHECK(e.log_power == Rational(2, 3));
	CHECK(e.y_power == Rational(1, 3));
	ErrorBudget bad;
	bad.alpha = Rational(1, 2);
	CHECK_THROWS_AS(bad.validate(), domain_error);
	ErrorBudget bad_aux;
	bad_aux.aux = {{Rational(2), Rational(0)}};
	CHECK_THROWS_AS(bad_aux.validate(), domain_error);
	ErrorBudget too_big;
	too_big.alpha = 5;
	too_big.beta = 0;
	CHECK_THROWS_AS(too_big.validate(), domain_error);
}

TEST_CASE("envelopes")
{
	double x = 1e6;
	CHECK(error_envelope(x) == doctest::Approx(std::pow(x, 5.0 / 6) * std::pow(std::log(x), 2.0 / 3)));
	CHECK(tail_envelope(x) == doctest::Approx(std::pow(x / std::log(x), 5.0 / 6)));
	auto rel = [](double t) { return error_envelope(t) / (t / std::log(t)); };
	CHECK(rel(1e8) < rel(1e6));
}

TEST_CASE("chebotarev envelope")
{
	auto full = chebotarev_error(1e5, 6, 6, 1, 1);
	CHECK(full.main == doctest::Approx(log_integral(1e5)));
	auto e = chebotarev_error(1e4, 1, 6, 10, 12);
	CHECK(e.envelope == doctest::Approx(100.0 / 6 * (10 + 12 * std::log(1e4))));
	auto e2 = chebotarev_error(1e4, 2, 6, 10, 12);
	CHECK(e2.envelope == doctest::Approx(2 * e.envelope));
}

TEST_CASE("discriminant bound")
{
	CHECK(discriminant_log_bound(1, 3.5, {2, 3}, 4) == doctest::Approx(3.5));
	double want = 6 * (5.0 / 6) * (std::log(2.0) + std::log(37.0)) + 6 * std::log(6.0);
	CHECK(discriminant_log_bound(6, 0, {2, 37}, 6) == doctest::Approx(want));
	CHECK(discriminant_log_bound(6, 0, {2, 37, 41}, 6) > discriminant_log_bound(6, 0, {2, 37}, 6));
}

TEST_CASE("logarithmic integral")
{
	CHECK(log_integral(2) == li2);
	CHECK(li2 == doctest::Approx(boost::math::expint(std::log(2.0))).epsilon(1e-14));
	for (double x : {3.0, 10.0, 1e3, 1e6, 1e9}) {
		double want = boost::math::expint(std::log(x));
		CHECK(std::abs(log_integral(x) - want) / want < 1e-10);
	}
	double li6 = log_integral(1e6);
	double pi6 = static_cast<double>(sieve_primes({2, 1000000}).size());
	CHECK(pi6 == 78498);
	CHECK(std::abs(li6 - pi6) / pi6 < 0.005);
	double prev = li2;
	for (double x = 2.5; x < 1e7; x *= 3) {
		CHECK(log_integral(x) > prev);
		prev = log_integral(x);
	}
	CHECK_THROWS_AS(log_integral(1.5), domain_error);
}
