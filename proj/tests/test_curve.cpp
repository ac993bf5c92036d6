#include "doctest.h"

#include "artinlab/errors.hpp"
#include "artinlab/point_count.hpp"
#include "artinlab/primes.hpp"
#include "oracles/brute_force.hpp"

using namespace artinlab;

TEST_CASE("reduce_curve excluded set")
{
	auto E = make_curve(-1, 0);
	auto rc = reduce_curve(E, 5);
	CHECK(rc.p == 5);
	CHECK(rc.a == 4);
	CHECK(rc.b == 0);
	CHECK_THROWS_AS(reduce_curve(E, 2), excluded_prime);

	auto F = make_curve(0, 1);
	CHECK(F.disc_core() == 27);
	CHECK(mpz_class(-16) * F.disc_core() == -432);
	CHECK_THROWS_AS(reduce_curve(F, 3), excluded_prime);
	CHECK_NOTHROW(reduce_curve(F, 5));

	// p | f is ramified in the congruence field
	CHECK_THROWS_AS(reduce_curve(F, 5, 20), excluded_prime);
	CHECK(is_excluded(F, 5, 20));
}

TEST_CASE("curve validation")
{
	CHECK_THROWS_AS(make_curve(0, 0), config_error);
	CHECK_THROWS_AS(make_curve(-3, 2), config_error); // 4(-27) + 27*4 = 0
	CHECK_THROWS_AS(make_curve(1, 1, {parse_point("1,1")}), config_error);
	CHECK_NOTHROW(make_curve(1, 1, {parse_point("0,1")}));
	CHECK_THROWS_AS(parse_point("12"), config_error);
}

TEST_CASE("point denominators extend the excluded set")
{
	// 2P for P = (3,5) on y^2 = x^3 - 2
	auto E = make_curve(0, -2, {parse_point("129/100,-383/1000")});
	CHECK(is_excluded(E, 5, 1));
	CHECK_FALSE(is_excluded(E, 7, 1));
	auto rc = reduce_curve(E, 7);
	auto pts = reduce_points(E, rc);
	CHECK(on_curve(rc, pts[0]));
}

TEST_CASE("count_points small examples")
{
	auto pc = count_points(reduce_curve(make_curve(0, 1), 5));
	CHECK(pc.n == 6);
	CHECK(pc.a_p == 0);
	auto pc2 = count_points(reduce_curve(make_curve(-1, 0), 5));
	CHECK(pc2.n == 8);
	CHECK(pc2.a_p == -2);
	// same values from the brute-force oracle
	CHECK(oracle::BruteGroup(reduce_curve(make_curve(0, 1), 5)).size() == 6);
	CHECK(oracle::BruteGroup(reduce_curve(make_curve(-1, 0), 5)).size() == 8);
}

TEST_CASE("count_points agrees with enumeration and Hasse bound")
{
	const std::vector<std::pair<i64, i64>> curves = {{1, 1}, {-1, 0}, {0, 1}, {0, -2}, {2, 3}, {-7, 10}};
	for (auto [a, b] : curves) {
		auto E = make_curve(a, b);
		for (u64 p : sieve_primes({3, 2000})) {
			if (is_excluded(E, p))
				continue;
			auto rc = reduce_curve(E, p);
			auto naive = count_points(rc, CountStrategy::naive);
			REQUIRE(naive.n == oracle::BruteGroup(rc).size());
			if (p > 50) {
				auto bsgs = count_points(rc, CountStrategy::bsgs);
				REQUIRE(bsgs.n == naive.n);
			}
			REQUIRE(naive.a_p * naive.a_p <= static_cast<i64>(4 * p));
		}
	}
}

TEST_CASE("BSGS counting above the enumeration threshold")
{
	// cross-check the two strategies on a band of primes past 2^16
	auto E = make_curve(1, 1);
	int checked = 0;
	for (u64 p : sieve_primes({70000, 71000})) {
		auto rc = reduce_curve(E, p);
		auto fast = count_points(rc);
		auto slow = count_points(rc, CountStrategy::naive);
		REQUIRE(fast.n == slow.n);
		++checked;
	}
	CHECK(checked > 50);
	// CM curve with frequent small exponents
	auto F = make_curve(-1, 0);
	for (u64 p : sieve_primes({100000, 100600})) {
		auto rc = reduce_curve(F, p);
		REQUIRE(count_points(rc).n == count_points(rc, CountStrategy::naive).n);
	}
}

TEST_CASE("Hasse inequality to 10^4")
{
	for (auto [a, b] : std::vector<std::pair<i64, i64>>{{1, 1}, {0, 17}, {-1, 0}}) {
		auto E = make_curve(a, b);
		for (u64 p : sieve_primes({3, 10000})) {
			if (is_excluded(E, p))
				continue;
			auto pc = count_points(reduce_curve(E, p));
			REQUIRE(static_cast<u64>(pc.a_p * pc.a_p) <= 4 * p);
			REQUIRE(static_cast<i64>(p + 1) - pc.a_p == static_cast<i64>(pc.n));
		}
	}
}

TEST_CASE("group law sanity")
{
	auto rc = reduce_curve(make_curve(1, 1), 101);
	std::mt19937_64 rng(7);
	for (int i = 0; i < 200; ++i) {
		Point P = random_point(rc, rng), Q = random_point(rc, rng);
		REQUIRE(on_curve(rc, P));
		REQUIRE(ec_add(rc, P, Q) == oracle::add(rc, P, Q));
		u64 k = rng() % 1000;
		REQUIRE(ec_mul(rc, P, k) == oracle::scalar(rc, P, k));
		REQUIRE(ec_mul_signed(rc, P, -static_cast<i64>(k)) == ec_neg(rc, oracle::scalar(rc, P, k)));
	}
}
