#include "doctest.h"

#include <numeric>
#include <set>

#include "artinlab/primes.hpp"
#include "artinlab/reduction.hpp"
#include "artinlab/smith.hpp"
#include "oracles/brute_force.hpp"

using namespace artinlab;

TEST_CASE("group_structure small examples")
{
	auto rc = reduce_curve(make_curve(-1, 0), 5);
	auto gs = group_structure(rc, 8);
	CHECK(gs.d1 == 2);
	CHECK(gs.d2 == 4);
	CHECK(oracle::BruteGroup(rc).structure() == std::pair<u64, u64>{2, 4});

	auto rc2 = reduce_curve(make_curve(0, 1), 5);
	auto gs2 = group_structure(rc2, 6);
	CHECK(gs2.d1 == 1);
	CHECK(gs2.d2 == 6);
	CHECK(oracle::BruteGroup(rc2).structure() == std::pair<u64, u64>{1, 6});
}

TEST_CASE("prime order groups are cyclic")
{
	auto E = make_curve(1, 1);
	int seen = 0;
	for (u64 p : sieve_primes({3, 3000})) {
		if (is_excluded(E, p))
			continue;
		auto rc = reduce_curve(E, p);
		u64 n = count_points(rc).n;
		if (!is_prime(n))
			continue;
		auto gs = group_structure(rc, n);
		REQUIRE(gs.d1 == 1);
		REQUIRE(gs.d2 == n);
		++seen;
	}
	CHECK(seen > 10);
}

TEST_CASE("structure and basis agree with brute force")
{
	for (auto [a, b] : std::vector<std::pair<i64, i64>>{{-1, 0}, {0, 1}, {-4, 0}, {-25, 0}, {1, 1}}) {
		auto E = make_curve(a, b);
		for (u64 p : sieve_primes({3, 400})) {
			if (is_excluded(E, p))
				continue;
			auto rc = reduce_curve(E, p);
			oracle::BruteGroup G(rc);
			auto gs = group_structure(rc, G.size());
			REQUIRE(std::pair(gs.d1, gs.d2) == G.structure());
			REQUIRE(gs.d2 % gs.d1 == 0);
			REQUIRE((p - 1) % gs.d1 == 0);
			REQUIRE(oracle::scalar(rc, gs.P1, gs.d1).inf);
			REQUIRE(oracle::scalar(rc, gs.P2, gs.d2).inf);
			REQUIRE(G.order[G.index.at(gs.P1)] == gs.d1);
			REQUIRE(G.order[G.index.at(gs.P2)] == gs.d2);
			// every point decomposes and recomposes; coordinates are unique
			std::set<std::pair<u64, u64>> coords;
			for (const auto &P : G.points) {
				auto [u, v] = decompose_point(rc, gs, P);
				REQUIRE(u < gs.d1);
				REQUIRE(v < gs.d2);
				REQUIRE(oracle::add(rc, oracle::scalar(rc, gs.P1, u), oracle::scalar(rc, gs.P2, v)) == P);
				coords.emplace(u, v);
			}
			REQUIRE(coords.size() == G.size());
		}
	}
}

TEST_CASE("decompose_point basics")
{
	auto rc = reduce_curve(make_curve(-1, 0), 5);
	auto gs = group_structure(rc, 8);
	CHECK(decompose_point(rc, gs, Point::identity()) == std::pair<u64, u64>{0, 0});
	CHECK(decompose_point(rc, gs, gs.P1) == std::pair<u64, u64>{1, 0});
	CHECK(decompose_point(rc, gs, gs.P2) == std::pair<u64, u64>{0, 1});
}

TEST_CASE("quotient_invariants")
{
	CHECK(quotient_invariants(2, 4, {}) == std::pair<u64, u64>{2, 4});
	CHECK(quotient_invariants(2, 4, {{1, 2}}) == std::pair<u64, u64>{1, 4});
	CHECK(quotient_invariants(2, 4, {{0, 2}}) == std::pair<u64, u64>{2, 2});
	CHECK(quotient_invariants(1, 12, {{0, 1}}) == std::pair<u64, u64>{1, 1});
	CHECK(quotient_invariants(6, 6, {{1, 0}, {0, 1}}) == std::pair<u64, u64>{1, 1});
}

TEST_CASE("quotient_invariants agree with coset enumeration in Z/d1 x Z/d2")
{
	// brute-force the abstract group directly
	std::mt19937_64 rng(11);
	for (int trial = 0; trial < 300; ++trial) {
		u64 d1 = 1 + rng() % 6;
		u64 d2 = d1 * (1 + rng() % 6);
		std::vector<std::pair<u64, u64>> imgs;
		int g = static_cast<int>(rng() % 3);
		for (int i = 0; i < g; ++i)
			imgs.emplace_back(rng() % d1, rng() % d2);
		// subgroup generated by imgs
		std::set<std::pair<u64, u64>> H{{0, 0}};
		bool grew = true;
		while (grew) {
			grew = false;
			for (auto h : std::vector(H.begin(), H.end()))
				for (auto [u, v] : imgs)
					grew |= H.emplace((h.first + u) % d1, (h.second + v) % d2).second;
		}
		u64 qsize = d1 * d2 / H.size();
		u64 exponent = 1;
		for (u64 u = 0; u < d1; ++u)
			for (u64 v = 0; v < d2; ++v) {
				u64 m = 1;
				while (!H.count({m * u % d1, m * v % d2}))
					++m;
				exponent = std::lcm(exponent, m);
			}
		auto [e1, e2] = quotient_invariants(d1, d2, imgs);
		REQUIRE(e1 * e2 == qsize);
		REQUIRE(e2 == exponent);
		REQUIRE(e2 % e1 == 0);
	}
}

TEST_CASE("smith normal form transforms")
{
	IntMatrix M = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
	auto snf = smith_normal_form(M);
	auto diag = snf.diagonal();
	CHECK(static_cast<long>(diag[0]) == 2);
	CHECK(static_cast<long>(diag[1]) == 6);
	CHECK(static_cast<long>(diag[2]) == 12);
	CHECK(multiply(multiply(snf.U, M), snf.V) == snf.D);
	CHECK(multiply(snf.V, snf.V_inv) == identity_matrix(3));
}

TEST_CASE("primitive-cyclic and splitting witness")
{
	auto E = make_curve(-1, 0);
	auto rec = make_record(E, 5);
	REQUIRE(rec);
	CHECK_FALSE(is_primitive_cyclic(*rec));
	CHECK(splitting_witness(*rec, 2));
	CHECK_FALSE(splitting_witness(*rec, 3));
	CHECK_FALSE(splitting_witness(*rec, 7));
	CHECK(check_divisibility_relations(*rec, 2));
	CHECK_THROWS(check_divisibility_relations(*rec, 1));

	auto F = make_curve(0, 1);
	auto rec2 = make_record(F, 5);
	REQUIRE(rec2);
	CHECK(is_primitive_cyclic(*rec2));

	CHECK_FALSE(make_record(E, 2).has_value());
}

TEST_CASE("torsion and dependent points")
{
	// (0,0) is 2-torsion on y^2 = x^3 - x; P and 2P on y^2 = x^3 - 2
	auto E = make_curve(-1, 0, {parse_point("0,0")});
	auto G = make_curve(0, -2, {parse_point("3,5"), parse_point("129/100,-383/1000")});
	for (const auto &C : {E, G}) {
		for (u64 p : sieve_primes({3, 600})) {
			auto rec = make_record(C, p);
			if (!rec)
				continue;
			auto rc = reduce_curve(C, p);
			oracle::BruteGroup B(rc);
			auto pts = reduce_points(C, rc);
			REQUIRE(std::pair(rec->e1, rec->e2) == B.quotient(pts));
		}
	}
}
