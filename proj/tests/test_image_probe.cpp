#include "doctest.h"

#include "artinlab/image_probe.hpp"
#include "artinlab/primes.hpp"

using namespace artinlab;

TEST_CASE("gl2 class sizes sum to the group order")
{
	for (u64 q : {2, 3, 5, 7}) {
		u64 total = 0;
		for (u64 t = 0; t < q; ++t)
			for (u64 d = 1; d < q; ++d)
				total += gl2_class_size(q, t, d);
		CHECK(total == (q * q - 1) * (q * q - q));
	}
	// over F_2: identity and the three involutions have trace 0, the two 3-cycles trace 1
	CHECK(gl2_class_size(2, 0, 1) == 4);
	CHECK(gl2_class_size(2, 1, 1) == 2);
}

TEST_CASE("full rational 2-torsion is detected")
{
	auto r = image_probe(make_curve(-1, 0), 2, 500);
	CHECK(r.verdict == ProbeVerdict::non_surjective);
	CHECK(r.sampled == 500);
	REQUIRE(r.missing.size() == 1);
	CHECK(r.missing[0] == std::pair<u64, u64>{1, 1});
}

TEST_CASE("generic curve looks surjective")
{
	auto E = make_curve(1, 1);
	auto all = image_probe_all(E, {2, 3, 5, 7, 11, 13});
	for (const auto &r : all) {
		INFO("q = " << r.q);
		CHECK(r.verdict == ProbeVerdict::consistent_with_surjective);
		CHECK(r.sampled == default_probe_budget);
	}
	CHECK(image_probe(E, 2, 500).verdict == ProbeVerdict::consistent_with_surjective);
}

TEST_CASE("insufficient samples")
{
	CHECK(image_probe(make_curve(1, 1), 2, 0).verdict == ProbeVerdict::insufficient_samples);
	auto r = image_probe(make_curve(1, 1), 3, 1000, 500);
	CHECK(r.verdict == ProbeVerdict::insufficient_samples);
	CHECK(r.sampled < 1000);
}

TEST_CASE("probe is deterministic")
{
	auto a = image_probe(make_curve(0, -2), 3, 400);
	auto b = image_probe(make_curve(0, -2), 3, 400);
	CHECK(a.missing == b.missing);
	CHECK(a.scanned_to == b.scanned_to);
}
