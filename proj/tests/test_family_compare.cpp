#include "doctest.h"

#include "artinlab/errors.hpp"
#include "artinlab/family_compare.hpp"
#include "oracles/model_oracle.hpp"

using namespace artinlab;

TEST_CASE("family compared with itself")
{
	auto inst = gl2_determinant_instance({2, 3});
	auto res = compare_families(self_instance(inst.primary));
	CHECK(res.verdict == CompareVerdict::f_ge_fprime);
	CHECK(res.index == 1);
	CHECK(res.left == res.right);
	CHECK(res.extensions_counted);
}

TEST_CASE("matrix group against its determinant quotient")
{
	auto res = compare_families(gl2_determinant_instance({2, 3}));
	CHECK(res.verdict == CompareVerdict::f_ge_fprime);
	CHECK(res.violated.empty());
	CHECK(res.left == oracle::model_histogram(6, 1).all_nontrivial[0]);
	CHECK(res.left == 235);
	CHECK(res.index == 144);
	CHECK(res.right == 0); // the unit group mod 2 is trivial
	CHECK(res.inequality_holds());

	auto three = compare_families(gl2_determinant_instance({3}));
	CHECK(three.verdict == CompareVerdict::f_ge_fprime);
	CHECK(three.left == 47);
	CHECK(three.index == 24);
	CHECK(three.right == 1);
	CHECK(three.inequality_holds());
	CHECK(three.extensions_counted);
}

TEST_CASE("preimage classes give equality")
{
	auto res = compare_families(gl2_determinant_instance({3}, true));
	CHECK(res.verdict == CompareVerdict::f_ge_fprime);
	CHECK(res.left == 24);
	CHECK(res.left == res.index * res.right);
	auto both = compare_families(gl2_determinant_instance({2, 3}, true));
	CHECK(both.left == 0);
	CHECK(both.right == 0);
}

TEST_CASE("violations are reported")
{
	auto inst = gl2_determinant_instance({3});
	// C_3 = identity only: the preimage of the non-identity units escapes it
	for (std::size_t x = 0; x < inst.primary.in_C[0].size(); ++x)
		inst.primary.in_C[0][x] = !inst.primary.in_C[0][x];
	auto res = compare_families(inst);
	CHECK(res.verdict == CompareVerdict::hypotheses_violated);
	REQUIRE(!res.violated.empty());
	CHECK(res.violated[0].rfind("3:", 0) == 0);
	CHECK(!res.extensions_counted);

	auto uncovered = gl2_determinant_instance({2, 3});
	uncovered.containments.erase(uncovered.containments.begin());
	auto r2 = compare_families(uncovered);
	CHECK(r2.verdict == CompareVerdict::hypotheses_violated);
	CHECK_THROWS_AS(compare_families(gl2_determinant_instance({2, 3}), 100), capacity_error);
}
