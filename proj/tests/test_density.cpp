#include "doctest.h"

#include <cmath>

#include "artinlab/density.hpp"
#include "artinlab/errors.hpp"
#include "oracles/model_oracle.hpp"

using namespace artinlab;

namespace {

FamilyDescriptor generic0() { return cyclicity_family(GenericImageModel{}); }

FamilyDescriptor plain(Rational c, Rational e)
{
	FamilyDescriptor d;
	d.name = "plain";
	d.tail_constant = c;
	d.tail_exponent = e;
	d.delta = [](const SquarefreeTerm &t) { return Rational(t.k == 1 ? 1 : 0); };
	return d;
}

} // namespace

TEST_CASE("truncated series")
{
	auto fam = generic0();
	CHECK(truncated_series(fam, 1) == 1);
	CHECK(truncated_series(fam, 3) == Rational(13, 16));
	Rational six = Rational(13, 16) - Rational(1, 480) + Rational(1, 288);
	CHECK(truncated_series(fam, 6) == six);
}

TEST_CASE("tail bound")
{
	auto fam = plain(1, Rational(3, 2));
	Rational t100 = tail_bound(fam, 100);
	CHECK(t100.get_d() <= 0.21);
	for (u64 y : {10, 100, 1000}) {
		double partial = 0;
		for (u64 k = y + 1; k <= 1000000; ++k)
			partial += std::pow(static_cast<double>(k), -1.5);
		CHECK(tail_bound(fam, y).get_d() >= partial);
	}
	CHECK(tail_bound(fam, 1000) < tail_bound(fam, 100));
	CHECK(tail_bound(fam, 100000000).get_d() < 1e-3);
	CHECK_THROWS_AS(tail_bound(plain(1, 1), 10), domain_error);
}

TEST_CASE("inv_pow_upper is an upper bound")
{
	CHECK(inv_pow_upper(100, Rational(1, 2)) >= Rational(1, 10));
	CHECK(inv_pow_upper(100, Rational(1, 2)).get_d() < 0.1000001);
	CHECK(inv_pow_upper(7, 3) >= Rational(1, 343));
}

TEST_CASE("density intervals")
{
	auto fam = generic0();
	auto one = density_with_interval(fam, 1);
	CHECK(one.center == 1);
	CHECK(one.tail == tail_bound(fam, 1));
	auto a = density_with_interval(fam, 200);
	auto b = density_with_interval(fam, 400);
	CHECK(a.overlaps(b));
	CHECK(b.lo() >= a.lo() - a.tail);
	CHECK(b.hi() <= a.hi() + a.tail);
	CHECK(a.width() < Rational(1, 1000));
	CHECK(a.certified);
}

TEST_CASE("euler product")
{
	auto fam = generic0();
	CHECK(euler_product(fam, 2).center == Rational(5, 6));
	CHECK(euler_product(fam, 3).center == Rational(235, 288));
	auto e = euler_product(fam, 100);
	auto s = density_with_interval(fam, 1000);
	CHECK(e.overlaps(s));
	auto f4 = cyclicity_family(GenericImageModel{}, CongruenceCondition::make(4, {3}));
	CHECK_THROWS_AS(euler_product(f4, 10), domain_error);
}

TEST_CASE("partial density matches the model")
{
	auto fam = generic0();
	CHECK(partial_density(1, fam) == 1);
	CHECK(partial_density(2, fam) == Rational(5, 6));
	CHECK(partial_density(6, fam) == 1 - Rational(1, 6) - Rational(1, 48) + Rational(1, 288));
	for (u64 l : {2, 3, 5, 6, 10, 15}) {
		auto h = oracle::model_histogram(l, 1);
		Rational r(h.all_nontrivial[0], h.total);
		r.canonicalize();
		CHECK(partial_density(l, fam) == r);
	}
	for (const auto &t : squarefree_stream(2000))
		REQUIRE(partial_density(t.k, fam) >= 0);
	auto f4 = cyclicity_family(GenericImageModel{}, CongruenceCondition::make(4, {3}));
	for (const auto &t : squarefree_stream(500))
		REQUIRE(partial_density(t.k, f4) >= 0);
}

TEST_CASE("positivity")
{
	auto fam = generic0();
	CHECK(positivity_check(fam, {{2, true}}).kind == PositivityKind::zero);
	auto v = positivity_check(fam, {});
	CHECK(v.kind == PositivityKind::positive);
	auto e = euler_product(fam, 1000);
	CHECK(v.lower_bound >= e.center - e.tail);
	CHECK(v.lower_bound > 0);
	auto f4 = cyclicity_family(GenericImageModel{}, CongruenceCondition::make(4, {3}));
	CHECK(positivity_check(f4, {}).kind == PositivityKind::inconclusive);
	CHECK(positivity_check(plain(1, 2), {}).kind == PositivityKind::inconclusive);
}

TEST_CASE("complement bookkeeping")
{
	auto full = density_with_interval(generic0(), 300);
	for (u64 f : {3, 4, 5, 8}) {
		std::vector<u64> units;
		for (u64 u = 1; u < f; ++u)
			if (std::gcd(u, f) == 1)
				units.push_back(u);
		auto cond = CongruenceCondition::make(f, {units[0]});
		auto a = density_with_interval(cyclicity_family(GenericImageModel{}, cond), 300);
		auto b = density_with_interval(cyclicity_family(GenericImageModel{}, cond.complement()), 300);
		CHECK(a.center + b.center == full.center);
		Rational gap = a.center + b.center - full.center;
		CHECK(abs(gap) <= a.tail + b.tail + full.tail);
	}
}

TEST_CASE("descriptor validation")
{
	CHECK_NOTHROW(validate_descriptor(generic0()));
	GenericImageModel g1;
	g1.g = 1;
	g1.degree_overrides[2] = 6;
	CHECK_NOTHROW(validate_descriptor(cyclicity_family(g1)));
	auto bad = plain(1, Rational(3, 2));
	bad.delta = [](const SquarefreeTerm &t) { return Rational(1, static_cast<unsigned long>(t.k)); };
	CHECK_THROWS_AS(validate_descriptor(bad), domain_error);
}
