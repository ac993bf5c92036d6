#include "artinlab/point_count.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "artinlab/primes.hpp"

namespace artinlab {

namespace {

u64 isqrt(u64 n)
{
	u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
	while (r * r > n)
		--r;
	while ((r + 1) * (r + 1) <= n)
		++r;
	return r;
}

u64 count_naive(const ReducedCurve &rc)
{
	const u64 p = rc.p;
	std::vector<char> square(p, 0);
	if (p >= (u64(1) << 21)) {
		for (u64 y = 1; y <= p / 2; ++y)
			square[mulmod(y, y, p)] = 1;
		u64 n = 1;
		for (u64 x = 0; x < p; ++x) {
			u64 r = curve_rhs(rc, x);
			n += r == 0 ? 1 : (square[r] ? 2 : 0);
		}
		return n;
	}
	// Small p: squares and x^3 + a x + b by finite differences, additions only.
	auto add = [p](u64 u, u64 v) {
		u64 w = u + v;
		return w >= p ? w - p : w;
	};
	// square[r] = number of y with y^2 = r
	square[0] = 1;
	for (u64 y = 1, sq = 1; y <= p / 2; ++y) {
		square[sq] = 2;
		sq = add(sq, 2 * y + 1); // (y + 1)^2 = y^2 + 2y + 1
	}
	const u64 six = 6 % p;
	u64 r = rc.b % p, d1 = add(1 % p, rc.a % p), d2 = six, n = 1;
	for (u64 x = 0; x < p; ++x) {
		n += static_cast<u64>(square[r]);
		r = add(r, d1);
		d1 = add(d1, d2);
		d2 = add(d2, six);
	}
	return n;
}

// Candidate orders in [lo, hi] consistent with exponent divisors L (for E) and Lt (for the twist).
std::vector<u64> candidates(u64 p, u64 lo, u64 hi, u64 L, u64 Lt)
{
	std::vector<u64> out;
	for (u64 m = (lo + L - 1) / L * L; m <= hi; m += L) {
		u64 twist = 2 * p + 2 - m;
		if (twist % Lt == 0)
			out.push_back(m);
	}
	return out;
}

// lcm of the orders of `tries` random points on `rc`.
u64 exponent_divisor(const ReducedCurve &rc, u64 lo, u64 hi, int tries, std::mt19937_64 &rng, u64 L)
{
	for (int i = 0; i < tries; ++i) {
		Point R = random_point(rc, rng);
		auto m = find_annihilator(rc, R, lo, hi);
		if (!m)
			continue;
		u64 ord = order_from_multiple(rc, R, *m);
		L = std::lcm(L, ord);
	}
	return L;
}

} // namespace

std::pair<u64, u64> hasse_interval(u64 p)
{
	u64 w = isqrt(4 * p);
	return {p + 1 - w, p + 1 + w};
}

std::optional<u64> find_annihilator(const ReducedCurve &rc, const Point &P, u64 lo, u64 hi)
{
	if (P.inf)
		return lo;
	const u64 width = hi - lo + 1;
	u64 s = isqrt(width);
	if (s * s < width)
		++s;
	std::unordered_map<Point, u64, PointHash> baby;
	baby.reserve(static_cast<std::size_t>(s) * 2);
	Point cur = Point::identity();
	for (u64 j = 0; j < s; ++j) {
		baby.emplace(cur, j);
		cur = ec_add(rc, cur, P);
	}
	const Point step = cur; // s * P
	Point giant = ec_mul(rc, P, lo);
	for (u64 i = 0; i * s <= hi - lo; ++i) {
		auto it = baby.find(ec_neg(rc, giant));
		if (it != baby.end()) {
			u64 m = lo + i * s + it->second;
			if (m <= hi)
				return m;
		}
		giant = ec_add(rc, giant, step);
	}
	return std::nullopt;
}

u64 order_from_multiple(const ReducedCurve &rc, const Point &P, u64 m)
{
	if (P.inf)
		return 1;
	for (auto [q, e] : factorize_grouped(m)) {
		for (int i = 0; i < e; ++i) {
			if (!ec_mul(rc, P, m / q).inf)
				break;
			m /= q;
		}
	}
	return m;
}

PointCount count_points(const ReducedCurve &rc, CountStrategy strategy)
{
	const u64 p = rc.p;
	if (strategy == CountStrategy::automatic)
		strategy = p < naive_count_limit ? CountStrategy::naive : CountStrategy::bsgs;

	u64 n = 0;
	if (strategy == CountStrategy::naive || p < 11) {
		n = count_naive(rc);
	} else {
		auto [lo, hi] = hasse_interval(p);
		std::mt19937_64 rng(prime_seed(rc));
		u64 L = exponent_divisor(rc, lo, hi, 3, rng, 1);
		auto cand = candidates(p, lo, hi, L, 1);
		if (cand.size() > 1) {
			L = exponent_divisor(rc, lo, hi, 5, rng, L);
			cand = candidates(p, lo, hi, L, 1);
		}
		if (cand.size() > 1) {
			const ReducedCurve tw = quadratic_twist(rc);
			auto [tlo, thi] = hasse_interval(p);
			u64 Lt = exponent_divisor(tw, tlo, thi, 8, rng, 1);
			cand = candidates(p, lo, hi, L, Lt);
		}
		n = cand.size() == 1 ? cand.front() : count_naive(rc);
	}
	return {n, static_cast<i64>(p + 1) - static_cast<i64>(n)};
}

} // namespace artinlab
