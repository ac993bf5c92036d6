#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "artinlab/modular.hpp"

namespace artinlab {

/// A rational point in affine coordinates, or the point at infinity.
struct RationalPoint {
	mpq_class x = 0;
	mpq_class y = 0;
	bool identity = false;

	static RationalPoint infinity() { return {0, 0, true}; }
};

/// y^2 = x^3 + a x + b over Q with a finite list of rational points.
struct CurveSpec {
	i64 a = 0;
	i64 b = 0;
	std::vector<RationalPoint> points;
	/// Primes of bad reduction known up front (factored part of the discriminant plus user entries).
	std::vector<u64> conductor_support;

	/// 4a^3 + 27b^2; the discriminant is -16 times this.
	mpz_class disc_core() const;
	std::size_t rank_hint() const { return points.size(); }
};

/// Validates nonsingularity and that every point lies on the curve, and fills conductor_support
/// with the primes dividing 2(4a^3 + 27b^2) plus `extra_support`.
/// Throws config_error on invalid input.
CurveSpec make_curve(i64 a, i64 b, std::vector<RationalPoint> points = {},
                     std::vector<u64> extra_support = {});

/// Parses "x,y" (rational coordinates such as "3,5" or "129/100,-383/1000") or "O" for infinity.
RationalPoint parse_point(const std::string &text);

struct ReducedCurve {
	u64 p = 0;
	u64 a = 0;
	u64 b = 0;
};

/// Affine point over F_p or the identity.
struct Point {
	u64 x = 0;
	u64 y = 0;
	bool inf = true;

	static Point identity() { return {}; }
	static Point affine(u64 x, u64 y) { return {x, y, false}; }
	friend bool operator==(const Point &, const Point &) = default;
};

struct PointHash {
	std::size_t operator()(const Point &P) const noexcept
	{
		return P.inf ? 0x9e3779b97f4a7c15ull : (P.x * 0x9e3779b97f4a7c15ull) ^ (P.y + 0x632be59bd9b4e019ull);
	}
};

/// True iff p lies in the excluded set: p = 2, p | 4a^3 + 27b^2, p in conductor_support,
/// p | f, or p divides a denominator of a listed point.
bool is_excluded(const CurveSpec &curve, u64 p, u64 f = 1);

/// Reduction modulo p; throws excluded_prime when p is in the excluded set.
ReducedCurve reduce_curve(const CurveSpec &curve, u64 p, u64 f = 1);

/// Reductions of the listed points (p must not be excluded).
std::vector<Point> reduce_points(const CurveSpec &curve, const ReducedCurve &rc);

u64 curve_rhs(const ReducedCurve &rc, u64 x);
bool on_curve(const ReducedCurve &rc, const Point &P);

Point ec_neg(const ReducedCurve &rc, const Point &P);
Point ec_add(const ReducedCurve &rc, const Point &P, const Point &Q);
Point ec_sub(const ReducedCurve &rc, const Point &P, const Point &Q);
Point ec_dbl(const ReducedCurve &rc, const Point &P);
/// k * P using Jacobian coordinates internally.
Point ec_mul(const ReducedCurve &rc, const Point &P, u64 k);
/// k * P for signed k.
Point ec_mul_signed(const ReducedCurve &rc, const Point &P, i64 k);

/// Uniform-ish random affine point (never the identity).
Point random_point(const ReducedCurve &rc, std::mt19937_64 &rng);

/// Quadratic twist by a non-residue; its order is 2p + 2 - #E(F_p).
ReducedCurve quadratic_twist(const ReducedCurve &rc);

/// Deterministic per-prime seed so results do not depend on scan partitioning.
std::uint64_t prime_seed(const ReducedCurve &rc);

} // namespace artinlab
