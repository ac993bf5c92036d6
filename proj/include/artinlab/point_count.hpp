#pragma once

#include <optional>

#include "artinlab/curve.hpp"

namespace artinlab {

enum class CountStrategy { automatic, naive, bsgs };

struct PointCount {
	u64 n = 0;   ///< #E(F_p), identity included
	i64 a_p = 0; ///< p + 1 - n
};

/// Below this bound `automatic` counts by x-enumeration against a table of squares.
inline constexpr u64 naive_count_limit = u64(1) << 16;

/// #E(F_p) and the Frobenius trace. The BSGS route works inside the Hasse interval and falls
/// back to the quadratic twist, then to enumeration, if the group exponent leaves the order
/// ambiguous.
PointCount count_points(const ReducedCurve &rc, CountStrategy strategy = CountStrategy::automatic);

/// Hasse interval [p + 1 - floor(2 sqrt p), p + 1 + floor(2 sqrt p)].
std::pair<u64, u64> hasse_interval(u64 p);

/// Some m in [lo, hi] with m P = O, found by baby-step giant-step, if one exists.
std::optional<u64> find_annihilator(const ReducedCurve &rc, const Point &P, u64 lo, u64 hi);

/// Exact order of P given any multiple m of it.
u64 order_from_multiple(const ReducedCurve &rc, const Point &P, u64 m);

} // namespace artinlab
