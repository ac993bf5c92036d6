#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artinlab/curve.hpp"

namespace artinlab {

/// Sylow l-subgroup of E(F_p): Z/l^alpha x Z/l^beta with basis (h1, h2), alpha <= beta.
struct SylowPart {
	u64 ell = 0;
	int v = 0; ///< l^v exactly divides n
	int alpha = 0;
	int beta = 0;
	Point h1;
	Point h2;
};

/// E(F_p) = Z/d1 x Z/d2 with d1 | d2, d1 | p - 1, and basis P1 (order d1), P2 (order d2).
struct GroupStructure {
	u64 n = 1;
	u64 d1 = 1;
	u64 d2 = 1;
	Point P1;
	Point P2;
	std::vector<SylowPart> parts;
};

/// Explicit structure of E(F_p) given its order n. Each Sylow subgroup is grown from random
/// points; the invariants come from the Smith form of the relation lattice of the generators
/// found, which is certified complete once the subgroup reaches order l^v.
GroupStructure group_structure(const ReducedCurve &rc, u64 n);

/// (u, v) with P = u P1 + v P2, 0 <= u < d1, 0 <= v < d2.
std::pair<u64, u64> decompose_point(const ReducedCurve &rc, const GroupStructure &gs, const Point &P);

/// Discrete log inside one Sylow part; nullopt when T is not in the span of (h1, h2).
std::optional<std::pair<u64, u64>> sylow_log(const ReducedCurve &rc, const SylowPart &part, const Point &T);

/// Invariant factors (e1, e2), e1 | e2, of (Z/d1 x Z/d2) / <images>.
std::pair<u64, u64> quotient_invariants(u64 d1, u64 d2, const std::vector<std::pair<u64, u64>> &images);

inline std::pair<u64, u64> quotient_invariants(const GroupStructure &gs,
                                               const std::vector<std::pair<u64, u64>> &images)
{
	return quotient_invariants(gs.d1, gs.d2, images);
}

} // namespace artinlab
