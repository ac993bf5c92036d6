#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "artinlab/curve.hpp"
#include "artinlab/group_structure.hpp"
#include "artinlab/point_count.hpp"

namespace artinlab {

/// Everything the scanners need to know about one prime of good reduction.
struct ReductionRecord {
	u64 p = 0;
	u64 n = 0;
	i64 a_p = 0;
	GroupStructure structure;
	/// Coordinates of the reduced listed points in the basis (P1, P2).
	std::vector<std::pair<u64, u64>> images;
	u64 e1 = 1;
	u64 e2 = 1;
	u64 residue = 0; ///< p mod f
};

/// Full per-prime pipeline. Returns nullopt for primes in the excluded set.
std::optional<ReductionRecord> make_record(const CurveSpec &curve, u64 p, u64 f = 1,
                                           CountStrategy strategy = CountStrategy::automatic);

/// The quotient by the reduced points is cyclic (at most 2r - 1 = 1 cyclic components).
inline bool is_primitive_cyclic(const ReductionRecord &rec) { return rec.e1 == 1; }

/// The quotient contains (Z/q)^2, i.e. p splits completely in the q-division field.
bool splitting_witness(const ReductionRecord &rec, u64 q);

/// For a witnessing q (r = 1): q | p - 1, q^2 | p + 1 - a_p, q | a_p - 2.
bool check_divisibility_relations(const ReductionRecord &rec, u64 q);

} // namespace artinlab
