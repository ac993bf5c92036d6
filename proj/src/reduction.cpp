#include "artinlab/reduction.hpp"

#include <stdexcept>

#include "artinlab/primes.hpp"

namespace artinlab {

std::optional<ReductionRecord> make_record(const CurveSpec &curve, u64 p, u64 f, CountStrategy strategy)
{
	if (is_excluded(curve, p, f))
		return std::nullopt;
	const ReducedCurve rc = reduce_curve(curve, p, f);
	ReductionRecord rec;
	rec.p = p;
	auto pc = count_points(rc, strategy);
	rec.n = pc.n;
	rec.a_p = pc.a_p;
	rec.structure = group_structure(rc, pc.n);
	for (const auto &P : reduce_points(curve, rc))
		rec.images.push_back(decompose_point(rc, rec.structure, P));
	std::tie(rec.e1, rec.e2) = quotient_invariants(rec.structure, rec.images);
	rec.residue = p % f;
	return rec;
}

bool splitting_witness(const ReductionRecord &rec, u64 q)
{
	if (q == rec.p)
		throw std::invalid_argument("splitting_witness requires q != p");
	return q >= 2 && rec.e1 % q == 0;
}

bool check_divisibility_relations(const ReductionRecord &rec, u64 q)
{
	if (!is_prime(q))
		throw std::invalid_argument("check_divisibility_relations requires a prime q");
	const i64 qi = static_cast<i64>(q);
	const i64 p = static_cast<i64>(rec.p);
	const bool unit_root = (p - 1) % qi == 0;
	const bool order = (p + 1 - rec.a_p) % (qi * qi) == 0;
	const bool trace = (rec.a_p - 2) % qi == 0;
	return unit_root && order && trace;
}

} // namespace artinlab
