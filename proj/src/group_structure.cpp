#include "artinlab/group_structure.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "artinlab/primes.hpp"
#include "artinlab/smith.hpp"

namespace artinlab {

namespace {

u64 ipow(u64 b, int e)
{
	u64 r = 1;
	while (e-- > 0)
		r *= b;
	return r;
}

int valuation(i128 v, u64 ell)
{
	int e = 0;
	while (v % ell == 0 && v != 0) {
		v /= ell;
		++e;
	}
	return e;
}

// k for which k*B = R with 0 <= k < ell, B of order ell.
std::optional<u64> cyclic_log_prime_order(const ReducedCurve &rc, const Point &B, u64 ell, const Point &R)
{
	if (R.inf)
		return 0;
	u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(ell))));
	std::unordered_map<Point, u64, PointHash> baby;
	baby.reserve(m * 2);
	Point cur = Point::identity();
	for (u64 j = 0; j < m; ++j) {
		baby.emplace(cur, j);
		cur = ec_add(rc, cur, B);
	}
	const Point giant_step = ec_neg(rc, cur);
	Point g = R;
	for (u64 i = 0; i <= m; ++i) {
		auto it = baby.find(g);
		if (it != baby.end()) {
			u64 k = (i * m + it->second) % ell;
			return k;
		}
		g = ec_add(rc, g, giant_step);
	}
	return std::nullopt;
}

// (s, t) with R = s*A + t*B, A and B independent of order ell.
std::optional<std::pair<u64, u64>> planar_log(const ReducedCurve &rc, const Point &A, const Point &B, u64 ell,
                                              const Point &R)
{
	std::unordered_map<Point, u64, PointHash> table;
	table.reserve(ell * 2);
	Point cur = Point::identity();
	for (u64 t = 0; t < ell; ++t) {
		table.emplace(cur, t);
		cur = ec_add(rc, cur, B);
	}
	Point probe = R;
	const Point negA = ec_neg(rc, A);
	for (u64 s = 0; s < ell; ++s) {
		auto it = table.find(probe);
		if (it != table.end())
			return std::make_pair(s, it->second);
		probe = ec_add(rc, probe, negA);
	}
	return std::nullopt;
}

// Grow the Sylow ell-subgroup until it reaches order ell^v.
SylowPart build_part(const ReducedCurve &rc, u64 n, u64 ell, int v, std::mt19937_64 &rng)
{
	SylowPart part{ell, v, 0, 0, Point::identity(), Point::identity()};
	const u64 full = ipow(ell, v);
	const u64 cofactor = n / full;
	int attempts = 0;
	while (part.alpha + part.beta < v) {
		if (++attempts > 400)
			throw std::runtime_error("group_structure: Sylow subgroup did not fill; is n = #E(F_p)?");
		Point S = ec_mul(rc, random_point(rc, rng), cofactor);
		if (S.inf)
			continue;
		Point T = S;
		int c = 0;
		std::optional<std::pair<u64, u64>> log;
		while (!(log = sylow_log(rc, part, T))) {
			T = ec_mul(rc, T, ell);
			++c;
			if (c > v)
				throw std::runtime_error("group_structure: element outside the Sylow subgroup");
		}
		if (c == 0)
			continue;
		const i128 ea = static_cast<i128>(ipow(ell, part.alpha));
		const i128 eb = static_cast<i128>(ipow(ell, part.beta));
		IntMatrix rel = {
		    {ea, 0, 0},
		    {0, eb, 0},
		    {-static_cast<i128>(log->first), -static_cast<i128>(log->second), static_cast<i128>(ipow(ell, c))},
		};
		SmithForm snf = smith_normal_form(rel);
		const Point gens[3] = {part.h1, part.h2, S};
		Point fresh[3];
		for (int i = 0; i < 3; ++i) {
			Point acc = Point::identity();
			for (int j = 0; j < 3; ++j) {
				i128 coef = snf.V_inv[i][j] % static_cast<i128>(full);
				if (coef < 0)
					coef += full;
				acc = ec_add(rc, acc, ec_mul(rc, gens[j], static_cast<u64>(coef)));
			}
			fresh[i] = acc;
		}
		auto diag = snf.diagonal();
		if (diag[0] != 1)
			throw std::logic_error("group_structure: relation lattice has rank above two");
		part.alpha = valuation(diag[1], ell);
		part.beta = valuation(diag[2], ell);
		part.h1 = fresh[1];
		part.h2 = fresh[2];
	}
	return part;
}

// Chinese remaindering of residues modulo pairwise coprime moduli.
u64 crt_combine(const std::vector<std::pair<u64, u64>> &residues)
{
	u64 value = 0, modulus = 1;
	for (auto [r, m] : residues) {
		if (m == 1)
			continue;
		// value + modulus * k == r (mod m)
		u64 diff = submod(r % m, value % m, m);
		u64 k = mulmod(diff, invmod(modulus % m, m), m);
		value += modulus * k;
		modulus *= m;
	}
	return value;
}

} // namespace

std::optional<std::pair<u64, u64>> sylow_log(const ReducedCurve &rc, const SylowPart &part, const Point &T)
{
	const u64 ell = part.ell;
	const int alpha = part.alpha, beta = part.beta;
	if (beta == 0)
		return T.inf ? std::optional(std::make_pair<u64, u64>(0, 0)) : std::nullopt;
	// levels[i] = ell^i (T, h1, h2)
	std::vector<Point> Ts(beta + 1), H1(beta + 1), H2(beta + 1);
	Ts[0] = T;
	H1[0] = part.h1;
	H2[0] = part.h2;
	for (int i = 1; i <= beta; ++i) {
		Ts[i] = ec_mul(rc, Ts[i - 1], ell);
		H1[i] = ec_mul(rc, H1[i - 1], ell);
		H2[i] = ec_mul(rc, H2[i - 1], ell);
	}
	if (!Ts[beta].inf)
		return std::nullopt;
	const Point A = alpha > 0 ? H1[alpha - 1] : Point::identity();
	const Point B = H2[beta - 1];
	u64 u = 0, v = 0;
	for (int i = beta - 1; i >= 0; --i) {
		// residual in the ell-torsion of the level-i subgroup
		Point R = ec_sub(rc, Ts[i], ec_add(rc, ec_mul(rc, H1[i], u), ec_mul(rc, H2[i], v)));
		u64 s = 0, t = 0;
		if (i < alpha) {
			auto st = planar_log(rc, A, B, ell, R);
			if (!st)
				return std::nullopt;
			std::tie(s, t) = *st;
			u += s * ipow(ell, alpha - 1 - i);
		} else {
			auto k = cyclic_log_prime_order(rc, B, ell, R);
			if (!k)
				return std::nullopt;
			t = *k;
		}
		v += t * ipow(ell, beta - 1 - i);
	}
	const u64 ea = ipow(ell, alpha), eb = ipow(ell, beta);
	u %= ea;
	v %= eb;
	if (ec_add(rc, ec_mul(rc, part.h1, u), ec_mul(rc, part.h2, v)) != T)
		return std::nullopt;
	return std::make_pair(u, v);
}

GroupStructure group_structure(const ReducedCurve &rc, u64 n)
{
	GroupStructure gs;
	gs.n = n;
	gs.P1 = Point::identity();
	gs.P2 = Point::identity();
	std::mt19937_64 rng(prime_seed(rc) ^ 0x5bd1e995u);
	for (auto [ell, v] : factorize_grouped(n)) {
		SylowPart part = build_part(rc, n, ell, v, rng);
		gs.d1 *= ipow(ell, part.alpha);
		gs.d2 *= ipow(ell, part.beta);
		gs.P1 = ec_add(rc, gs.P1, part.h1);
		gs.P2 = ec_add(rc, gs.P2, part.h2);
		gs.parts.push_back(part);
	}
	return gs;
}

std::pair<u64, u64> decompose_point(const ReducedCurve &rc, const GroupStructure &gs, const Point &P)
{
	std::vector<std::pair<u64, u64>> us, vs;
	for (const auto &part : gs.parts) {
		const u64 full = ipow(part.ell, part.v);
		const u64 cof = gs.n / full;
		auto log = sylow_log(rc, part, ec_mul(rc, P, cof));
		if (!log)
			throw std::logic_error("decompose_point: point is not in the group");
		const u64 ea = ipow(part.ell, part.alpha), eb = ipow(part.ell, part.beta);
		// cof * P = cof * (u h1 + v h2), and cof is a unit modulo ell
		if (ea > 1)
			us.emplace_back(mulmod(log->first, invmod(cof % ea, ea), ea), ea);
		if (eb > 1)
			vs.emplace_back(mulmod(log->second, invmod(cof % eb, eb), eb), eb);
	}
	return {crt_combine(us), crt_combine(vs)};
}

std::pair<u64, u64> quotient_invariants(u64 d1, u64 d2, const std::vector<std::pair<u64, u64>> &images)
{
	IntMatrix rel;
	rel.push_back({static_cast<i128>(d1), 0});
	rel.push_back({0, static_cast<i128>(d2)});
	for (auto [u, v] : images)
		rel.push_back({static_cast<i128>(u), static_cast<i128>(v)});
	auto diag = smith_normal_form(rel).diagonal();
	return {static_cast<u64>(diag[0]), static_cast<u64>(diag[1])};
}

} // namespace artinlab
