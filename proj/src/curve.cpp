#include "artinlab/curve.hpp"

#include <algorithm>

#include "artinlab/errors.hpp"
#include "artinlab/primes.hpp"

namespace artinlab {

u64 sqrt_mod(u64 a, u64 p)
{
	a %= p;
	if (a == 0 || p == 2)
		return a;
	if (p % 4 == 3)
		return powmod(a, (p + 1) / 4, p);
	u64 q = p - 1;
	int s = 0;
	while ((q & 1) == 0) {
		q >>= 1;
		++s;
	}
	u64 z = 2;
	while (legendre(z, p) != -1)
		++z;
	u64 m = static_cast<u64>(s);
	u64 c = powmod(z, q, p);
	u64 t = powmod(a, q, p);
	u64 r = powmod(a, (q + 1) / 2, p);
	while (t != 1) {
		u64 i = 0;
		u64 tt = t;
		while (tt != 1) {
			tt = mulmod(tt, tt, p);
			++i;
		}
		u64 b = c;
		for (u64 j = 0; j + 1 < m - i; ++j)
			b = mulmod(b, b, p);
		m = i;
		c = mulmod(b, b, p);
		t = mulmod(t, c, p);
		r = mulmod(r, b, p);
	}
	return r;
}

mpz_class CurveSpec::disc_core() const
{
	mpz_class A = a, B = b;
	return 4 * A * A * A + 27 * B * B;
}

namespace {

bool satisfies_equation(i64 a, i64 b, const RationalPoint &P)
{
	if (P.identity)
		return true;
	mpq_class lhs = P.y * P.y;
	mpq_class rhs = P.x * P.x * P.x + mpq_class(mpz_class(a)) * P.x + mpq_class(mpz_class(b));
	return lhs == rhs;
}

std::vector<u64> primes_dividing(mpz_class n)
{
	std::vector<u64> out;
	n = abs(n);
	if (n == 0)
		return out;
	for (u64 q = 2; q < 1000000 && n > 1; ++q) {
		if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
			out.push_back(q);
			while (mpz_divisible_ui_p(n.get_mpz_t(), q))
				n /= q;
		}
	}
	if (n > 1 && mpz_fits_ulong_p(n.get_mpz_t())) {
		for (u64 q : prime_divisors(n.get_ui()))
			out.push_back(q);
	}
	// a cofactor above 64 bits stays unfactored; is_excluded tests divisibility directly
	return out;
}

bool divides(u64 p, const mpz_class &n) { return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0; }

u64 reduce_rational(const mpq_class &v, u64 p)
{
	u64 num = mpz_fdiv_ui(v.get_num_mpz_t(), p);
	u64 den = mpz_fdiv_ui(v.get_den_mpz_t(), p);
	return mulmod(num, invmod(den, p), p);
}

} // namespace

CurveSpec make_curve(i64 a, i64 b, std::vector<RationalPoint> points, std::vector<u64> extra_support)
{
	CurveSpec c;
	c.a = a;
	c.b = b;
	if (c.disc_core() == 0)
		throw config_error("singular curve: 4a^3 + 27b^2 = 0");
	for (auto &P : points) {
		if (!P.identity) {
			P.x.canonicalize();
			P.y.canonicalize();
		}
		if (!satisfies_equation(a, b, P))
			throw config_error("point (" + P.x.get_str() + ", " + P.y.get_str() + ") is not on the curve");
	}
	c.points = std::move(points);
	auto support = primes_dividing(2 * c.disc_core());
	for (u64 q : extra_support) {
		if (!is_prime(q))
			throw config_error("conductor support entry " + std::to_string(q) + " is not prime");
		support.push_back(q);
	}
	std::sort(support.begin(), support.end());
	support.erase(std::unique(support.begin(), support.end()), support.end());
	c.conductor_support = std::move(support);
	return c;
}

RationalPoint parse_point(const std::string &text)
{
	if (text == "O" || text == "inf" || text == "infinity")
		return RationalPoint::infinity();
	auto comma = text.find(',');
	if (comma == std::string::npos)
		throw config_error("point must be 'x,y': " + text);
	RationalPoint P;
	try {
		P.x = mpq_class(text.substr(0, comma));
		P.y = mpq_class(text.substr(comma + 1));
	} catch (const std::invalid_argument &) {
		throw config_error("malformed point coordinates: " + text);
	}
	if (P.x.get_den() == 0 || P.y.get_den() == 0)
		throw config_error("zero denominator in point: " + text);
	P.x.canonicalize();
	P.y.canonicalize();
	return P;
}

bool is_excluded(const CurveSpec &curve, u64 p, u64 f)
{
	if (p == 2)
		return true;
	if (f > 1 && f % p == 0)
		return true;
	if (divides(p, curve.disc_core()))
		return true;
	if (std::binary_search(curve.conductor_support.begin(), curve.conductor_support.end(), p))
		return true;
	for (const auto &P : curve.points) {
		if (P.identity)
			continue;
		if (divides(p, P.x.get_den()) || divides(p, P.y.get_den()))
			return true;
	}
	return false;
}

ReducedCurve reduce_curve(const CurveSpec &curve, u64 p, u64 f)
{
	if (p == 2)
		throw excluded_prime(p, "divides 2");
	if (f > 1 && f % p == 0)
		throw excluded_prime(p, "ramified in the congruence field");
	if (divides(p, curve.disc_core()) ||
	    std::binary_search(curve.conductor_support.begin(), curve.conductor_support.end(), p))
		throw excluded_prime(p, "bad reduction");
	if (is_excluded(curve, p, f))
		throw excluded_prime(p, "divides a point denominator");
	return {p, reduce_signed(curve.a, p), reduce_signed(curve.b, p)};
}

std::vector<Point> reduce_points(const CurveSpec &curve, const ReducedCurve &rc)
{
	std::vector<Point> out;
	out.reserve(curve.points.size());
	for (const auto &P : curve.points) {
		if (P.identity)
			out.push_back(Point::identity());
		else
			out.push_back(Point::affine(reduce_rational(P.x, rc.p), reduce_rational(P.y, rc.p)));
	}
	return out;
}

u64 curve_rhs(const ReducedCurve &rc, u64 x)
{
	const u64 p = rc.p;
	u64 x2 = mulmod(x, x, p);
	return addmod(addmod(mulmod(x2, x, p), mulmod(rc.a, x, p), p), rc.b, p);
}

bool on_curve(const ReducedCurve &rc, const Point &P)
{
	if (P.inf)
		return true;
	return mulmod(P.y, P.y, rc.p) == curve_rhs(rc, P.x);
}

Point ec_neg(const ReducedCurve &rc, const Point &P)
{
	if (P.inf)
		return P;
	return Point::affine(P.x, P.y == 0 ? 0 : rc.p - P.y);
}

Point ec_dbl(const ReducedCurve &rc, const Point &P)
{
	const u64 p = rc.p;
	if (P.inf || P.y == 0)
		return Point::identity();
	u64 num = addmod(mulmod(3, mulmod(P.x, P.x, p), p), rc.a, p);
	u64 lambda = mulmod(num, invmod(addmod(P.y, P.y, p), p), p);
	u64 x3 = submod(mulmod(lambda, lambda, p), addmod(P.x, P.x, p), p);
	u64 y3 = submod(mulmod(lambda, submod(P.x, x3, p), p), P.y, p);
	return Point::affine(x3, y3);
}

Point ec_add(const ReducedCurve &rc, const Point &P, const Point &Q)
{
	const u64 p = rc.p;
	if (P.inf)
		return Q;
	if (Q.inf)
		return P;
	if (P.x == Q.x) {
		if (P.y == Q.y)
			return ec_dbl(rc, P);
		return Point::identity();
	}
	u64 lambda = mulmod(submod(Q.y, P.y, p), invmod(submod(Q.x, P.x, p), p), p);
	u64 x3 = submod(submod(mulmod(lambda, lambda, p), P.x, p), Q.x, p);
	u64 y3 = submod(mulmod(lambda, submod(P.x, x3, p), p), P.y, p);
	return Point::affine(x3, y3);
}

Point ec_sub(const ReducedCurve &rc, const Point &P, const Point &Q) { return ec_add(rc, P, ec_neg(rc, Q)); }

namespace {

struct Jacobian {
	u64 X = 1, Y = 1, Z = 0;
};

Jacobian jac_dbl(const ReducedCurve &rc, const Jacobian &P)
{
	const u64 p = rc.p;
	if (P.Z == 0 || P.Y == 0)
		return {};
	u64 XX = mulmod(P.X, P.X, p);
	u64 YY = mulmod(P.Y, P.Y, p);
	u64 YYYY = mulmod(YY, YY, p);
	u64 ZZ = mulmod(P.Z, P.Z, p);
	u64 S = mulmod(4 % p, mulmod(P.X, YY, p), p);
	u64 M = addmod(mulmod(3 % p, XX, p), mulmod(rc.a, mulmod(ZZ, ZZ, p), p), p);
	u64 X3 = submod(mulmod(M, M, p), addmod(S, S, p), p);
	u64 Y3 = submod(mulmod(M, submod(S, X3, p), p), mulmod(8 % p, YYYY, p), p);
	u64 Z3 = mulmod(addmod(P.Y, P.Y, p), P.Z, p);
	return {X3, Y3, Z3};
}

Jacobian jac_add_affine(const ReducedCurve &rc, const Jacobian &P, const Point &Q)
{
	const u64 p = rc.p;
	if (Q.inf)
		return P;
	if (P.Z == 0)
		return {Q.x, Q.y, 1};
	u64 Z1Z1 = mulmod(P.Z, P.Z, p);
	u64 U2 = mulmod(Q.x, Z1Z1, p);
	u64 S2 = mulmod(Q.y, mulmod(P.Z, Z1Z1, p), p);
	u64 H = submod(U2, P.X, p);
	u64 r = submod(S2, P.Y, p);
	if (H == 0) {
		if (r == 0)
			return jac_dbl(rc, P);
		return {};
	}
	u64 HH = mulmod(H, H, p);
	u64 HHH = mulmod(H, HH, p);
	u64 V = mulmod(P.X, HH, p);
	u64 X3 = submod(submod(mulmod(r, r, p), HHH, p), addmod(V, V, p), p);
	u64 Y3 = submod(mulmod(r, submod(V, X3, p), p), mulmod(P.Y, HHH, p), p);
	u64 Z3 = mulmod(P.Z, H, p);
	return {X3, Y3, Z3};
}

Point to_affine(const ReducedCurve &rc, const Jacobian &P)
{
	const u64 p = rc.p;
	if (P.Z == 0)
		return Point::identity();
	u64 zi = invmod(P.Z, p);
	u64 zi2 = mulmod(zi, zi, p);
	return Point::affine(mulmod(P.X, zi2, p), mulmod(P.Y, mulmod(zi2, zi, p), p));
}

} // namespace

Point ec_mul(const ReducedCurve &rc, const Point &P, u64 k)
{
	if (P.inf || k == 0)
		return Point::identity();
	Jacobian acc;
	int top = 63 - __builtin_clzll(k);
	for (int i = top; i >= 0; --i) {
		acc = jac_dbl(rc, acc);
		if ((k >> i) & 1)
			acc = jac_add_affine(rc, acc, P);
	}
	return to_affine(rc, acc);
}

Point ec_mul_signed(const ReducedCurve &rc, const Point &P, i64 k)
{
	if (k >= 0)
		return ec_mul(rc, P, static_cast<u64>(k));
	return ec_neg(rc, ec_mul(rc, P, static_cast<u64>(-(k + 1)) + 1));
}

Point random_point(const ReducedCurve &rc, std::mt19937_64 &rng)
{
	for (;;) {
		u64 x = rng() % rc.p;
		u64 r = curve_rhs(rc, x);
		if (r == 0)
			return Point::affine(x, 0);
		if (legendre(r, rc.p) == 1) {
			u64 y = sqrt_mod(r, rc.p);
			if (rng() & 1)
				y = rc.p - y;
			return Point::affine(x, y);
		}
	}
}

ReducedCurve quadratic_twist(const ReducedCurve &rc)
{
	u64 d = 2;
	while (legendre(d, rc.p) != -1)
		++d;
	u64 d2 = mulmod(d, d, rc.p);
	return {rc.p, mulmod(rc.a, d2, rc.p), mulmod(rc.b, mulmod(d2, d, rc.p), rc.p)};
}

std::uint64_t prime_seed(const ReducedCurve &rc)
{
	std::uint64_t h = rc.p * 0x9e3779b97f4a7c15ull;
	h ^= (rc.a + 0x7f4a7c15ull) * 0xbf58476d1ce4e5b9ull;
	h ^= (rc.b + 0x1ce4e5b9ull) * 0x94d049bb133111ebull;
	return h;
}

} // namespace artinlab
