#pragma once

#include <cstdint>

namespace artinlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m)
{
	u64 s = a + b;
	return (s >= m || s < a) ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 e, u64 m)
{
	u64 r = 1 % m;
	base %= m;
	while (e) {
		if (e & 1)
			r = mulmod(r, base, m);
		base = mulmod(base, base, m);
		e >>= 1;
	}
	return r;
}

/// Reduces a signed integer into [0, m).
inline u64 reduce_signed(i64 v, u64 m)
{
	i128 r = static_cast<i128>(v) % static_cast<i128>(m);
	if (r < 0)
		r += m;
	return static_cast<u64>(r);
}

/// Inverse of a modulo m; requires gcd(a, m) = 1 and m < 2^63.
inline u64 invmod(u64 a, u64 m)
{
	i64 t = 0, newt = 1;
	i64 r = static_cast<i64>(m), newr = static_cast<i64>(a % m);
	while (newr != 0) {
		i64 q = r / newr;
		i64 tmp = t - q * newt;
		t = newt;
		newt = tmp;
		tmp = r - q * newr;
		r = newr;
		newr = tmp;
	}
	if (t < 0)
		t += m;
	return static_cast<u64>(t);
}

inline u64 gcd_u64(u64 a, u64 b)
{
	while (b) {
		u64 t = a % b;
		a = b;
		b = t;
	}
	return a;
}

/// Legendre symbol (a/p) for an odd prime p via Euler's criterion: returns 0, 1 or -1.
inline int legendre(u64 a, u64 p)
{
	a %= p;
	if (a == 0)
		return 0;
	return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Square root of a quadratic residue modulo an odd prime (Tonelli-Shanks).
u64 sqrt_mod(u64 a, u64 p);

} // namespace artinlab
