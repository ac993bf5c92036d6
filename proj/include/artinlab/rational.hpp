#pragma once

#include <string>

#include <gmpxx.h>

namespace artinlab {

/// Exact rationals for every density value.
using Rational = mpq_class;

/// "p/q" (or "p" when q = 1).
inline std::string to_string(const Rational &r) { return r.get_str(); }

/// Always "p/q", including integers.
inline std::string to_fraction_string(const Rational &r)
{
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational make_rational(long num, unsigned long den = 1)
{
	Rational r(num, den);
	r.canonicalize();
	return r;
}

} // namespace artinlab
