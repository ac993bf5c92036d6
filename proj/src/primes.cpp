#include "artinlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "artinlab/errors.hpp"

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

std::vector<u64> simple_sieve(u64 limit)
{
	std::vector<u64> out;
	if (limit < 2)
		return out;
	std::vector<bool> composite(limit + 1, false);
	for (u64 i = 2; i <= limit; ++i) {
		if (composite[i])
			continue;
		out.push_back(i);
		for (u64 j = i * i; j <= limit; j += i)
			composite[j] = true;
	}
	return out;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s)
{
	u64 x = powmod(a, d, n);
	if (x == 1 || x == n - 1)
		return false;
	for (int r = 1; r < s; ++r) {
		x = mulmod(x, x, n);
		if (x == n - 1)
			return false;
	}
	return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
u64 pollard_rho(u64 n)
{
	if (n % 2 == 0)
		return 2;
	for (u64 c = 1;; ++c) {
		u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
		const u64 m = 128;
		u64 r = 1;
		auto f = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };
		do {
			x = y;
			for (u64 i = 0; i < r; ++i)
				y = f(y);
			u64 k = 0;
			do {
				ys = y;
				for (u64 i = 0; i < std::min(m, r - k); ++i) {
					y = f(y);
					q = mulmod(q, x > y ? x - y : y - x, n);
				}
				g = gcd_u64(q, n);
				k += m;
			} while (k < r && g == 1);
			r *= 2;
		} while (g == 1);
		if (g == n) {
			do {
				ys = f(ys);
				g = gcd_u64(x > ys ? x - ys : ys - x, n);
			} while (g == 1);
		}
		if (g != n)
			return g;
	}
}

void factor_rec(u64 n, std::vector<u64> &out)
{
	if (n == 1)
		return;
	if (is_prime(n)) {
		out.push_back(n);
		return;
	}
	u64 d = pollard_rho(n);
	factor_rec(d, out);
	factor_rec(n / d, out);
}

} // namespace

void for_each_prime(PrimeRange range, const std::function<void(u64)> &visit, const SieveOptions &opts)
{
	if (range.hi > opts.max_hi)
		throw capacity_error("sieve bound " + std::to_string(range.hi) + " exceeds maximum " +
		                     std::to_string(opts.max_hi));
	if (range.hi < 2 || range.lo > range.hi)
		return;
	const u64 lo = std::max<u64>(range.lo, 2);
	const u64 hi = range.hi;
	const auto base = simple_sieve(isqrt(hi));
	const u64 seg = std::max<std::size_t>(opts.segment_size, 64);
	std::vector<char> mark(seg);
	for (u64 start = lo; start <= hi;) {
		const u64 end = (hi - start >= seg - 1) ? start + seg - 1 : hi;
		const u64 len = end - start + 1;
		std::fill(mark.begin(), mark.begin() + static_cast<std::ptrdiff_t>(len), 1);
		for (u64 q : base) {
			if (q * q > end)
				break;
			u64 first = std::max(q * q, (start + q - 1) / q * q);
			for (u64 j = first; j <= end; j += q)
				mark[j - start] = 0;
		}
		for (u64 i = 0; i < len; ++i)
			if (mark[i])
				visit(start + i);
		if (end == hi)
			break;
		start = end + 1;
	}
}

std::vector<u64> sieve_primes(PrimeRange range, const SieveOptions &opts)
{
	std::vector<u64> out;
	for_each_prime(range, [&](u64 p) { out.push_back(p); }, opts);
	return out;
}

std::vector<SquarefreeTerm> squarefree_stream(u64 limit)
{
	if (limit > (u64(1) << 32))
		throw capacity_error("squarefree stream limit too large: " + std::to_string(limit));
	std::vector<SquarefreeTerm> out;
	if (limit < 1)
		return out;
	std::vector<std::uint32_t> spf(limit + 1, 0);
	for (u64 i = 2; i <= limit; ++i) {
		if (spf[i])
			continue;
		for (u64 j = i; j <= limit; j += i)
			if (!spf[j])
				spf[j] = static_cast<std::uint32_t>(i);
	}
	out.push_back({1, 1, {}});
	for (u64 k = 2; k <= limit; ++k) {
		SquarefreeTerm t{k, 1, {}};
		u64 m = k;
		bool squarefree = true;
		while (m > 1) {
			u64 q = spf[m];
			m /= q;
			if (m % q == 0) {
				squarefree = false;
				break;
			}
			t.factors.push_back(q);
			t.mu = -t.mu;
		}
		if (squarefree)
			out.push_back(std::move(t));
	}
	return out;
}

bool is_prime(u64 n)
{
	if (n < 2)
		return false;
	for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
		if (n % q == 0)
			return n == q;
	}
	u64 d = n - 1;
	int s = 0;
	while ((d & 1) == 0) {
		d >>= 1;
		++s;
	}
	// this base set is deterministic for all n < 2^64
	for (u64 a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
		u64 b = a % n;
		if (b == 0)
			continue;
		if (miller_rabin_witness(n, b, d, s))
			return false;
	}
	return true;
}

std::vector<u64> factorize(u64 n)
{
	std::vector<u64> out;
	if (n <= 1)
		return out;
	for (u64 q = 2; q <= 10000 && q * q <= n; q += (q == 2 ? 1 : 2)) {
		while (n % q == 0) {
			out.push_back(q);
			n /= q;
		}
	}
	if (n > 1)
		factor_rec(n, out);
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<std::pair<u64, int>> factorize_grouped(u64 n)
{
	std::vector<std::pair<u64, int>> out;
	for (u64 q : factorize(n)) {
		if (!out.empty() && out.back().first == q)
			++out.back().second;
		else
			out.emplace_back(q, 1);
	}
	return out;
}

std::vector<u64> prime_divisors(u64 n)
{
	std::vector<u64> out;
	for (auto [q, e] : factorize_grouped(n))
		out.push_back(q);
	return out;
}

u64 euler_phi(u64 n)
{
	u64 phi = n;
	for (u64 q : prime_divisors(n))
		phi = phi / q * (q - 1);
	return phi;
}

bool is_squarefree(u64 n)
{
	if (n == 0)
		return false;
	for (auto [q, e] : factorize_grouped(n))
		if (e > 1)
			return false;
	return true;
}

int moebius(u64 n)
{
	int mu = 1;
	for (auto [q, e] : factorize_grouped(n)) {
		if (e > 1)
			return 0;
		mu = -mu;
	}
	return mu;
}

} // namespace artinlab
