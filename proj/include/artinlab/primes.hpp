#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "artinlab/modular.hpp"

namespace artinlab {

/// Closed interval [lo, hi] of integers to be sieved.
struct PrimeRange {
	u64 lo = 2;
	u64 hi = 2;
};

/// A squarefree k together with mu(k) and its prime factors in increasing order.
struct SquarefreeTerm {
	u64 k = 1;
	int mu = 1;
	std::vector<u64> factors;
};

struct SieveOptions {
	std::size_t segment_size = std::size_t(1) << 20;
	u64 max_hi = u64(1) << 40;
};

/// Calls `visit` for every prime in [range.lo, range.hi] in increasing order.
/// Memory use is O(segment_size + sqrt(hi)).
void for_each_prime(PrimeRange range, const std::function<void(u64)> &visit,
                    const SieveOptions &opts = {});

/// All primes in [range.lo, range.hi], increasing. Throws capacity_error if hi > opts.max_hi.
std::vector<u64> sieve_primes(PrimeRange range, const SieveOptions &opts = {});

/// Every squarefree k <= limit, increasing, built from a smallest-prime-factor table.
std::vector<SquarefreeTerm> squarefree_stream(u64 limit);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Prime factors of n with multiplicity, sorted. factorize(1) is empty.
std::vector<u64> factorize(u64 n);

/// Factorization as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<u64, int>> factorize_grouped(u64 n);

/// Distinct prime divisors of a squarefree or general n.
std::vector<u64> prime_divisors(u64 n);

/// Euler phi.
u64 euler_phi(u64 n);

bool is_squarefree(u64 n);

/// Moebius function.
int moebius(u64 n);

} // namespace artinlab
