#pragma once

// Enumerates the explicit Galois model directly over Z/l (no CRT split), as an independent
// check of the per-prime enumeration and of the closed-form densities.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "oracles/brute_force.hpp"

namespace oracle {

struct ModelHistogram {
	std::uint64_t total = 0;
	// unit u mod f -> elements whose restriction to every L_q (q | l) is non-trivial
	std::map<std::uint64_t, std::uint64_t> all_nontrivial;
	// unit u mod f -> elements trivial on L_l
	std::map<std::uint64_t, std::uint64_t> identity;
};

inline ModelHistogram model_histogram(std::uint64_t l, std::uint64_t f, int g = 0)
{
	ModelHistogram h;
	const auto qs_raw = trial_factor(l);
	std::vector<std::uint64_t> qs(qs_raw.begin(), qs_raw.end());
	const std::uint64_t d = std::gcd(l, f);
	std::uint64_t tcount = 1;
	for (int i = 0; i < 2 * g; ++i)
		tcount *= l;
	std::vector<std::uint64_t> t(2 * g);
	for (std::uint64_t u = 0; u < f; ++u) {
		if (std::gcd(u, f) != 1)
			continue;
		const std::uint64_t ukey = f == 1 ? 0 : u;
		for (std::uint64_t a = 0; a < l; ++a)
			for (std::uint64_t b = 0; b < l; ++b)
				for (std::uint64_t c = 0; c < l; ++c)
					for (std::uint64_t e = 0; e < l; ++e) {
						const std::uint64_t det = (a * e + l * l - b * c) % l;
						if (std::gcd(det, l) != 1 && l != 1)
							continue;
						if (det % d != u % d)
							continue;
						for (std::uint64_t code = 0; code < tcount; ++code) {
							std::uint64_t x = code;
							for (auto &ti : t) {
								ti = x % l;
								x /= l;
							}
							++h.total;
							bool all_nt = true, all_id = true;
							for (std::uint64_t q : qs) {
								bool id = a % q == 1 % q && b % q == 0 && c % q == 0 && e % q == 1 % q;
								for (auto ti : t)
									id = id && ti % q == 0;
								all_nt = all_nt && !id;
								all_id = all_id && id;
							}
							if (all_nt)
								++h.all_nontrivial[ukey];
							if (all_id)
								++h.identity[ukey];
						}
					}
	}
	return h;
}

} // namespace oracle
