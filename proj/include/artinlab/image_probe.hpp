#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artinlab/curve.hpp"

namespace artinlab {

enum class ProbeVerdict { consistent_with_surjective, non_surjective, insufficient_samples };

std::string to_string(ProbeVerdict v);

struct ProbeResult {
	u64 q = 0;
	ProbeVerdict verdict = ProbeVerdict::insufficient_samples;
	u64 sampled = 0;    ///< primes of good reduction used
	u64 scanned_to = 0; ///< largest prime looked at
	/// (trace mod q, det mod q) classes of GL2(F_q) never observed although expected often.
	std::vector<std::pair<u64, u64>> missing;
};

inline constexpr u64 default_probe_budget = 5000;
inline constexpr u64 default_probe_scan_limit = 10000000;
/// A class counts as provably missing once its expected number of hits reaches this.
inline constexpr double probe_expected_threshold = 10.0;

/// Samples the first `budget` primes p != q of good reduction and compares the observed pairs
/// (a_p mod q, p mod q) with the frequencies of (trace, det) over GL2(F_q).
ProbeResult image_probe(const CurveSpec &curve, u64 q, u64 budget = default_probe_budget,
                        u64 scan_limit = default_probe_scan_limit);

/// Same, for several q, sharing one prime scan.
std::vector<ProbeResult> image_probe_all(const CurveSpec &curve, const std::vector<u64> &qs,
                                         u64 budget = default_probe_budget,
                                         u64 scan_limit = default_probe_scan_limit);

/// Number of elements of GL2(F_q) with the given trace and determinant.
u64 gl2_class_size(u64 q, u64 trace, u64 det);

} // namespace artinlab
