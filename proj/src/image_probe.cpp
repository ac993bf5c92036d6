#include "artinlab/image_probe.hpp"

#include <map>
#include <stdexcept>

#include "artinlab/errors.hpp"
#include "artinlab/galois_model.hpp"
#include "artinlab/point_count.hpp"
#include "artinlab/primes.hpp"

namespace artinlab {

std::string to_string(ProbeVerdict v)
{
	switch (v) {
	case ProbeVerdict::consistent_with_surjective:
		return "consistent-with-surjective";
	case ProbeVerdict::non_surjective:
		return "non-surjective";
	case ProbeVerdict::insufficient_samples:
		return "insufficient-samples";
	}
	return "unknown";
}

namespace {

std::vector<u64> class_table(u64 q)
{
	std::vector<u64> table(q * q, 0);
	for (const auto &M : gl2_elements(q))
		++table[((M[0] + M[3]) % q) * q + (M[0] * M[3] + q * q - M[1] * M[2]) % q];
	return table;
}

} // namespace

u64 gl2_class_size(u64 q, u64 trace, u64 det) { return class_table(q)[(trace % q) * q + det % q]; }

std::vector<ProbeResult> image_probe_all(const CurveSpec &curve, const std::vector<u64> &qs, u64 budget,
                                         u64 scan_limit)
{
	for (u64 q : qs)
		if (!is_prime(q) || q > 13)
			throw config_error("image probe needs a prime q <= 13, got " + std::to_string(q));

	std::vector<ProbeResult> out(qs.size());
	std::vector<std::vector<u64>> seen(qs.size());
	for (std::size_t i = 0; i < qs.size(); ++i) {
		out[i].q = qs[i];
		seen[i].assign(qs[i] * qs[i], 0);
	}
	if (budget < 100 || qs.empty())
		return out;

	std::vector<std::pair<u64, i64>> samples; // (p, a_p) for good p, increasing
	u64 last = 0;
	const u64 chunk = 1 << 16;
	const u64 extra = qs.size(); // p = q is skipped per q
	for (u64 lo = 3; lo <= scan_limit && samples.size() < budget + extra; lo += chunk) {
		u64 hi = std::min(scan_limit, lo + chunk - 1);
		for_each_prime({lo, hi}, [&](u64 p) {
			if (samples.size() >= budget + extra)
				return;
			last = p;
			if (is_excluded(curve, p))
				return;
			samples.emplace_back(p, count_points(reduce_curve(curve, p)).a_p);
		});
	}

	for (std::size_t i = 0; i < qs.size(); ++i) {
		const u64 q = qs[i];
		auto &res = out[i];
		for (auto [p, a] : samples) {
			if (res.sampled == budget)
				break;
			if (p == q)
				continue;
			u64 t = static_cast<u64>(reduce_signed(a, q));
			++seen[i][t * q + p % q];
			++res.sampled;
			res.scanned_to = p;
		}
		if (res.sampled < budget) {
			res.scanned_to = last;
			res.verdict = ProbeVerdict::insufficient_samples;
			continue;
		}
		const auto table = class_table(q);
		const double order = static_cast<double>(gl2_order(q));
		for (u64 t = 0; t < q; ++t)
			for (u64 d = 1; d < q; ++d) {
				double expected = static_cast<double>(budget) * static_cast<double>(table[t * q + d]) / order;
				if (seen[i][t * q + d] == 0 && expected >= probe_expected_threshold)
					res.missing.emplace_back(t, d);
			}
		res.verdict = res.missing.empty() ? ProbeVerdict::consistent_with_surjective : ProbeVerdict::non_surjective;
	}
	return out;
}

ProbeResult image_probe(const CurveSpec &curve, u64 q, u64 budget, u64 scan_limit)
{
	return image_probe_all(curve, {q}, budget, scan_limit).front();
}

} // namespace artinlab
