#pragma once

#include <functional>
#include <map>
#include <string>

#include "artinlab/galois_model.hpp"
#include "artinlab/primes.hpp"
#include "artinlab/rational.hpp"

namespace artinlab {

/// A family of splitting densities delta_k over squarefree k, with a bound delta_k <= c / k^e.
struct FamilyDescriptor {
	std::string name;
	std::function<Rational(const SquarefreeTerm &)> delta;
	/// delta_1 = 1 and delta_k is the product of delta_q over q | k.
	bool multiplicative = false;
	Rational tail_constant = 1;
	Rational tail_exponent = Rational(3, 2);
	/// The bound delta_k <= c / k^e is proven rather than assumed.
	bool tail_certified = false;
};

/// The limit lies in [center - tail, center + tail] whenever the tail data is valid.
struct DensityInterval {
	Rational center;
	Rational tail;
	u64 y = 1;
	bool certified = false;

	Rational lo() const { return center - tail; }
	Rational hi() const { return center + tail; }
	Rational width() const { return 2 * tail; }
	bool overlaps(const DensityInterval &o) const { return lo() <= o.hi() && o.lo() <= hi(); }
};

/// Sum over squarefree k <= y of mu(k) delta_k.
Rational truncated_series(const FamilyDescriptor &desc, u64 y);

/// Upper bound for the sum over k > y of c / k^e: c y^(1-e) / (e - 1) + c / (y + 1)^e, rounded up.
/// Throws domain_error when e <= 1.
Rational tail_bound(const FamilyDescriptor &desc, u64 y);

DensityInterval density_with_interval(const FamilyDescriptor &desc, u64 y);

/// Product over primes q <= Q of (1 - delta_q). The limit lies in [P (1 - T), P] with T the tail
/// bound at Q; the returned interval is centred at P with radius P min(T, 1).
/// Throws domain_error for non-multiplicative families.
DensityInterval euler_product(const FamilyDescriptor &desc, u64 Q);

/// Sum over k | l of mu(k) delta_k.
Rational partial_density(u64 l, const FamilyDescriptor &desc);

enum class PositivityKind { zero, positive, inconclusive };

std::string to_string(PositivityKind k);

struct PositivityVerdict {
	PositivityKind kind = PositivityKind::inconclusive;
	Rational lower_bound = 0;
	std::string reason;
};

/// `empty_sets` maps q to "C_q is empty". Never claims positivity beyond the product criterion.
PositivityVerdict positivity_check(const FamilyDescriptor &desc, const std::map<u64, bool> &empty_sets,
                                   u64 Q = 1000);

/// Checks 0 <= delta_k <= delta_1 and delta_k <= c / k^e exactly for squarefree k <= kmax.
/// Throws domain_error naming the first failing k.
void validate_descriptor(const FamilyDescriptor &desc, u64 kmax = 1000);

/// r >= base^(-s) for s > 0, verified exactly.
Rational inv_pow_upper(u64 base, const Rational &s);

/// delta_{C_F,k} under the generic image model. The tail data delta_k <= (4/3) c_ov / k^(3+2g)
/// is proven for the model (c_ov accounts for degree overrides). Multiplicative when f = 1.
FamilyDescriptor cyclicity_family(const GenericImageModel &model,
                                  const CongruenceCondition &cond = CongruenceCondition::none());

} // namespace artinlab
