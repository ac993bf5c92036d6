#include "artinlab/density.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

Rational pow_q(const Rational &r, unsigned long n)
{
	mpz_class num, den;
	mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), n);
	mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), n);
	Rational out(num, den);
	out.canonicalize();
	return out;
}

SquarefreeTerm term_from_primes(const std::vector<u64> &qs)
{
	SquarefreeTerm t;
	t.k = 1;
	for (u64 q : qs)
		t.k *= q;
	t.mu = qs.size() % 2 ? -1 : 1;
	t.factors = qs;
	return t;
}

void check_exponent(const FamilyDescriptor &desc)
{
	if (desc.tail_exponent <= 1)
		throw domain_error("family '" + desc.name + "': tail exponent must exceed 1");
	if (desc.tail_constant < 0)
		throw domain_error("family '" + desc.name + "': tail constant must be non-negative");
}

} // namespace

std::string to_string(PositivityKind k)
{
	switch (k) {
	case PositivityKind::zero:
		return "zero";
	case PositivityKind::positive:
		return "positive";
	case PositivityKind::inconclusive:
		return "inconclusive";
	}
	return "unknown";
}

Rational inv_pow_upper(u64 base, const Rational &s)
{
	if (s <= 0 || base == 0)
		throw domain_error("inv_pow_upper: need base >= 1 and s > 0");
	const unsigned long num = s.get_num().get_ui();
	const unsigned long den = s.get_den().get_ui();
	Rational basepow = pow_q(Rational(static_cast<unsigned long>(base)), num);
	double approx = std::pow(static_cast<double>(base), -s.get_d());
	Rational r(approx * (1 + 1e-12));
	// r^den * base^num >= 1  <=>  r >= base^(-num/den)
	while (pow_q(r, den) * basepow < 1)
		r *= Rational(1000000001, 1000000000);
	return r;
}

Rational truncated_series(const FamilyDescriptor &desc, u64 y)
{
	if (y < 1)
		throw domain_error("truncated_series: y must be >= 1");
	Rational sum = 0;
	for (const auto &t : squarefree_stream(y)) {
		Rational d = desc.delta(t);
		if (t.mu > 0)
			sum += d;
		else
			sum -= d;
	}
	return sum;
}

Rational tail_bound(const FamilyDescriptor &desc, u64 y)
{
	check_exponent(desc);
	if (y < 1)
		throw domain_error("tail_bound: y must be >= 1");
	const Rational &c = desc.tail_constant;
	const Rational &e = desc.tail_exponent;
	Rational integral = c * inv_pow_upper(y, e - 1) / (e - 1);
	Rational first = c * inv_pow_upper(y + 1, e);
	Rational out = integral + first;
	out.canonicalize();
	return out;
}

DensityInterval density_with_interval(const FamilyDescriptor &desc, u64 y)
{
	DensityInterval out;
	out.center = truncated_series(desc, y);
	out.tail = tail_bound(desc, y);
	out.y = y;
	out.certified = desc.tail_certified;
	return out;
}

DensityInterval euler_product(const FamilyDescriptor &desc, u64 Q)
{
	if (!desc.multiplicative)
		throw domain_error("euler_product: family '" + desc.name + "' is not multiplicative");
	Rational P = 1;
	if (Q >= 2)
		for (u64 q : sieve_primes({2, Q}))
			P *= 1 - desc.delta(term_from_primes({q}));
	P.canonicalize();
	Rational T = tail_bound(desc, std::max<u64>(Q, 1));
	if (T > 1)
		T = 1;
	DensityInterval out;
	out.center = P;
	out.tail = P * T;
	out.tail.canonicalize();
	out.y = Q;
	out.certified = desc.tail_certified;
	return out;
}

Rational partial_density(u64 l, const FamilyDescriptor &desc)
{
	if (!is_squarefree(l))
		throw domain_error("partial_density: l must be squarefree");
	const auto qs = prime_divisors(l);
	Rational sum = 0;
	for (std::size_t mask = 0; mask < (std::size_t(1) << qs.size()); ++mask) {
		std::vector<u64> sub;
		for (std::size_t i = 0; i < qs.size(); ++i)
			if (mask & (std::size_t(1) << i))
				sub.push_back(qs[i]);
		Rational d = desc.delta(term_from_primes(sub));
		if (sub.size() % 2)
			sum -= d;
		else
			sum += d;
	}
	return sum;
}

PositivityVerdict positivity_check(const FamilyDescriptor &desc, const std::map<u64, bool> &empty_sets, u64 Q)
{
	PositivityVerdict v;
	for (const auto &[q, empty] : empty_sets)
		if (empty) {
			v.kind = PositivityKind::zero;
			v.reason = "C_q is empty at q = " + std::to_string(q);
			return v;
		}
	if (!desc.multiplicative) {
		v.reason = "family is not multiplicative; no criterion applies";
		return v;
	}
	if (!desc.tail_certified) {
		v.reason = "tail constant is not certified";
		return v;
	}
	Rational P = 1;
	for (u64 q : sieve_primes({2, std::max<u64>(Q, 2)})) {
		Rational d = desc.delta(term_from_primes({q}));
		if (d >= 1) {
			v.reason = "delta_q = 1 at q = " + std::to_string(q);
			return v;
		}
		P *= 1 - d;
	}
	Rational T = tail_bound(desc, std::max<u64>(Q, 2));
	if (T >= 1) {
		v.reason = "tail bound too weak at Q = " + std::to_string(Q);
		return v;
	}
	v.kind = PositivityKind::positive;
	v.lower_bound = P * (1 - T);
	v.lower_bound.canonicalize();
	v.reason = "Euler product with certified tail";
	return v;
}

void validate_descriptor(const FamilyDescriptor &desc, u64 kmax)
{
	check_exponent(desc);
	const unsigned long num = desc.tail_exponent.get_num().get_ui();
	const unsigned long den = desc.tail_exponent.get_den().get_ui();
	const Rational cpow = pow_q(desc.tail_constant, den);
	Rational d1;
	for (const auto &t : squarefree_stream(kmax)) {
		Rational d = desc.delta(t);
		if (t.k == 1)
			d1 = d;
		if (d < 0 || d > d1)
			throw domain_error("family '" + desc.name + "': delta_" + std::to_string(t.k) + " out of range");
		if (pow_q(d, den) * pow_q(Rational(static_cast<unsigned long>(t.k)), num) > cpow)
			throw domain_error("family '" + desc.name + "': tail bound fails at k = " + std::to_string(t.k));
	}
}

FamilyDescriptor cyclicity_family(const GenericImageModel &model, const CongruenceCondition &cond)
{
	model.validate();
	FamilyDescriptor desc;
	desc.name = "cyclicity(g=" + std::to_string(model.g) + ", f=" + std::to_string(cond.f) + ")";
	desc.multiplicative = cond.f == 1 && !cond.residues.empty();
	desc.tail_exponent = 3 + 2 * model.g;
	desc.tail_certified = true;
	Rational c(4, 3);
	for (const auto &[q, deg] : model.degree_overrides) {
		Rational ratio(generic_prime_degree(q, model.g), deg);
		ratio.canonicalize();
		c *= ratio;
	}
	desc.tail_constant = c;

	const u64 f = cond.f;
	const u64 phi_f = euler_phi(f);
	std::map<u64, u64> hits; // d | f -> #{c in residues : c = 1 mod d}
	for (u64 d = 1; d <= f; ++d)
		if (f % d == 0) {
			u64 h = 0;
			for (u64 r : cond.residues)
				h += r % d == 1 % d;
			hits[d] = h;
		}
	std::map<u64, mpz_class> prime_deg;
	for (const auto &[q, deg] : model.degree_overrides)
		prime_deg[q] = deg;
	const int g = model.g;
	desc.delta = [hits, prime_deg, f, phi_f, g](const SquarefreeTerm &t) {
		mpz_class deg = 1;
		u64 d = 1;
		for (u64 q : t.factors) {
			auto it = prime_deg.find(q);
			deg *= it != prime_deg.end() ? it->second : generic_prime_degree(q, g);
			if (f % q == 0)
				d *= q;
		}
		deg *= static_cast<unsigned long>(phi_f / euler_phi(d));
		Rational r(mpz_class(static_cast<unsigned long>(hits.at(d))), deg);
		r.canonicalize();
		return r;
	};
	return desc;
}

} // namespace artinlab
