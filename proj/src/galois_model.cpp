#include "artinlab/galois_model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "artinlab/errors.hpp"
#include "artinlab/primes.hpp"

namespace artinlab {

CongruenceCondition CongruenceCondition::make(u64 f, std::vector<u64> residues)
{
	if (f == 0)
		throw config_error("modulus f must be >= 1");
	CongruenceCondition c;
	c.f = f;
	c.residues.clear();
	for (u64 r : residues) {
		u64 red = r % f;
		if (std::gcd(red, f) != 1 && f != 1)
			throw config_error("residue " + std::to_string(r) + " is not a unit modulo " + std::to_string(f));
		c.residues.push_back(red);
	}
	std::sort(c.residues.begin(), c.residues.end());
	c.residues.erase(std::unique(c.residues.begin(), c.residues.end()), c.residues.end());
	return c;
}

CongruenceCondition CongruenceCondition::complement() const
{
	CongruenceCondition c;
	c.f = f;
	c.residues.clear();
	for (u64 r = 0; r < f; ++r)
		if (std::gcd(r, f) == 1 && !std::binary_search(residues.begin(), residues.end(), r))
			c.residues.push_back(r);
	return c;
}

bool CongruenceCondition::contains(u64 p) const { return std::binary_search(residues.begin(), residues.end(), p % f); }

u64 gl2_order(u64 k)
{
	if (!is_squarefree(k))
		throw domain_error("gl2_order: " + std::to_string(k) + " is not squarefree");
	u64 out = 1;
	for (u64 q : prime_divisors(k))
		out *= (q * q - 1) * (q * q - q);
	return out;
}

mpz_class generic_prime_degree(u64 q, int g)
{
	mpz_class Q(static_cast<unsigned long>(q));
	mpz_class t;
	mpz_pow_ui(t.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(2 * g));
	return t * (Q * Q - 1) * (Q * Q - Q);
}

void GenericImageModel::validate() const
{
	if (g < 0)
		throw config_error("number of points must be non-negative");
	for (const auto &[q, deg] : degree_overrides) {
		if (!is_prime(q))
			throw config_error("degree override key " + std::to_string(q) + " is not prime");
		if (deg <= 0 || generic_prime_degree(q, g) % deg != 0)
			throw config_error("degree override for q = " + std::to_string(q) + " must divide " +
			                   generic_prime_degree(q, g).get_str());
	}
}

mpz_class generic_degree(const GenericImageModel &model, u64 k)
{
	if (!is_squarefree(k))
		throw domain_error("generic_degree: " + std::to_string(k) + " is not squarefree");
	mpz_class deg = 1;
	for (u64 q : prime_divisors(k)) {
		auto it = model.degree_overrides.find(q);
		deg *= it != model.degree_overrides.end() ? it->second : generic_prime_degree(q, model.g);
	}
	return deg;
}

Rational delta_k(const GenericImageModel &model, u64 k)
{
	Rational r(mpz_class(1), generic_degree(model, k));
	r.canonicalize();
	return r;
}

Rational delta_CF_k(const GenericImageModel &model, u64 k, const CongruenceCondition &cond)
{
	const u64 d = std::gcd(k, cond.f);
	u64 hits = 0;
	for (u64 c : cond.residues)
		if (c % d == 1 % d)
			++hits;
	mpz_class den = generic_degree(model, k) * static_cast<unsigned long>(euler_phi(cond.f) / euler_phi(d));
	Rational r(mpz_class(static_cast<unsigned long>(hits)), den);
	r.canonicalize();
	return r;
}

bool ModelElement::trivial_at(std::size_t i) const
{
	const auto &M = matrix[i];
	if (!(M[0] == 1 && M[1] == 0 && M[2] == 0 && M[3] == 1))
		return false;
	return std::all_of(translation[i].begin(), translation[i].end(), [](u64 v) { return v == 0; });
}

bool ModelElement::trivial_on_Lk() const
{
	for (std::size_t i = 0; i < primes.size(); ++i)
		if (!trivial_at(i))
			return false;
	return true;
}

std::vector<std::array<u64, 4>> gl2_elements(u64 q)
{
	std::vector<std::array<u64, 4>> out;
	for (u64 a = 0; a < q; ++a)
		for (u64 b = 0; b < q; ++b)
			for (u64 c = 0; c < q; ++c)
				for (u64 d = 0; d < q; ++d)
					if ((a * d + q * q - b * c) % q != 0)
						out.push_back({a, b, c, d});
	return out;
}

void enumerate_model(u64 k, u64 f, int g, const std::function<void(const ModelElement &)> &visit, u64 capacity)
{
	if (!is_squarefree(k))
		throw domain_error("enumerate_model: k must be squarefree");
	if (f == 0)
		throw domain_error("enumerate_model: f must be >= 1");
	{
		mpz_class size = mpz_class(static_cast<unsigned long>(k));
		mpz_pow_ui(size.get_mpz_t(), size.get_mpz_t(), static_cast<unsigned long>(4 + 2 * g));
		size *= static_cast<unsigned long>(euler_phi(f));
		if (size > mpz_class(static_cast<unsigned long>(capacity)))
			throw capacity_error("explicit model too large: k^4 phi(f) k^2g = " + size.get_str());
	}
	ModelElement el;
	el.primes = prime_divisors(k);
	const std::size_t m = el.primes.size();
	el.matrix.resize(m);
	el.translation.assign(m, std::vector<u64>(2 * static_cast<std::size_t>(g), 0));
	std::vector<std::vector<std::array<u64, 4>>> groups;
	for (u64 q : el.primes)
		groups.push_back(gl2_elements(q));

	std::vector<u64> units;
	for (u64 u = 0; u < f; ++u)
		if (std::gcd(u, f) == 1)
			units.push_back(f == 1 ? 0 : u);

	std::function<void(std::size_t)> rec = [&](std::size_t i) {
		if (i == m) {
			visit(el);
			return;
		}
		const u64 q = el.primes[i];
		const bool entangled = f % q == 0;
		u64 tcount = 1;
		for (int j = 0; j < 2 * g; ++j)
			tcount *= q;
		for (const auto &M : groups[i]) {
			if (entangled && (M[0] * M[3] + q * q - M[1] * M[2]) % q != el.unit % q)
				continue;
			el.matrix[i] = M;
			for (u64 t = 0; t < tcount; ++t) {
				u64 code = t;
				for (auto &coord : el.translation[i]) {
					coord = code % q;
					code /= q;
				}
				rec(i + 1);
			}
		}
	};
	for (u64 u : units) {
		el.unit = u;
		rec(0);
	}
}

u64 brute_force_count(u64 k, u64 f, int g, const std::function<bool(const ModelElement &)> &predicate, u64 capacity)
{
	u64 count = 0;
	enumerate_model(k, f, g, [&](const ModelElement &e) { count += predicate(e); }, capacity);
	return count;
}

} // namespace artinlab
