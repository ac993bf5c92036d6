#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "artinlab/modular.hpp"
#include "artinlab/rational.hpp"

namespace artinlab {

/// F = Q(zeta_f) with a set of residues mod f (units). f = 1 means no condition.
struct CongruenceCondition {
	u64 f = 1;
	std::vector<u64> residues{0};

	/// Residue classes mod f coprime to f; throws config_error otherwise.
	static CongruenceCondition make(u64 f, std::vector<u64> residues);
	static CongruenceCondition none() { return {}; }
	/// Complement inside (Z/f)^x.
	CongruenceCondition complement() const;
	bool contains(u64 p) const;
};

/// Gal(L_k/Q) modelled as GL2(Z/k) with full translations for the g points, entangled with
/// cyclotomic fields only through the determinant.
struct GenericImageModel {
	int g = 0;
	/// Per-prime replacements for [L_q : Q].
	std::map<u64, mpz_class> degree_overrides;

	/// Checks that each override divides q^(2g) #GL2(F_q); throws config_error.
	void validate() const;
};

/// #GL2(Z/k) for squarefree k. Throws domain_error otherwise.
u64 gl2_order(u64 k);

/// q^(2g) #GL2(F_q), the generic [L_q : Q].
mpz_class generic_prime_degree(u64 q, int g);

/// [L_k : Q] under the model: product over q | k of the override or the generic degree.
mpz_class generic_degree(const GenericImageModel &model, u64 k);

/// 1 / [L_k : Q].
Rational delta_k(const GenericImageModel &model, u64 k);

/// #{c in residues : c = 1 mod gcd(k, f)} / ([L_k : Q] phi(f) / phi(gcd(k, f))).
Rational delta_CF_k(const GenericImageModel &model, u64 k, const CongruenceCondition &cond);

/// One element of Gal(L_k F / Q) in the explicit model, stored per prime q | k.
struct ModelElement {
	std::vector<u64> primes;
	std::vector<std::array<u64, 4>> matrix;        ///< (a, b, c, d) over F_q
	std::vector<std::vector<u64>> translation;      ///< 2g entries over F_q
	u64 unit = 0;                                    ///< residue mod f

	/// Restriction to L_q is the identity.
	bool trivial_at(std::size_t i) const;
	bool trivial_on_Lk() const;
};

/// Visits every element of the explicit model of Gal(L_k F / Q): tuples (M_q, t_q)_q and a unit
/// u mod f with det M_q = u mod q for every q | gcd(k, f). Throws capacity_error when
/// k^4 phi(f) k^(2g) exceeds `capacity`.
void enumerate_model(u64 k, u64 f, int g, const std::function<void(const ModelElement &)> &visit,
                     u64 capacity = 10000000);

u64 brute_force_count(u64 k, u64 f, int g, const std::function<bool(const ModelElement &)> &predicate,
                      u64 capacity = 10000000);

/// Elements of GL2(F_q) as (a, b, c, d).
std::vector<std::array<u64, 4>> gl2_elements(u64 q);

} // namespace artinlab
