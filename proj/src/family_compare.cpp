#include "artinlab/family_compare.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "artinlab/errors.hpp"
#include "artinlab/galois_model.hpp"

namespace artinlab {

std::string to_string(CompareVerdict v)
{
	return v == CompareVerdict::f_ge_fprime ? "f-ge-fprime" : "hypotheses-violated";
}

namespace {

bool in_all(const FiniteFamily &fam, const std::vector<u64> &el)
{
	for (std::size_t i = 0; i < fam.primes.size(); ++i)
		if (!fam.in_C[i][el[i]])
			return false;
	return true;
}

std::size_t index_of(const std::vector<u64> &v, u64 x)
{
	return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

void product_elements(FiniteFamily &fam)
{
	fam.elements = {{}};
	for (u64 order : fam.component_order) {
		std::vector<std::vector<u64>> next;
		for (const auto &e : fam.elements)
			for (u64 x = 0; x < order; ++x) {
				next.push_back(e);
				next.back().push_back(x);
			}
		fam.elements = std::move(next);
	}
}

} // namespace

FamilyComparison compare_families(const FamilyPair &pair, u64 capacity)
{
	const auto &P = pair.primary;
	const auto &A = pair.aux;
	if (P.elements.size() > capacity || A.elements.size() > capacity)
		throw capacity_error("family comparison: group too large");
	FamilyComparison out;

	// 1: every L'_{q'} lies in some L_q and every L_q contains some L'_{q'}.
	for (u64 qp : A.primes)
		if (std::none_of(pair.containments.begin(), pair.containments.end(),
		                 [&](const Containment &c) { return c.aux_prime == qp; }))
			out.violated.push_back("1: L'_" + std::to_string(qp) + " lies in no L_q");
	for (u64 q : P.primes)
		if (std::none_of(pair.containments.begin(), pair.containments.end(),
		                 [&](const Containment &c) { return c.prime == q; }))
			out.violated.push_back("1: L_" + std::to_string(q) + " contains no L'_q'");
	// 2 holds for finite data.
	out.notes.push_back("2: finitely many q' per q (finite data)");
	// 3: pi^{-1}(C'_{q'}) inside C_q.
	for (const auto &c : pair.containments) {
		const std::size_t i = index_of(P.primes, c.prime);
		const std::size_t j = index_of(A.primes, c.aux_prime);
		if (i == P.primes.size() || j == A.primes.size() || c.restriction.size() != P.component_order[i])
			throw config_error("family comparison: malformed containment");
		for (u64 x = 0; x < P.component_order[i]; ++x)
			if (A.in_C[j][c.restriction[x]] && !P.in_C[i][x]) {
				out.violated.push_back("3: preimage of C'_" + std::to_string(c.aux_prime) + " not inside C_" +
				                       std::to_string(c.prime));
				break;
			}
	}

	// Restriction of elements Gal(L_l/K) -> Gal(L_l'/K).
	std::map<std::vector<u64>, u64> fibre;
	std::set<std::vector<u64>> aux_set(A.elements.begin(), A.elements.end());
	bool restriction_ok = true;
	std::vector<std::vector<u64>> image(P.elements.size());
	for (std::size_t n = 0; n < P.elements.size(); ++n) {
		const auto &el = P.elements[n];
		std::vector<u64> r(A.primes.size(), ~u64(0));
		for (const auto &c : pair.containments) {
			const std::size_t i = index_of(P.primes, c.prime);
			const std::size_t j = index_of(A.primes, c.aux_prime);
			u64 v = c.restriction[el[i]];
			if (r[j] != ~u64(0) && r[j] != v)
				restriction_ok = false;
			r[j] = v;
		}
		if (std::find(r.begin(), r.end(), ~u64(0)) != r.end() || !aux_set.count(r))
			restriction_ok = false;
		++fibre[r];
		image[n] = std::move(r);
	}
	if (restriction_ok) {
		if (fibre.size() != A.elements.size())
			restriction_ok = false;
		for (const auto &[k, cnt] : fibre)
			if (cnt * A.elements.size() != P.elements.size())
				restriction_ok = false;
	}
	if (!restriction_ok)
		out.violated.push_back("restriction: not a surjection with equal fibres");

	out.index = A.elements.empty() ? 0 : P.elements.size() / A.elements.size();
	for (const auto &el : P.elements)
		out.left += in_all(P, el);
	std::set<std::vector<u64>> right_set;
	for (const auto &el : A.elements)
		if (in_all(A, el)) {
			++out.right;
			right_set.insert(el);
		}
	// Each extension of a counted sigma must be counted on the left.
	out.extensions_counted = true;
	for (std::size_t n = 0; n < P.elements.size(); ++n)
		if (right_set.count(image[n]) && !in_all(P, P.elements[n]))
			out.extensions_counted = false;

	out.verdict = out.violated.empty() ? CompareVerdict::f_ge_fprime : CompareVerdict::hypotheses_violated;
	return out;
}

FamilyPair gl2_determinant_instance(const std::vector<u64> &primes, bool preimage_classes)
{
	FamilyPair pair;
	pair.primary.primes = primes;
	pair.aux.primes = primes;
	for (u64 q : primes) {
		const auto G = gl2_elements(q);
		pair.primary.component_order.push_back(G.size());
		pair.aux.component_order.push_back(q - 1);
		// aux label u - 1 for the unit u
		std::vector<bool> cprime(q - 1);
		for (u64 u = 1; u < q; ++u)
			cprime[u - 1] = u != 1;
		std::vector<bool> c(G.size());
		Containment link;
		link.aux_prime = q;
		link.prime = q;
		for (std::size_t x = 0; x < G.size(); ++x) {
			const auto &M = G[x];
			u64 det = (M[0] * M[3] + q * q - M[1] * M[2]) % q;
			link.restriction.push_back(det - 1);
			bool identity = M[0] == 1 && M[1] == 0 && M[2] == 0 && M[3] == 1;
			c[x] = preimage_classes ? cprime[det - 1] : !identity;
		}
		pair.primary.in_C.push_back(std::move(c));
		pair.aux.in_C.push_back(std::move(cprime));
		pair.containments.push_back(std::move(link));
	}
	product_elements(pair.primary);
	product_elements(pair.aux);
	return pair;
}

FamilyPair self_instance(const FiniteFamily &family)
{
	FamilyPair pair{family, family, {}};
	for (std::size_t i = 0; i < family.primes.size(); ++i) {
		Containment c;
		c.aux_prime = c.prime = family.primes[i];
		for (u64 x = 0; x < family.component_order[i]; ++x)
			c.restriction.push_back(x);
		pair.containments.push_back(std::move(c));
	}
	return pair;
}

} // namespace artinlab
