#pragma once

#include <string>
#include <vector>

#include "artinlab/modular.hpp"

namespace artinlab {

/// Finite data for a family (L_q)_q: Gal(L_l/K) for l the product of `primes`, each element
/// stored as its tuple of restrictions (labels 0..component_order[i]-1) to the L_q.
struct FiniteFamily {
	std::vector<u64> primes;
	std::vector<u64> component_order;
	std::vector<std::vector<u64>> elements;
	/// in_C[i][label]: the restriction lies in C_q for q = primes[i].
	std::vector<std::vector<bool>> in_C;
};

/// L'_{q'} inside L_q, with the restriction Gal(L_q/K) -> Gal(L'_{q'}/K) on labels.
struct Containment {
	u64 aux_prime = 0;
	u64 prime = 0;
	std::vector<u64> restriction;
};

struct FamilyPair {
	FiniteFamily primary;
	FiniteFamily aux;
	std::vector<Containment> containments;
};

enum class CompareVerdict { f_ge_fprime, hypotheses_violated };

std::string to_string(CompareVerdict v);

struct FamilyComparison {
	CompareVerdict verdict = CompareVerdict::hypotheses_violated;
	std::vector<std::string> violated; ///< "1", "3", "restriction" ...
	std::vector<std::string> notes;
	u64 left = 0;  ///< #{sigma in Gal(L_l/K) : sigma|L_q in C_q for all q | l}
	u64 index = 0; ///< [L_l : L_l']
	u64 right = 0; ///< #{sigma in Gal(L_l'/K) : sigma|L'_q' in C'_q' for all q' | l'}
	/// Every extension of a counted sigma is counted on the left.
	bool extensions_counted = false;
	bool inequality_holds() const { return left >= index * right; }
};

/// Checks the comparison hypotheses on the finite data (coverage both ways, finiteness,
/// preimages of C' inside C), checks that restriction of elements is well defined with fibres of
/// equal size, and counts both sides of left >= [L_l : L_l'] * right.
/// Throws capacity_error when either group has more than `capacity` elements.
FamilyComparison compare_families(const FamilyPair &pair, u64 capacity = 10000000);

/// GL2(F_q) for q in `primes` (independent factors, C_q = non-identity) against the determinant
/// quotients (F_q)^x with C'_q = non-identity units. With `preimage_classes`, C_q is instead the
/// preimage of C'_q.
FamilyPair gl2_determinant_instance(const std::vector<u64> &primes, bool preimage_classes = false);

/// The family compared with itself.
FamilyPair self_instance(const FiniteFamily &family);

} // namespace artinlab
