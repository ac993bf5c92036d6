#pragma once

#include <vector>

#include "artinlab/modular.hpp"

namespace artinlab {

using IntMatrix = std::vector<std::vector<i128>>;

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
	IntMatrix D;
	IntMatrix U;
	IntMatrix V;
	IntMatrix V_inv;
	/// The diagonal entries min(rows, cols) long.
	std::vector<i128> diagonal() const;
};

SmithForm smith_normal_form(IntMatrix M);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix &A, const IntMatrix &B);

} // namespace artinlab
