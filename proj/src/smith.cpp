#include "artinlab/smith.hpp"

#include <stdexcept>
#include <utility>

namespace artinlab {

namespace {

i128 iabs(i128 v) { return v < 0 ? -v : v; }

// Floor division so remainders are non-negative.
i128 floor_div(i128 a, i128 b)
{
	i128 q = a / b;
	if ((a % b != 0) && ((a < 0) != (b < 0)))
		--q;
	return q;
}

struct Reducer {
	IntMatrix &D, &U, &V, &Vi;
	std::size_t rows, cols;

	void swap_rows(std::size_t i, std::size_t j)
	{
		std::swap(D[i], D[j]);
		std::swap(U[i], U[j]);
	}
	void swap_cols(std::size_t i, std::size_t j)
	{
		for (auto &r : D)
			std::swap(r[i], r[j]);
		for (auto &r : V)
			std::swap(r[i], r[j]);
		std::swap(Vi[i], Vi[j]);
	}
	// row_j -= q * row_i
	void row_sub(std::size_t j, std::size_t i, i128 q)
	{
		for (std::size_t c = 0; c < cols; ++c)
			D[j][c] -= q * D[i][c];
		for (std::size_t c = 0; c < rows; ++c)
			U[j][c] -= q * U[i][c];
	}
	// col_j -= q * col_i, tracking V and its inverse
	void col_sub(std::size_t j, std::size_t i, i128 q)
	{
		for (std::size_t r = 0; r < rows; ++r)
			D[r][j] -= q * D[r][i];
		for (std::size_t r = 0; r < cols; ++r)
			V[r][j] -= q * V[r][i];
		for (std::size_t c = 0; c < cols; ++c)
			Vi[i][c] += q * Vi[j][c];
	}
	void negate_row(std::size_t i)
	{
		for (auto &v : D[i])
			v = -v;
		for (auto &v : U[i])
			v = -v;
	}
};

} // namespace

IntMatrix identity_matrix(std::size_t n)
{
	IntMatrix I(n, std::vector<i128>(n, 0));
	for (std::size_t i = 0; i < n; ++i)
		I[i][i] = 1;
	return I;
}

IntMatrix multiply(const IntMatrix &A, const IntMatrix &B)
{
	if (A.empty() || B.empty())
		return {};
	IntMatrix C(A.size(), std::vector<i128>(B[0].size(), 0));
	for (std::size_t i = 0; i < A.size(); ++i)
		for (std::size_t k = 0; k < B.size(); ++k)
			for (std::size_t j = 0; j < B[0].size(); ++j)
				C[i][j] += A[i][k] * B[k][j];
	return C;
}

std::vector<i128> SmithForm::diagonal() const
{
	std::vector<i128> out;
	for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i)
		out.push_back(D[i][i]);
	return out;
}

SmithForm smith_normal_form(IntMatrix M)
{
	const std::size_t rows = M.size();
	const std::size_t cols = rows ? M[0].size() : 0;
	for (const auto &r : M)
		if (r.size() != cols)
			throw std::invalid_argument("ragged matrix");
	SmithForm out{std::move(M), identity_matrix(rows), identity_matrix(cols), identity_matrix(cols)};
	Reducer red{out.D, out.U, out.V, out.V_inv, rows, cols};
	auto &D = out.D;

	const std::size_t n = std::min(rows, cols);
	for (std::size_t t = 0; t < n; ++t) {
		for (;;) {
			// smallest nonzero entry of the trailing block becomes the pivot
			std::size_t pi = rows, pj = cols;
			for (std::size_t i = t; i < rows; ++i)
				for (std::size_t j = t; j < cols; ++j)
					if (D[i][j] != 0 && (pi == rows || iabs(D[i][j]) < iabs(D[pi][pj]))) {
						pi = i;
						pj = j;
					}
			if (pi == rows)
				break;
			if (pi != t)
				red.swap_rows(pi, t);
			if (pj != t)
				red.swap_cols(pj, t);

			bool clean = true;
			for (std::size_t i = t + 1; i < rows; ++i) {
				if (D[i][t] == 0)
					continue;
				red.row_sub(i, t, floor_div(D[i][t], D[t][t]));
				if (D[i][t] != 0)
					clean = false;
			}
			for (std::size_t j = t + 1; j < cols; ++j) {
				if (D[t][j] == 0)
					continue;
				red.col_sub(j, t, floor_div(D[t][j], D[t][t]));
				if (D[t][j] != 0)
					clean = false;
			}
			if (!clean)
				continue;
			// divisibility: fold an offending row into row t and go again
			bool divides_all = true;
			for (std::size_t i = t + 1; i < rows && divides_all; ++i)
				for (std::size_t j = t + 1; j < cols; ++j)
					if (D[i][j] % D[t][t] != 0) {
						red.row_sub(t, i, -1);
						divides_all = false;
						break;
					}
			if (divides_all)
				break;
		}
		if (D[t][t] < 0)
			red.negate_row(t);
	}
	return out;
}

} // namespace artinlab
