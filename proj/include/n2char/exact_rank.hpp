#ifndef N2CHAR_EXACT_RANK_HPP
#define N2CHAR_EXACT_RANK_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "n2char/errors.hpp"
#include "n2char/rational.hpp"

namespace n2char {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Scales every row by the lcm of its denominators. Row scaling by nonzero
/// constants leaves the rank unchanged.
inline IntegerMatrix clear_denominators(const RationalMatrix& m)
{
	IntegerMatrix out;
	out.reserve(m.size());
	for (const auto& row : m) {
		Integer l = 1;
		for (const Rational& x : row) {
			l = boost::multiprecision::lcm(l, denominator(x));
		}
		std::vector<Integer> scaled;
		scaled.reserve(row.size());
		for (const Rational& x : row) {
			scaled.push_back(numerator(x) * (l / denominator(x)));
		}
		out.push_back(std::move(scaled));
	}
	return out;
}

/// Rank by fraction-free (Bareiss) elimination with full pivoting. All
/// intermediate values stay integral: the division by the previous pivot
/// is exact.
inline std::size_t bareiss_rank(IntegerMatrix a)
{
	const std::size_t rows = a.size();
	if (rows == 0) {
		return 0;
	}
	const std::size_t cols = a.front().size();
	for (const auto& row : a) {
		if (row.size() != cols) {
			throw DomainError("ragged matrix");
		}
	}
	Integer previous = 1;
	std::size_t rank = 0;
	for (std::size_t k = 0; k < rows && k < cols; ++k) {
		// full pivoting: any nonzero entry in the trailing block
		std::size_t pr = rows;
		std::size_t pc = cols;
		for (std::size_t i = k; i < rows && pr == rows; ++i) {
			for (std::size_t j = k; j < cols; ++j) {
				if (a[i][j] != 0) {
					pr = i;
					pc = j;
					break;
				}
			}
		}
		if (pr == rows) {
			break;
		}
		std::swap(a[k], a[pr]);
		if (pc != k) {
			for (auto& row : a) {
				std::swap(row[k], row[pc]);
			}
		}
		for (std::size_t i = k + 1; i < rows; ++i) {
			for (std::size_t j = k + 1; j < cols; ++j) {
				a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
			}
			a[i][k] = 0;
		}
		previous = a[k][k];
		++rank;
	}
	return rank;
}

inline std::size_t exact_rank(const RationalMatrix& m)
{
	return bareiss_rank(clear_denominators(m));
}

} // namespace n2char

#endif // N2CHAR_EXACT_RANK_HPP
