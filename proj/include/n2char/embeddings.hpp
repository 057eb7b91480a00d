#ifndef N2CHAR_EMBEDDINGS_HPP
#define N2CHAR_EMBEDDINGS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "n2char/errors.hpp"
#include "n2char/nsmodules.hpp"
#include "n2char/qseries.hpp"
#include "n2char/rational.hpp"

namespace n2char {

/// c_d = 3 - 6/d
inline Rational central_charge(int d)
{
	if (d < 2) {
		throw DomainError("central charge needs d >= 2, got d=" + std::to_string(d));
	}
	return Rational(3) - Rational(Integer(6), Integer(d));
}

/// Diagonal embedding V_{d1} -> V_{d2} (x) V_{d3}, d2 <= d3, with c_{d1} = c_{d2} + c_{d3}.
class EmbeddingCase
{
public:
	EmbeddingCase(int d1, int d2, int d3) : d1_(d1), d2_(d2), d3_(d3)
	{
		if (d1 < 2 || d2 < 2 || d3 < 2) {
			throw DomainError("embedding case needs all indices >= 2");
		}
		if (d2 > d3) {
			throw DomainError("embedding case needs d2 <= d3");
		}
		if (central_charge(d1) != central_charge(d2) + central_charge(d3)) {
			throw CentralChargeMismatch("c_" + std::to_string(d1) + " != c_" + std::to_string(d2) + " + c_" +
				std::to_string(d3));
		}
	}

	int d1() const { return d1_; }
	int d2() const { return d2_; }
	int d3() const { return d3_; }

	std::string to_string() const
	{
		return "(" + std::to_string(d1_) + "," + std::to_string(d2_) + "," + std::to_string(d3_) + ")";
	}

	friend bool operator==(const EmbeddingCase&, const EmbeddingCase&) = default;
	friend auto operator<=>(const EmbeddingCase&, const EmbeddingCase&) = default;

private:
	int d1_;
	int d2_;
	int d3_;
};

/// All solutions of c_{d1} = c_{d2} + c_{d3} with 3 <= d2 <= d3 and every
/// index <= d_max, i.e. 1/d2 + 1/d3 = 1/2 + 1/d1. Factors with d = 2 have
/// central charge 0 and only give the identity map d1 = d3, so they are
/// not listed.
inline std::vector<EmbeddingCase> enumerate_diagonal_embeddings(int d_max)
{
	if (d_max < 2) {
		throw DomainError("enumerate_diagonal_embeddings needs d_max >= 2");
	}
	std::vector<EmbeddingCase> out;
	for (std::int64_t d2 = 3; d2 <= d_max; ++d2) {
		for (std::int64_t d3 = d2; d3 <= d_max; ++d3) {
			// 1/d1 = (2 d2 + 2 d3 - d2 d3) / (2 d2 d3)
			const std::int64_t num = 2 * d2 + 2 * d3 - d2 * d3;
			if (num <= 0) {
				// num is decreasing in d3 for d2 >= 3
				break;
			}
			const std::int64_t den = 2 * d2 * d3;
			if (den % num != 0) {
				continue;
			}
			const std::int64_t d1 = den / num;
			if (d1 >= 2 && d1 <= d_max) {
				out.emplace_back(static_cast<int>(d1), static_cast<int>(d2), static_cast<int>(d3));
			}
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

/// Character of M_{d_1} (x) ... (x) M_{d_k}: the product of the vacuum characters.
inline QSeries product_character(const std::vector<int>& factor_ds, const Rational& order)
{
	QSeries out = QSeries::constant(Rational(1), order);
	for (int d : factor_ds) {
		out *= vacuum_character(d, order);
	}
	return out;
}

struct Decomposition
{
	int target_d = 0;
	std::vector<int> factors;
	/// Only labels with nonzero multiplicity are stored.
	std::map<ModuleLabel, Integer> multiplicities;
	Rational verified_order;

	Integer multiplicity(int r) const
	{
		for (const auto& [label, m] : multiplicities) {
			if (label.r() == r) {
				return m;
			}
		}
		return 0;
	}
};

/// Multiplicities of the integral-weight NS modules of M_target in `series`,
/// found by repeatedly subtracting the candidate whose conformal weight
/// equals the leading exponent of the remainder. Every candidate has a
/// different leading exponent, which makes the greedy choice unique.
/// Throws DecompositionFailure if the remainder cannot be cleared.
inline std::map<ModuleLabel, Integer> decompose_series(int target_d, const QSeries& series)
{
	if (!series.order()) {
		throw DomainError("decomposition needs a truncated series");
	}
	const Rational order = *series.order();
	std::map<Rational, ModuleLabel> by_weight;
	for (const ModuleLabel& label : allowed_integer_modules(target_d)) {
		const auto [it, inserted] = by_weight.emplace(conformal_weight(label), label);
		if (!inserted) {
			throw DecompositionFailure("candidates " + it->second.to_string() + " and " + label.to_string() +
				" share a conformal weight; greedy subtraction is ambiguous");
		}
	}

	std::map<ModuleLabel, Integer> multiplicities;
	QSeries remainder = series;
	while (!remainder.empty()) {
		const Rational lead = *remainder.leading_exponent();
		const Rational lead_coeff = remainder.terms().begin()->second;
		const auto it = by_weight.find(lead);
		if (it == by_weight.end()) {
			throw DecompositionFailure("remainder starts with " + to_pretty(lead_coeff) + " q^" + to_pretty(lead) +
				" and no candidate module has that conformal weight");
		}
		if (lead_coeff <= 0 || !is_integer(lead_coeff)) {
			throw DecompositionFailure("multiplicity " + to_pretty(lead_coeff) + " of " + it->second.to_string() +
				" is not a positive integer");
		}
		if (multiplicities.count(it->second) != 0) {
			throw DecompositionFailure("candidate " + it->second.to_string() + " needed twice");
		}
		const QSeries chi = character_C(target_d, it->second.r(), order);
		remainder -= chi.scaled(lead_coeff);
		multiplicities.emplace(it->second, numerator(lead_coeff));
	}
	return multiplicities;
}

/// Decomposes the character of M_{d_1} (x) ... (x) M_{d_k} over M_target
/// below order. The central charges must add up.
inline Decomposition decompose(int target_d, const std::vector<int>& factor_ds, const Rational& order)
{
	if (factor_ds.empty()) {
		throw DomainError("decompose needs at least one factor");
	}
	Rational total(0);
	for (int d : factor_ds) {
		total += central_charge(d);
	}
	const Rational target_c = central_charge(target_d);
	if (target_c != total) {
		throw CentralChargeMismatch("c_" + std::to_string(target_d) + " = " + to_pretty(target_c) +
			" but the factors sum to " + to_pretty(total));
	}

	Decomposition result;
	result.target_d = target_d;
	result.factors = factor_ds;
	result.verified_order = order;
	result.multiplicities = decompose_series(target_d, product_character(factor_ds, order));
	return result;
}

/// Recomputes product - sum m_r chi_r below the decomposition's order.
inline QSeries decomposition_remainder(const Decomposition& dec)
{
	QSeries rem = product_character(dec.factors, dec.verified_order);
	for (const auto& [label, m] : dec.multiplicities) {
		rem -= character_C(label.d(), label.r(), dec.verified_order).scaled(Rational(m));
	}
	return rem;
}

// Dimension tables of L_0-eigenspaces: first row the tensor product, then one
// row per summand.

struct TableRow
{
	std::string name;
	std::vector<Integer> dims;

	friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct DimensionTable
{
	std::string case_name;
	int target_d = 0;
	std::vector<int> factors;
	std::vector<Rational> weights;
	std::vector<TableRow> rows;

	friend bool operator==(const DimensionTable&, const DimensionTable&) = default;
};

/// Reference dimension tables: E6 to degree 1, E8 to degree 7.
inline DimensionTable reference_table(const std::string& case_name)
{
	if (case_name == "e6") {
		return {"e6", 12, {3, 4}, {Rational(0), Rational(1)},
			{{"M3xM4", {1, 2}}, {"C1", {1, 1}}, {"C7", {0, 1}}}};
	}
	if (case_name == "e8") {
		return {"e8", 30, {3, 5}, {Rational(0), Rational(1), Rational(3), Rational(7)},
			{{"M3xM5", {1, 2, 18, 496}},
				{"C1", {1, 1, 6, 107}},
				{"C11", {0, 1, 11, 319}},
				{"C19", {0, 0, 1, 69}},
				{"C29", {0, 0, 0, 1}}}};
	}
	throw DomainError("unknown case '" + case_name + "' (expected e6 or e8)");
}

inline std::string product_row_name(const std::vector<int>& factors)
{
	std::string name;
	for (int d : factors) {
		name += (name.empty() ? "M" : "xM") + std::to_string(d);
	}
	return name;
}

/// Recomputes the table with the same shape as the reference: the product
/// row and one row per allowed module of the target, at the same weights.
inline DimensionTable compute_table(const DimensionTable& shape)
{
	DimensionTable out;
	out.case_name = shape.case_name;
	out.target_d = shape.target_d;
	out.factors = shape.factors;
	out.weights = shape.weights;
	if (shape.weights.empty()) {
		return out;
	}
	const Rational order = *std::max_element(shape.weights.begin(), shape.weights.end()) + 1;
	auto column = [&](const QSeries& s) {
		std::vector<Integer> dims;
		for (const Rational& w : shape.weights) {
			const Rational v = s.coeff(w);
			if (!is_integer(v)) {
				throw DomainError("non-integral dimension " + to_pretty(v) + " at weight " + to_pretty(w));
			}
			dims.push_back(numerator(v));
		}
		return dims;
	};
	out.rows.push_back({product_row_name(shape.factors), column(product_character(shape.factors, order))});
	for (const ModuleLabel& label : allowed_integer_modules(shape.target_d)) {
		out.rows.push_back({"C" + std::to_string(label.r()), column(character_C(label.d(), label.r(), order))});
	}
	return out;
}

struct TableReport
{
	DimensionTable expected;
	DimensionTable computed;
	bool matches_reference = false;
	/// Summand rows add up to the product row in every column.
	bool columns_add_up = false;
	/// First differing entry, if any.
	std::optional<std::string> first_mismatch;

	bool passed() const { return matches_reference && columns_add_up; }
};

inline TableReport verify_table(const DimensionTable& expected)
{
	TableReport report;
	report.expected = expected;
	report.computed = compute_table(expected);

	const DimensionTable& got = report.computed;
	report.columns_add_up = !got.rows.empty();
	for (std::size_t c = 0; c < got.weights.size() && !got.rows.empty(); ++c) {
		Integer sum = 0;
		for (std::size_t i = 1; i < got.rows.size(); ++i) {
			sum += got.rows[i].dims[c];
		}
		if (sum != got.rows[0].dims[c]) {
			report.columns_add_up = false;
		}
	}

	report.matches_reference = true;
	if (expected.rows.size() != got.rows.size()) {
		report.matches_reference = false;
		report.first_mismatch = "expected " + std::to_string(expected.rows.size()) + " rows, computed " +
			std::to_string(got.rows.size());
		return report;
	}
	for (std::size_t i = 0; i < got.rows.size() && report.matches_reference; ++i) {
		const TableRow& e = expected.rows[i];
		const TableRow& g = got.rows[i];
		if (e.name != g.name || e.dims.size() != g.dims.size()) {
			report.matches_reference = false;
			report.first_mismatch = "row " + std::to_string(i) + ": expected '" + e.name + "', computed '" + g.name + "'";
			break;
		}
		for (std::size_t c = 0; c < g.dims.size(); ++c) {
			if (e.dims[c] != g.dims[c]) {
				report.matches_reference = false;
				report.first_mismatch = g.name + " at weight " + to_pretty(got.weights[c]) + ": expected " +
					e.dims[c].str() + ", computed " + g.dims[c].str();
				break;
			}
		}
	}
	return report;
}

/// Both reference checks: E6 to degree 1 and E8 to degree 7.
inline std::vector<TableReport> verify_table()
{
	return {verify_table(reference_table("e6")), verify_table(reference_table("e8"))};
}

} // namespace n2char

#endif // N2CHAR_EMBEDDINGS_HPP
