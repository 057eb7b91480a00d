#ifndef N2CHAR_SERIALIZE_HPP
#define N2CHAR_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "n2char/embeddings.hpp"
#include "n2char/errors.hpp"
#include "n2char/nsmodules.hpp"
#include "n2char/qseries.hpp"
#include "n2char/rational.hpp"
#include "n2char/shapovalov.hpp"

// JSON encodings of the library's report types. Rationals are always
// lowest-terms "num/den" strings, integers included ("3/1").

namespace n2char {

using json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_field(const json& j, const char* key)
{
	if (!j.contains(key) || !j.at(key).is_string()) {
		throw ParseError(std::string("expected string field '") + key + "'");
	}
	return parse_rational(j.at(key).get<std::string>());
}

inline json integer_value(const Integer& x)
{
	if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
		return x.convert_to<std::int64_t>();
	}
	// Out of range for a JSON number; keep it exact.
	return x.str();
}

// Structural JSON errors (missing keys, wrong types) surface as ParseError.
template <class F>
auto parse_guard(const char* what, F&& f)
{
	try {
		return f();
	} catch (const json::exception& e) {
		throw ParseError(std::string(what) + ": " + e.what());
	}
}

inline Integer integer_from(const json& j)
{
	if (j.is_number_integer()) {
		return Integer(j.get<std::int64_t>());
	}
	if (j.is_string()) {
		const Rational r = parse_rational(j.get<std::string>());
		if (!is_integer(r)) {
			throw ParseError("expected an integer, got " + j.dump());
		}
		return numerator(r);
	}
	throw ParseError("expected an integer, got " + j.dump());
}

} // namespace detail

// --- QSeries: {"denom": D, "order": "p/q", "terms": [[k, "num/den"], ...]}
// An exact (untruncated) series has "order": null.

inline json to_json(const QSeries& s)
{
	json terms = json::array();
	for (const auto& [k, v] : s.terms()) {
		terms.push_back(json::array({k, to_string(v)}));
	}
	json out;
	out["denom"] = s.denom();
	out["order"] = s.order() ? json(to_string(*s.order())) : json(nullptr);
	out["terms"] = std::move(terms);
	return out;
}

inline QSeries qseries_from_json(const json& j)
{
	return detail::parse_guard("series JSON", [&] {
		if (!j.is_object() || !j.contains("denom") || !j.contains("terms") || !j.contains("order")) {
			throw ParseError("series JSON needs denom, order and terms");
		}
		const std::int64_t denom = j.at("denom").get<std::int64_t>();
		std::optional<Rational> order;
		if (!j.at("order").is_null()) {
			order = detail::rational_field(j, "order");
		}
		QSeries::Terms terms;
		std::optional<std::int64_t> last;
		for (const json& t : j.at("terms")) {
			if (!t.is_array() || t.size() != 2) {
				throw ParseError("series term must be [k, \"num/den\"]");
			}
			const std::int64_t k = t.at(0).get<std::int64_t>();
			if (last && k <= *last) {
				throw ParseError("series terms must be sorted by increasing k");
			}
			last = k;
			const Rational v = parse_rational(t.at(1).get<std::string>());
			if (v == 0) {
				throw ParseError("series terms may not carry a zero coefficient");
			}
			terms.emplace(k, v);
		}
		QSeries out(denom, terms, order);
		if (out.terms().size() != terms.size() || out.denom() != denom) {
			throw ParseError("series JSON has terms at or beyond its order, or an order off its lattice");
		}
		return out;
	});
}

// --- Decomposition
// {"target_d": 12, "factors": [3,4], "order": "8/1",
//  "multiplicities": [{"r": 1, "m": 1}, ...], "verified": true}

inline json to_json(const Decomposition& d, bool verified)
{
	json out;
	out["target_d"] = d.target_d;
	out["factors"] = d.factors;
	out["order"] = to_string(d.verified_order);
	json mult = json::array();
	for (const auto& [label, m] : d.multiplicities) {
		mult.push_back(json{{"r", label.r()}, {"m", detail::integer_value(m)}});
	}
	out["multiplicities"] = std::move(mult);
	out["verified"] = verified;
	return out;
}

inline Decomposition decomposition_from_json(const json& j)
{
	return detail::parse_guard("decomposition JSON", [&] {
		Decomposition d;
		d.target_d = j.at("target_d").get<int>();
		d.factors = j.at("factors").get<std::vector<int>>();
		d.verified_order = detail::rational_field(j, "order");
		for (const json& e : j.at("multiplicities")) {
			d.multiplicities.emplace(ModuleLabel(d.target_d, 0, e.at("r").get<int>()), detail::integer_from(e.at("m")));
		}
		return d;
	});
}

// --- GramBlock
// {"level": "5/2", "charge": 0, "c": "5/2", "basis": ["J-1.G+-3/2", ...],
//  "matrix": [["num/den", ...], ...]}

inline json to_json(const GramBlock& g)
{
	json out;
	out["level"] = to_string(g.level);
	out["charge"] = g.charge;
	out["c"] = to_string(g.central_charge);
	json basis = json::array();
	for (const PBWMonomial& m : g.basis) {
		basis.push_back(word_to_string(m));
	}
	out["basis"] = std::move(basis);
	json matrix = json::array();
	for (const auto& row : g.matrix) {
		json r = json::array();
		for (const Rational& x : row) {
			r.push_back(to_string(x));
		}
		matrix.push_back(std::move(r));
	}
	out["matrix"] = std::move(matrix);
	return out;
}

inline GramBlock gram_block_from_json(const json& j)
{
	return detail::parse_guard("gram JSON", [&] {
		GramBlock g;
		g.level = detail::rational_field(j, "level");
		g.charge = j.at("charge").get<int>();
		g.central_charge = detail::rational_field(j, "c");
		for (const json& b : j.at("basis")) {
			g.basis.push_back(parse_word(b.get<std::string>()));
		}
		for (const json& row : j.at("matrix")) {
			std::vector<Rational> r;
			for (const json& x : row) {
				r.push_back(parse_rational(x.get<std::string>()));
			}
			if (r.size() != g.basis.size()) {
				throw ParseError("gram matrix row length does not match the basis");
			}
			g.matrix.push_back(std::move(r));
		}
		if (g.matrix.size() != g.basis.size()) {
			throw ParseError("gram matrix row count does not match the basis");
		}
		return g;
	});
}

// --- Dimension tables
// {"case": "e8", "target_d": 30, "factors": [3,5], "weights": ["0/1", ...],
//  "rows": [{"name": "M3xM5", "dims": [1, 2, 18, 496]}, ...]}

inline json to_json(const DimensionTable& t)
{
	json out;
	out["case"] = t.case_name;
	out["target_d"] = t.target_d;
	out["factors"] = t.factors;
	json weights = json::array();
	for (const Rational& w : t.weights) {
		weights.push_back(to_string(w));
	}
	out["weights"] = std::move(weights);
	json rows = json::array();
	for (const TableRow& r : t.rows) {
		json dims = json::array();
		for (const Integer& x : r.dims) {
			dims.push_back(detail::integer_value(x));
		}
		rows.push_back(json{{"name", r.name}, {"dims", std::move(dims)}});
	}
	out["rows"] = std::move(rows);
	return out;
}

inline DimensionTable table_from_json(const json& j)
{
	return detail::parse_guard("table JSON", [&] {
		DimensionTable t;
		t.case_name = j.at("case").get<std::string>();
		t.target_d = j.at("target_d").get<int>();
		t.factors = j.at("factors").get<std::vector<int>>();
		for (const json& w : j.at("weights")) {
			t.weights.push_back(parse_rational(w.get<std::string>()));
		}
		for (const json& r : j.at("rows")) {
			TableRow row;
			row.name = r.at("name").get<std::string>();
			for (const json& x : r.at("dims")) {
				row.dims.push_back(detail::integer_from(x));
			}
			if (row.dims.size() != t.weights.size()) {
				throw ParseError("table row '" + row.name + "' does not have one entry per weight");
			}
			t.rows.push_back(std::move(row));
		}
		return t;
	});
}

inline json to_json(const TableReport& r)
{
	json out;
	out["case"] = r.expected.case_name;
	out["expected"] = to_json(r.expected);
	out["computed"] = to_json(r.computed);
	out["matches_reference"] = r.matches_reference;
	out["columns_add_up"] = r.columns_add_up;
	out["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
	out["passed"] = r.passed();
	return out;
}

inline json to_json(const EmbeddingCase& e)
{
	return json{{"d1", e.d1()}, {"d2", e.d2()}, {"d3", e.d3()}, {"c", to_string(central_charge(e.d1()))}};
}

inline json to_json(const IsometryReport& r)
{
	json out;
	out["c1"] = to_string(r.c1);
	out["c2"] = to_string(r.c2);
	out["c3"] = to_string(r.c3);
	out["max_level"] = to_string(r.max_level);
	out["words"] = r.words;
	out["pairs_checked"] = r.pairs_checked;
	out["passed"] = r.passed();
	if (r.counterexample) {
		out["counterexample"] = json{{"x", word_to_string(r.counterexample->x)},
			{"y", word_to_string(r.counterexample->y)},
			{"single", to_string(r.counterexample->single)},
			{"tensor", to_string(r.counterexample->tensor)}};
	} else {
		out["counterexample"] = nullptr;
	}
	return out;
}

} // namespace n2char

#endif // N2CHAR_SERIALIZE_HPP
