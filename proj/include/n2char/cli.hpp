#ifndef N2CHAR_CLI_HPP
#define N2CHAR_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "n2char/embeddings.hpp"
#include "n2char/errors.hpp"
#include "n2char/nsmodules.hpp"
#include "n2char/qseries.hpp"
#include "n2char/rational.hpp"
#include "n2char/serialize.hpp"
#include "n2char/shapovalov.hpp"

// Front end of the n2char tool. run() is the whole program minus main(), so
// tests can drive it with an argv and capture both streams.

namespace n2char::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

inline constexpr std::string_view kGrammar =
	"usage:\n"
	"  n2char chi --d <int> --r <int> --order <rat> [--format F]\n"
	"  n2char product --factors <int,int,...> --order <rat> [--format F]\n"
	"  n2char decompose --target <int> --factors <list> --order <rat> [--format F]\n"
	"  n2char embeddings --max <int> [--format F]\n"
	"  n2char gram --d <int> --level <rat> --charge <int> [--level-cap <rat>] [--format F]\n"
	"  n2char dims --d <int> --max-level <rat> [--level-cap <rat>] [--format F]\n"
	"  n2char verify --case <e6|e8|all> [--order <rat>] [--with-gram] [--expected <file>] [--format F]\n"
	"F is one of table, csv, json (default table). <rat> is \"p/q\" or an integer.\n";

class UsageError : public Error
{
public:
	using Error::Error;
};

enum class Format { Table, Csv, Json };

namespace detail {

inline Rational parse_rational_option(const std::string& flag, const std::string& text)
{
	try {
		return parse_rational(text);
	} catch (const ParseError& e) {
		throw UsageError("--" + flag + ": " + e.what());
	}
}

inline Format parse_format(const std::string& text)
{
	if (text == "table") {
		return Format::Table;
	}
	if (text == "csv") {
		return Format::Csv;
	}
	if (text == "json") {
		return Format::Json;
	}
	throw UsageError("--format: expected table, csv or json, got '" + text + "'");
}

inline void require_d(const std::string& flag, int d)
{
	if (d < 2) {
		throw UsageError("--" + flag + ": expected an integer >= 2, got " + std::to_string(d));
	}
}

inline void require_half_integer_level(const std::string& flag, const Rational& level)
{
	if (level < 0 || !is_integer(level * 2)) {
		throw UsageError("--" + flag + ": expected a nonnegative multiple of 1/2, got " + to_pretty(level));
	}
}

/// Left-aligned plain text table.
inline void print_table(std::ostream& os, const std::vector<std::string>& header,
	const std::vector<std::vector<std::string>>& rows)
{
	std::vector<std::size_t> width(header.size(), 0);
	auto widen = [&](const std::vector<std::string>& r) {
		for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) {
			width[i] = std::max(width[i], r[i].size());
		}
	};
	widen(header);
	for (const auto& r : rows) {
		widen(r);
	}
	auto line = [&](const std::vector<std::string>& r) {
		std::string s;
		for (std::size_t i = 0; i < r.size(); ++i) {
			s += r[i];
			if (i + 1 < r.size()) {
				s += std::string(width[i] - r[i].size() + 2, ' ');
			}
		}
		os << s << "\n";
	};
	line(header);
	std::size_t total = 0;
	for (std::size_t i = 0; i < width.size(); ++i) {
		total += width[i] + (i + 1 < width.size() ? 2 : 0);
	}
	os << std::string(total, '-') << "\n";
	for (const auto& r : rows) {
		line(r);
	}
}

inline void print_csv(std::ostream& os, const std::vector<std::string>& header,
	const std::vector<std::vector<std::string>>& rows)
{
	auto line = [&](const std::vector<std::string>& r) {
		for (std::size_t i = 0; i < r.size(); ++i) {
			os << (i ? "," : "") << r[i];
		}
		os << "\n";
	};
	line(header);
	for (const auto& r : rows) {
		line(r);
	}
}

inline void emit_series(std::ostream& os, const std::string& title, const QSeries& s, Format format)
{
	if (format == Format::Json) {
		os << to_json(s).dump(2) << "\n";
		return;
	}
	std::vector<std::vector<std::string>> rows;
	for (const auto& [k, v] : s.terms()) {
		const Rational e = s.exponent(k);
		rows.push_back(format == Format::Csv ? std::vector<std::string>{to_string(e), to_string(v)}
											 : std::vector<std::string>{to_pretty(e), to_pretty(v)});
	}
	if (format == Format::Csv) {
		print_csv(os, {"exponent", "coefficient"}, rows);
		return;
	}
	os << title << ", truncated below q^" << (s.order() ? to_pretty(*s.order()) : std::string("inf")) << "\n";
	print_table(os, {"exponent", "coefficient"}, rows);
	if (rows.empty()) {
		os << "(no terms below the order)\n";
	}
}

// --- verbs -----------------------------------------------------------------

inline int do_chi(int d, int r, const Rational& order, Format format, std::ostream& out)
{
	const ModuleLabel label(d, 0, r);
	const QSeries chi = character_C(d, r, order);
	emit_series(out, "character of " + label.to_string(), chi, format);
	return kOk;
}

inline int do_product(const std::vector<int>& factors, const Rational& order, Format format, std::ostream& out)
{
	emit_series(out, "character of " + product_row_name(factors), product_character(factors, order), format);
	return kOk;
}

inline int do_decompose(int target, const std::vector<int>& factors, const Rational& order, Format format,
	std::ostream& out, std::ostream& err)
{
	Decomposition dec;
	try {
		dec = decompose(target, factors, order);
	} catch (const CentralChargeMismatch& e) {
		err << "central charge mismatch: " << e.what() << "\n";
		return kMismatch;
	} catch (const DecompositionFailure& e) {
		err << "decomposition failed: " << e.what() << "\n";
		return kMismatch;
	}
	const bool verified = decomposition_remainder(dec).empty();
	if (format == Format::Json) {
		out << to_json(dec, verified).dump(2) << "\n";
	} else {
		std::vector<std::vector<std::string>> rows;
		for (const auto& [label, m] : dec.multiplicities) {
			rows.push_back({format == Format::Csv ? std::to_string(label.r()) : label.to_string(), m.str()});
		}
		if (format == Format::Csv) {
			print_csv(out, {"r", "multiplicity"}, rows);
		} else {
			out << product_row_name(factors) << " as a module over M" << target << "\n";
			print_table(out, {"module", "multiplicity"}, rows);
			out << (verified ? "exact below q^" + to_pretty(order) : std::string("REMAINDER NONZERO")) << "\n";
		}
	}
	return verified ? kOk : kMismatch;
}

inline int do_embeddings(int max, Format format, std::ostream& out)
{
	const std::vector<EmbeddingCase> cases = enumerate_diagonal_embeddings(max);
	if (format == Format::Json) {
		json arr = json::array();
		for (const auto& e : cases) {
			arr.push_back(to_json(e));
		}
		out << arr.dump(2) << "\n";
		return kOk;
	}
	std::vector<std::vector<std::string>> rows;
	for (const auto& e : cases) {
		const Rational c = central_charge(e.d1());
		rows.push_back({std::to_string(e.d1()), std::to_string(e.d2()), std::to_string(e.d3()),
			format == Format::Csv ? to_string(c) : to_pretty(c)});
	}
	if (format == Format::Csv) {
		print_csv(out, {"d1", "d2", "d3", "c"}, rows);
	} else {
		print_table(out, {"d1", "d2", "d3", "c"}, rows);
	}
	return kOk;
}

inline int do_gram(int d, const Rational& level, int charge, const LevelCap& cap, Format format, std::ostream& out)
{
	const GramBlock g = gram_block(level, charge, central_charge(d), cap);
	if (format == Format::Json) {
		out << to_json(g).dump(2) << "\n";
		return kOk;
	}
	std::vector<std::string> header{"basis"};
	for (const auto& b : g.basis) {
		header.push_back(b.empty() ? "1" : word_to_string(b));
	}
	std::vector<std::vector<std::string>> rows;
	for (std::size_t i = 0; i < g.size(); ++i) {
		std::vector<std::string> row{header[i + 1]};
		for (const Rational& x : g.matrix[i]) {
			row.push_back(format == Format::Csv ? to_string(x) : to_pretty(x));
		}
		rows.push_back(std::move(row));
	}
	if (format == Format::Csv) {
		print_csv(out, header, rows);
		return kOk;
	}
	out << "Gram block of M" << d << " (c = " << to_pretty(g.central_charge) << ") at level " << to_pretty(level)
		<< ", charge " << charge << "\n";
	if (g.size() == 0) {
		out << "(empty block)\n";
	} else {
		print_table(out, header, rows);
	}
	out << "size " << g.size() << ", rank " << g.rank() << ", radical " << g.radical_dimension() << "\n";
	return kOk;
}

inline int do_dims(int d, const Rational& max_level, const LevelCap& cap, Format format, std::ostream& out)
{
	const std::vector<GradedDimension> dims = quotient_graded_dims(d, max_level, cap);
	const QSeries chi = vacuum_character(d, max_level + Rational(Integer(1), Integer(2)));
	bool all_agree = true;
	json arr = json::array();
	std::vector<std::vector<std::string>> rows;
	for (const GradedDimension& g : dims) {
		const Rational coeff = chi.coeff(g.level);
		const bool agree = coeff == Rational(g.quotient());
		all_agree = all_agree && agree;
		arr.push_back(json{{"level", to_string(g.level)},
			{"pbw", g.pbw_count},
			{"radical", g.radical},
			{"quotient", g.quotient()},
			{"character", to_string(coeff)},
			{"agree", agree}});
		rows.push_back({format == Format::Csv ? to_string(g.level) : to_pretty(g.level), std::to_string(g.pbw_count),
			std::to_string(g.radical), std::to_string(g.quotient()),
			format == Format::Csv ? to_string(coeff) : to_pretty(coeff), agree ? "yes" : "NO"});
	}
	const std::vector<std::string> header{"level", "pbw", "radical", "quotient", "character", "agree"};
	if (format == Format::Json) {
		out << json{{"d", d}, {"c", to_string(central_charge(d))}, {"levels", arr}, {"agree", all_agree}}.dump(2)
			<< "\n";
	} else if (format == Format::Csv) {
		print_csv(out, header, rows);
	} else {
		out << "graded dimensions of M" << d << " (c = " << to_pretty(central_charge(d)) << ")\n";
		print_table(out, header, rows);
		out << (all_agree ? "Shapovalov radical and character agree" : "MISMATCH between radical and character")
			<< "\n";
	}
	return all_agree ? kOk : kMismatch;
}

struct CaseOutcome
{
	TableReport table;
	std::optional<Decomposition> decomposition;
	std::string decomposition_error;
	bool decomposition_ok = false;
	std::optional<IsometryReport> isometry;

	bool passed() const
	{
		return table.passed() && decomposition_ok && (!isometry || isometry->passed());
	}
};

struct CrossCheckRow
{
	int d;
	Rational level;
	std::size_t quotient;
	Rational character;
};

inline std::vector<DimensionTable> load_expected(const std::string& path)
{
	std::ifstream in(path);
	if (!in) {
		throw UsageError("--expected: cannot open '" + path + "'");
	}
	json j;
	try {
		j = json::parse(in);
	} catch (const json::exception& e) {
		throw UsageError("--expected: " + std::string(e.what()));
	}
	std::vector<DimensionTable> tables;
	try {
		if (j.is_array()) {
			for (const json& t : j) {
				tables.push_back(table_from_json(t));
			}
		} else {
			tables.push_back(table_from_json(j));
		}
	} catch (const std::exception& e) {
		throw UsageError("--expected: " + std::string(e.what()));
	}
	return tables;
}

inline Rational max_weight(const DimensionTable& t)
{
	return t.weights.empty() ? Rational(0) : *std::max_element(t.weights.begin(), t.weights.end());
}

inline int do_verify(const std::vector<std::string>& cases, const std::optional<Rational>& degree_opt,
	bool with_gram, const std::vector<DimensionTable>& expected, Format format, std::ostream& out)
{
	std::vector<CaseOutcome> outcomes;
	for (const std::string& name : cases) {
		DimensionTable reference = reference_table(name);
		for (const DimensionTable& t : expected) {
			if (t.case_name == name) {
				reference = t;
			}
		}
		const Rational degree = degree_opt.value_or(max_weight(reference_table(name)));
		const Rational order = degree + 1;

		CaseOutcome outcome;
		outcome.table = verify_table(reference);
		try {
			outcome.decomposition = decompose(reference.target_d, reference.factors, order);
			const std::vector<ModuleLabel> expected_summands = allowed_integer_modules(reference.target_d);
			outcome.decomposition_ok = decomposition_remainder(*outcome.decomposition).empty() &&
				outcome.decomposition->multiplicities.size() == expected_summands.size();
			for (const ModuleLabel& label : expected_summands) {
				if (outcome.decomposition->multiplicity(label.r()) != 1) {
					outcome.decomposition_ok = false;
				}
			}
		} catch (const Error& e) {
			outcome.decomposition_error = e.what();
		}
		if (with_gram) {
			const int d3 = reference.factors.size() == 2 ? reference.factors[1] : 0;
			const int d2 = reference.factors.size() == 2 ? reference.factors[0] : 0;
			outcome.isometry = isometry_check(EmbeddingCase(reference.target_d, std::min(d2, d3), std::max(d2, d3)),
				Rational(Integer(5), Integer(2)));
		}
		outcomes.push_back(std::move(outcome));
	}

	const std::vector<EmbeddingCase> found = enumerate_diagonal_embeddings(10000);
	const std::vector<EmbeddingCase> known{{6, 3, 3}, {12, 3, 4}, {30, 3, 5}};
	const bool embeddings_ok = (found == known);

	std::vector<CrossCheckRow> cross;
	bool cross_ok = true;
	if (with_gram) {
		for (int d : {3, 4, 5, 12, 30}) {
			const QSeries chi = vacuum_character(d, Rational(Integer(7), Integer(2)));
			for (const GradedDimension& g : quotient_graded_dims(d, Rational(3))) {
				const Rational c = chi.coeff(g.level);
				cross.push_back({d, g.level, g.quotient(), c});
				cross_ok = cross_ok && (c == Rational(g.quotient()));
			}
		}
	}

	bool all_ok = embeddings_ok && cross_ok;
	for (const CaseOutcome& o : outcomes) {
		all_ok = all_ok && o.passed();
	}

	if (format == Format::Json) {
		json report;
		json case_reports = json::array();
		for (const CaseOutcome& o : outcomes) {
			json c;
			c["table"] = to_json(o.table);
			if (o.decomposition) {
				c["decomposition"] = to_json(*o.decomposition, decomposition_remainder(*o.decomposition).empty());
			} else {
				c["decomposition"] = nullptr;
				c["decomposition_error"] = o.decomposition_error;
			}
			c["decomposition_ok"] = o.decomposition_ok;
			c["isometry"] = o.isometry ? to_json(*o.isometry) : json(nullptr);
			c["passed"] = o.passed();
			case_reports.push_back(std::move(c));
		}
		report["cases"] = std::move(case_reports);
		json emb = json::array();
		for (const auto& e : found) {
			emb.push_back(to_json(e));
		}
		report["embeddings"] = std::move(emb);
		report["embeddings_ok"] = embeddings_ok;
		if (with_gram) {
			json rows = json::array();
			for (const auto& r : cross) {
				rows.push_back(json{{"d", r.d}, {"level", to_string(r.level)}, {"quotient", r.quotient},
					{"character", to_string(r.character)}});
			}
			report["cross_check"] = std::move(rows);
			report["cross_check_ok"] = cross_ok;
		}
		report["verdict"] = all_ok ? "VERIFIED" : "MISMATCH";
		out << report.dump(2) << "\n";
		return all_ok ? kOk : kMismatch;
	}

	if (format == Format::Csv) {
		std::vector<std::vector<std::string>> rows;
		for (const CaseOutcome& o : outcomes) {
			const DimensionTable& t = o.table.computed;
			for (std::size_t i = 0; i < t.rows.size(); ++i) {
				for (std::size_t c = 0; c < t.weights.size(); ++c) {
					const bool has_expected = i < o.table.expected.rows.size() &&
						c < o.table.expected.rows[i].dims.size();
					rows.push_back({t.case_name, t.rows[i].name, to_string(t.weights[c]), t.rows[i].dims[c].str(),
						has_expected ? o.table.expected.rows[i].dims[c].str() : std::string()});
				}
			}
		}
		print_csv(out, {"case", "row", "weight", "computed", "expected"}, rows);
		return all_ok ? kOk : kMismatch;
	}

	for (const CaseOutcome& o : outcomes) {
		const DimensionTable& t = o.table.computed;
		out << "== " << t.case_name << ": " << product_row_name(t.factors) << " over M" << t.target_d << "\n";
		std::vector<std::string> header{"conformal weight"};
		for (const Rational& w : t.weights) {
			header.push_back(to_pretty(w));
		}
		std::vector<std::vector<std::string>> rows;
		for (const TableRow& r : t.rows) {
			std::vector<std::string> row{"dimension in " + r.name};
			for (const Integer& x : r.dims) {
				row.push_back(x.str());
			}
			rows.push_back(std::move(row));
		}
		print_table(out, header, rows);
		out << "reference table: " << (o.table.matches_reference ? "match" : "MISMATCH");
		if (o.table.first_mismatch) {
			out << " (" << *o.table.first_mismatch << ")";
		}
		out << "\n";
		out << "summand rows add up to the product row: " << (o.table.columns_add_up ? "yes" : "NO") << "\n";
		if (o.decomposition) {
			out << "decomposition below q^" << to_pretty(o.decomposition->verified_order) << ":";
			for (const auto& [label, m] : o.decomposition->multiplicities) {
				out << " " << m.str() << "x C" << label.r();
			}
			out << (o.decomposition_ok ? " (each allowed module once)" : " (UNEXPECTED)") << "\n";
		} else {
			out << "decomposition FAILED: " << o.decomposition_error << "\n";
		}
		if (o.isometry) {
			out << "isometry up to level " << to_pretty(o.isometry->max_level) << ": "
				<< (o.isometry->passed() ? "pass" : "FAIL") << " (" << o.isometry->pairs_checked << " pairs)\n";
		}
	}
	out << "diagonal embeddings (d <= 10000):";
	for (const auto& e : found) {
		out << " " << e.to_string();
	}
	out << (embeddings_ok ? "" : " (UNEXPECTED)") << "\n";
	if (with_gram) {
		out << "Shapovalov radical vs vacuum character, d in {3,4,5,12,30}, levels <= 3: "
			<< (cross_ok ? "agree" : "MISMATCH") << "\n";
	}
	out << (all_ok ? "VERIFIED" : "MISMATCH") << "\n";
	return all_ok ? kOk : kMismatch;
}

} // namespace detail

/// Runs the tool on argv (without the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Exact q-series and Shapovalov checks for N=2 minimal model conformal embeddings", "n2char"};
	app.require_subcommand(1);
	std::string format_text = "table";
	auto add_format = [&](CLI::App* sub) {
		sub->add_option("--format", format_text, "table, csv or json");
	};

	int chi_d = 0, chi_r = 0;
	std::string chi_order;
	auto* chi = app.add_subcommand("chi", "character of C_r over M_d");
	chi->add_option("--d", chi_d)->required();
	chi->add_option("--r", chi_r)->required();
	chi->add_option("--order", chi_order)->required();
	add_format(chi);

	std::vector<int> product_factors;
	std::string product_order;
	auto* product = app.add_subcommand("product", "character of a tensor product of minimal quotients");
	product->add_option("--factors", product_factors)->required()->delimiter(',');
	product->add_option("--order", product_order)->required();
	add_format(product);

	int dec_target = 0;
	std::vector<int> dec_factors;
	std::string dec_order;
	auto* dec = app.add_subcommand("decompose", "decompose a product character over M_target");
	dec->add_option("--target", dec_target)->required();
	dec->add_option("--factors", dec_factors)->required()->delimiter(',');
	dec->add_option("--order", dec_order)->required();
	add_format(dec);

	int emb_max = 0;
	auto* emb = app.add_subcommand("embeddings", "diagonal embeddings with matching central charge");
	emb->add_option("--max", emb_max)->required();
	add_format(emb);

	int gram_d = 0, gram_charge = 0;
	std::string gram_level, gram_cap = "6";
	auto* gram = app.add_subcommand("gram", "Shapovalov Gram block of the vacuum module");
	gram->add_option("--d", gram_d)->required();
	gram->add_option("--level", gram_level)->required();
	gram->add_option("--charge", gram_charge)->required();
	gram->add_option("--level-cap", gram_cap, "largest level accepted (default 6)");
	add_format(gram);

	int dims_d = 0;
	std::string dims_max, dims_cap = "6";
	auto* dims = app.add_subcommand("dims", "graded dimensions of M_d from the Shapovalov radical");
	dims->add_option("--d", dims_d)->required();
	dims->add_option("--max-level", dims_max)->required();
	dims->add_option("--level-cap", dims_cap, "largest level accepted (default 6)");
	add_format(dims);

	std::string verify_case;
	std::string verify_order;
	std::string verify_expected;
	bool with_gram = false;
	auto* verify = app.add_subcommand("verify", "reproduce the E6/E8 dimension tables and decompositions");
	verify->add_option("--case", verify_case)->required();
	verify->add_option("--order", verify_order, "expansion degree (default 1 for e6, 7 for e8)");
	verify->add_flag("--with-gram", with_gram, "add the Shapovalov cross-check and isometry check");
	verify->add_option("--expected", verify_expected, "JSON file overriding the reference tables");
	add_format(verify);

	std::vector<std::string> reversed(args.rbegin(), args.rend());
	try {
		app.parse(reversed);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e, out, err);
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << "\n" << kGrammar;
		return kUsage;
	}

	try {
		const Format format = detail::parse_format(format_text);
		if (*chi) {
			detail::require_d("d", chi_d);
			const Rational order = detail::parse_rational_option("order", chi_order);
			try {
				const ModuleLabel label(chi_d, 0, chi_r);
				if (label.sector() != Sector::NS) {
					throw UsageError("--r: the NS module C_r needs odd r, got " + std::to_string(chi_r));
				}
			} catch (const DomainError& e) {
				throw UsageError(std::string("--r: ") + e.what());
			}
			return detail::do_chi(chi_d, chi_r, order, format, out);
		}
		if (*product) {
			for (int d : product_factors) {
				detail::require_d("factors", d);
			}
			const Rational order = detail::parse_rational_option("order", product_order);
			return detail::do_product(product_factors, order, format, out);
		}
		if (*dec) {
			detail::require_d("target", dec_target);
			for (int d : dec_factors) {
				detail::require_d("factors", d);
			}
			const Rational order = detail::parse_rational_option("order", dec_order);
			return detail::do_decompose(dec_target, dec_factors, order, format, out, err);
		}
		if (*emb) {
			detail::require_d("max", emb_max);
			return detail::do_embeddings(emb_max, format, out);
		}
		if (*gram) {
			detail::require_d("d", gram_d);
			const Rational level = detail::parse_rational_option("level", gram_level);
			detail::require_half_integer_level("level", level);
			const LevelCap cap{detail::parse_rational_option("level-cap", gram_cap)};
			if (level > cap.max_level) {
				throw UsageError("--level: " + to_pretty(level) + " exceeds the level cap " + to_pretty(cap.max_level) +
					" (pass --level-cap to raise it)");
			}
			return detail::do_gram(gram_d, level, gram_charge, cap, format, out);
		}
		if (*dims) {
			detail::require_d("d", dims_d);
			const Rational max_level = detail::parse_rational_option("max-level", dims_max);
			detail::require_half_integer_level("max-level", max_level);
			const LevelCap cap{detail::parse_rational_option("level-cap", dims_cap)};
			if (max_level > cap.max_level) {
				throw UsageError("--max-level: " + to_pretty(max_level) + " exceeds the level cap " +
					to_pretty(cap.max_level) + " (pass --level-cap to raise it)");
			}
			return detail::do_dims(dims_d, max_level, cap, format, out);
		}
		if (*verify) {
			std::vector<std::string> cases;
			if (verify_case == "all") {
				cases = {"e6", "e8"};
			} else if (verify_case == "e6" || verify_case == "e8") {
				cases = {verify_case};
			} else {
				throw UsageError("--case: expected e6, e8 or all, got '" + verify_case + "'");
			}
			std::optional<Rational> degree;
			if (!verify_order.empty()) {
				degree = detail::parse_rational_option("order", verify_order);
				for (const std::string& c : cases) {
					const Rational needed = detail::max_weight(reference_table(c));
					if (*degree < needed) {
						throw UsageError("--order: the " + c + " table needs degree >= " + to_pretty(needed) + ", got " +
							to_pretty(*degree));
					}
				}
			}
			std::vector<DimensionTable> expected;
			if (!verify_expected.empty()) {
				expected = detail::load_expected(verify_expected);
				for (const DimensionTable& t : expected) {
					if (degree && !t.weights.empty() && detail::max_weight(t) > *degree) {
						throw UsageError("--expected: table '" + t.case_name + "' has weights beyond --order");
					}
				}
			}
			return detail::do_verify(cases, degree, with_gram, expected, format, out);
		}
	} catch (const UsageError& e) {
		err << "error: " << e.what() << "\n" << kGrammar;
		return kUsage;
	} catch (const Error& e) {
		err << "error: " << e.what() << "\n";
		return kMismatch;
	}
	err << kGrammar;
	return kUsage;
}

} // namespace n2char::cli

#endif // N2CHAR_CLI_HPP
