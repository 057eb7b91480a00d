// Exit criteria for n2char. Prints one [PASS]/[FAIL] line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "n2char/cli.hpp"
#include "n2char/n2char.hpp"

using namespace n2char;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1)
{
	return make_rational(n, d);
}

struct Check
{
	bool ok = true;
	std::string detail;

	void require(bool cond, const std::string& what)
	{
		if (!cond && ok) {
			ok = false;
			detail = what;
		}
	}
};

int cli_exit(const std::vector<std::string>& args, std::string* out_text = nullptr)
{
	std::ostringstream out, err;
	const int code = cli::run(args, out, err);
	if (out_text) {
		*out_text = out.str();
	}
	return code;
}

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body)
{
	Check check;
	const auto start = std::chrono::steady_clock::now();
	try {
		body(check);
	} catch (const std::exception& e) {
		check.ok = false;
		check.detail = std::string("exception: ") + e.what();
	}
	const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	if (limit_seconds > 0 && seconds >= limit_seconds) {
		check.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
	}
	char timing[32];
	std::snprintf(timing, sizeof timing, "%.3f s", seconds);
	std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << timing << ")";
	if (!check.ok) {
		std::cout << ": " << check.detail;
		++failures;
	}
	std::cout << std::endl;
}

Mode random_mode(std::mt19937& rng)
{
	std::uniform_int_distribution<int> fam(0, 3);
	std::uniform_int_distribution<int> idx(-4, 4);
	const Family f = static_cast<Family>(fam(rng));
	const int n = idx(rng);
	return Mode(f, is_fermionic(f) ? 2 * n + 1 : 2 * n);
}

} // namespace

int main()
{
	criterion("AC1", "verify e8 at degree 7 reproduces the dimension table", 5.0, [](Check& c) {
		std::string out;
		c.require(cli_exit({"verify", "--case", "e8", "--order", "7"}, &out) == 0, "verify exit code");
		c.require(out.find("VERIFIED") != std::string::npos, "no VERIFIED line");
		const DimensionTable t = compute_table(reference_table("e8"));
		c.require(t.weights == std::vector<Rational>{R(0), R(1), R(3), R(7)}, "weights");
		const std::map<std::string, std::vector<Integer>> expected{{"M3xM5", {1, 2, 18, 496}},
			{"C1", {1, 1, 6, 107}}, {"C11", {0, 1, 11, 319}}, {"C19", {0, 0, 1, 69}}, {"C29", {0, 0, 0, 1}}};
		c.require(t.rows.size() == expected.size(), "row count");
		for (const TableRow& row : t.rows) {
			const auto it = expected.find(row.name);
			c.require(it != expected.end() && it->second == row.dims, "row " + row.name);
		}
	});

	criterion("AC2", "e6 degree-1 dimensions", 1.0, [](Check& c) {
		const QSeries p = product_character({3, 4}, R(2));
		c.require(p.coeff(R(0)) == 1 && p.coeff(R(1)) == 2, "M3xM4 dims");
		const QSeries c1 = character_C(12, 1, R(2));
		const QSeries c7 = character_C(12, 7, R(2));
		c.require(c1.coeff(R(1)) == 1 && c7.coeff(R(1)) == 1 && c7.coeff(R(0)) == 0, "C1/C7 weight-1 vectors");
		c.require(verify_table(reference_table("e6")).passed(), "e6 table");
		c.require(cli_exit({"verify", "--case", "e6", "--order", "1"}) == 0, "verify e6 exit code");
	});

	criterion("AC3", "character identities for M12 and M30 to order 8", 0, [](Check& c) {
		const QSeries e6 = product_character({3, 4}, R(8)) - character_C(12, 1, R(8)) - character_C(12, 7, R(8));
		c.require(e6.empty(), "chi(M3)chi(M4) - chi(C1) - chi(C7) != 0");
		QSeries e8 = product_character({3, 5}, R(8));
		for (int r : {1, 11, 19, 29}) {
			e8 -= character_C(30, r, R(8));
		}
		c.require(e8.empty(), "chi(M3)chi(M5) - sum chi(C_r) != 0");
		for (const auto& [target, factors] : std::vector<std::pair<int, std::vector<int>>>{{12, {3, 4}}, {30, {3, 5}}}) {
			const Decomposition d8 = decompose(target, factors, R(8));
			const Decomposition d10 = decompose(target, factors, R(10));
			c.require(d8.multiplicities == d10.multiplicities, "decomposition not stable from order 8 to 10");
			for (const ModuleLabel& m : allowed_integer_modules(target)) {
				c.require(d8.multiplicity(m.r()) == 1, m.to_string() + " multiplicity");
			}
		}
	});

	criterion("AC4", "diagonal embeddings up to d = 10000", 1.0, [](Check& c) {
		const std::vector<EmbeddingCase> expected{{6, 3, 3}, {12, 3, 4}, {30, 3, 5}};
		c.require(enumerate_diagonal_embeddings(10000) == expected, "embedding set");
	});

	criterion("AC5", "conformal weights and allowed modules", 0, [](Check& c) {
		const std::map<int, std::vector<std::pair<int, int>>> cases{
			{12, {{1, 0}, {7, 1}}}, {30, {{1, 0}, {11, 1}, {19, 3}, {29, 7}}}};
		for (const auto& [d, rw] : cases) {
			std::vector<int> rs;
			for (const auto& [r, w] : rw) {
				c.require(conformal_weight(ModuleLabel(d, 0, r)) == w,
					"weight of r=" + std::to_string(r) + " at d=" + std::to_string(d));
				rs.push_back(r);
			}
			std::vector<int> got;
			for (const ModuleLabel& m : allowed_integer_modules(d)) {
				got.push_back(m.r());
			}
			c.require(got == rs, "allowed modules at d=" + std::to_string(d));
		}
	});

	criterion("AC6", "Shapovalov radical vs vacuum character, levels <= 3", 30.0, [](Check& c) {
		for (int d : {3, 4, 5, 12, 30}) {
			const QSeries chi = vacuum_character(d, R(7, 2));
			const std::vector<GradedDimension> dims = quotient_graded_dims(d, R(3));
			c.require(dims.size() == 7, "level count");
			for (const GradedDimension& g : dims) {
				c.require(chi.coeff(g.level) == Rational(g.quotient()),
					"d=" + std::to_string(d) + " level " + to_pretty(g.level));
			}
		}
	});

	criterion("AC7", "isometry of the diagonal map to level 5/2", 60.0, [](Check& c) {
		for (const EmbeddingCase& e : {EmbeddingCase(12, 3, 4), EmbeddingCase(30, 3, 5)}) {
			const IsometryReport r = isometry_check(e, R(5, 2));
			c.require(r.passed(), "isometry fails for " + e.to_string());
			c.require(r.pairs_checked == r.words * r.words, "not exhaustive for " + e.to_string());
		}
	});

	criterion("AC8", "identity suites", 0, [](Check& c) {
		// triple product
		QSeries sum = QSeries::zero(R(12));
		for (int n = -5; n <= 5; ++n) {
			if (R(n * n, 2) < 12) {
				sum += QSeries::monomial(R(1), R(n * n, 2));
			}
		}
		c.require(theta3(R(12)) == sum, "theta3 product vs sum");

		// PBW generating function
		const Rational order = R(9, 2);
		QSeries gf = QSeries::constant(R(1), order);
		for (int n = 1; R(n) < order; ++n) {
			gf *= geometric_inverse(R(n), -1, order);
			if (n >= 2) {
				gf *= geometric_inverse(R(n), -1, order);
			}
		}
		for (int t = 3; R(t, 2) < order; t += 2) {
			const QSeries f = QSeries::constant(R(1)) + QSeries::monomial(R(1), R(t, 2));
			gf *= f * f;
		}
		for (int t = 0; t <= 8; ++t) {
			c.require(gf.coeff(R(t, 2)) == Rational(pbw_basis(R(t, 2)).size()), "PBW count at level " + std::to_string(t) + "/2");
		}

		// Gram symmetry on random pairs within a block
		std::mt19937 rng(8);
		const std::vector<Rational> charges{R(1), R(3, 2), R(5, 2), R(14, 5), R(-3, 7)};
		int gram_cases = 0;
		for (const Rational& cc : charges) {
			VacuumModule module(cc);
			for (int t = 0; t <= 8 && gram_cases < 400; ++t) {
				for (int q : pbw_charges(R(t, 2))) {
					const std::vector<PBWMonomial> basis = pbw_basis(R(t, 2), q);
					std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
					for (int k = 0; k < 8; ++k) {
						const PBWMonomial& x = basis[pick(rng)];
						const PBWMonomial& y = basis[pick(rng)];
						c.require(module.pair(x, y) == module.pair(y, x), "Gram asymmetry");
						++gram_cases;
					}
				}
			}
		}
		c.require(gram_cases >= 100, "too few Gram cases");

		// dagger is an anti-involution
		std::uniform_int_distribution<int> len(0, 5);
		for (int trial = 0; trial < 200; ++trial) {
			ModeWord x, y;
			for (int i = len(rng); i > 0; --i) {
				x.modes.push_back(random_mode(rng));
			}
			for (int i = len(rng); i > 0; --i) {
				y.modes.push_back(random_mode(rng));
			}
			c.require(dagger(dagger(x)) == x, "dagger not an involution");
			c.require(dagger(x * y) == dagger(y) * dagger(x), "dagger not anti-multiplicative");
		}
	});

	criterion("AC9", "negative controls", 0, [](Check& c) {
		bool threw = false;
		try {
			decompose(11, {3, 4}, R(8));
		} catch (const CentralChargeMismatch&) {
			threw = true;
		}
		c.require(threw, "decompose(11, {3,4}) did not raise CentralChargeMismatch");

		const auto path = (std::filesystem::temp_directory_path() / "n2char_acceptance_expected.json").string();
		for (const std::string name : {"e6", "e8"}) {
			const DimensionTable ref = reference_table(name);
			for (std::size_t i = 0; i < ref.rows.size(); ++i) {
				for (std::size_t col = 0; col < ref.weights.size(); ++col) {
					DimensionTable bad = ref;
					bad.rows[i].dims[col] += 1;
					std::ofstream(path) << to_json(bad).dump();
					const int code = cli_exit({"verify", "--case", name, "--expected", path});
					c.require(code == 1, name + " row " + ref.rows[i].name + " column " + std::to_string(col) +
						" tampered but verify exited " + std::to_string(code));
				}
			}
		}
		std::remove(path.c_str());
	});

	std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
	return failures == 0 ? 0 : 1;
}
