#include <map>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "n2char/modes.hpp"
#include "n2char/qseries.hpp"

using namespace n2char;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1)
{
	return make_rational(n, d);
}

Mode random_mode(std::mt19937& rng, int span)
{
	std::uniform_int_distribution<int> fam(0, 3);
	std::uniform_int_distribution<int> idx(-span, span);
	const Family f = static_cast<Family>(fam(rng));
	const int n = idx(rng);
	return Mode(f, is_fermionic(f) ? 2 * n + 1 : 2 * n);
}

// Element of the mode algebra: combination of modes plus a central part.
struct Element
{
	std::map<Mode, Rational> modes;
	Rational central{0};

	void add(const BracketTerms& b, const Rational& scale)
	{
		for (const auto& [c, m] : b.terms) {
			modes[m] += c * scale;
			if (modes[m] == 0) {
				modes.erase(m);
			}
		}
		central += b.central * scale;
	}

	friend bool operator==(const Element&, const Element&) = default;
};

// [x, e} for a single mode x and a homogeneous element e of parity `odd`;
// central elements commute with everything.
Element bracket_with(const Mode& x, const Element& e, const Rational& c)
{
	Element out;
	for (const auto& [m, v] : e.modes) {
		out.add(bracket(x, m, c), v);
	}
	return out;
}

Element as_element(const BracketTerms& b)
{
	Element e;
	e.add(b, Rational(1));
	return e;
}

} // namespace

TEST(Mode, ParityAndClassification)
{
	EXPECT_THROW(Mode(Family::L, 1), DomainError);
	EXPECT_THROW(Mode(Family::Gplus, 2), DomainError);
	EXPECT_TRUE(Mode::L(-2).is_creation());
	EXPECT_FALSE(Mode::L(-1).is_creation());
	EXPECT_TRUE(Mode::J(-1).is_creation());
	EXPECT_FALSE(Mode::J(0).is_creation());
	EXPECT_TRUE(Mode::Gp(-3).is_creation());
	EXPECT_FALSE(Mode::Gm(-1).is_creation());
	EXPECT_EQ(Mode::Gp(-3).level(), R(3, 2));
	EXPECT_EQ(Mode::Gm(-3).charge(), -1);
}

TEST(Mode, ParseAndPrint)
{
	EXPECT_EQ(Mode::Gp(-3).to_string(), "G+-3/2");
	EXPECT_EQ(Mode::J(1).to_string(), "J1");
	EXPECT_EQ(parse_mode("G--5/2"), Mode::Gm(-5));
	EXPECT_EQ(parse_mode("L-2"), Mode::L(-2));
	EXPECT_EQ(parse_word("J-1.G+-3/2"), (std::vector<Mode>{Mode::J(-1), Mode::Gp(-3)}));
	EXPECT_TRUE(parse_word("").empty());
	EXPECT_THROW(parse_mode("X1"), ParseError);
	EXPECT_THROW(parse_mode("L1/3"), ParseError);
	EXPECT_THROW(parse_mode("L1/2"), DomainError);
}

TEST(Dagger, Examples)
{
	EXPECT_EQ(dagger(ModeWord({Mode::J(-1)})).modes, (std::vector<Mode>{Mode::J(1)}));
	EXPECT_EQ(dagger(ModeWord({Mode::Gp(-3), Mode::Gm(-5)})).modes, (std::vector<Mode>{Mode::Gp(5), Mode::Gm(3)}));
	EXPECT_EQ(dagger(ModeWord({Mode::L(-2)}, R(3, 4))).coefficient, R(3, 4));
}

TEST(DaggerProperty, AntiInvolution)
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<int> len(0, 6);
	for (int trial = 0; trial < 200; ++trial) {
		ModeWord x, y;
		for (int i = len(rng); i > 0; --i) {
			x.modes.push_back(random_mode(rng, 4));
		}
		for (int i = len(rng); i > 0; --i) {
			y.modes.push_back(random_mode(rng, 4));
		}
		EXPECT_EQ(dagger(dagger(x)), x);
		EXPECT_EQ(dagger(x * y), dagger(y) * dagger(x));
		EXPECT_EQ(dagger(x).level(), -x.level());
		EXPECT_EQ(dagger(x).charge(), -x.charge());
	}
}

TEST(Bracket, TableEntries)
{
	const Rational c = R(5, 2);
	// [L_2, L_-2] = 4 L_0 + c/2
	const BracketTerms ll = bracket(Mode::L(2), Mode::L(-2), c);
	ASSERT_EQ(ll.terms.size(), 1u);
	EXPECT_EQ(ll.terms[0], std::make_pair(R(4), Mode::L(0)));
	EXPECT_EQ(ll.central, c / 2);
	// [J_1, J_-1] = c/3
	EXPECT_TRUE(bracket(Mode::J(1), Mode::J(-1), c).terms.empty());
	EXPECT_EQ(bracket(Mode::J(1), Mode::J(-1), c).central, c / 3);
	// {G+_{-3/2}, G-_{3/2}} = 2 L_0 - 3 J_0 + 2c/3
	const BracketTerms gg = bracket(Mode::Gp(-3), Mode::Gm(3), c);
	EXPECT_EQ(gg.central, c * 2 / 3);
	ASSERT_EQ(gg.terms.size(), 2u);
	EXPECT_EQ(gg.terms[0], std::make_pair(R(2), Mode::L(0)));
	EXPECT_EQ(gg.terms[1], std::make_pair(R(-3), Mode::J(0)));
	// anticommutator is symmetric
	const BracketTerms gg2 = bracket(Mode::Gm(3), Mode::Gp(-3), c);
	EXPECT_EQ(gg2.terms, gg.terms);
	EXPECT_EQ(gg2.central, gg.central);
	// [J_0, G-_r] = -G-_r, [G-_r, J_0] = +G-_r
	EXPECT_EQ(bracket(Mode::J(0), Mode::Gm(-3), c).terms[0], std::make_pair(R(-1), Mode::Gm(-3)));
	EXPECT_EQ(bracket(Mode::Gm(-3), Mode::J(0), c).terms[0], std::make_pair(R(1), Mode::Gm(-3)));
	EXPECT_TRUE(bracket(Mode::Gp(1), Mode::Gp(-1), c).terms.empty());
	// [L_m, J_n] = -n J_{m+n}
	EXPECT_EQ(bracket(Mode::L(1), Mode::J(-2), c).terms[0], std::make_pair(R(2), Mode::J(-1)));
	// [L_m, G_r] = (m/2 - r) G_{m+r}
	EXPECT_EQ(bracket(Mode::L(1), Mode::Gp(-3), c).terms[0], std::make_pair(R(2), Mode::Gp(-1)));
}

TEST(BracketProperty, GradedAntisymmetry)
{
	std::mt19937 rng(11);
	const Rational c = R(14, 5);
	for (int trial = 0; trial < 500; ++trial) {
		const Mode a = random_mode(rng, 4);
		const Mode b = random_mode(rng, 4);
		const Rational sign = (a.fermionic() && b.fermionic()) ? R(1) : R(-1);
		Element ab = as_element(bracket(a, b, c));
		Element ba;
		ba.add(bracket(b, a, c), sign);
		EXPECT_EQ(ab, ba) << a.to_string() << " " << b.to_string();
	}
}

TEST(BracketProperty, SuperJacobiIdentity)
{
	// [a, [b, x}} = [[a, b}, x} + (-1)^{|a||b|} [b, [a, x}}
	std::mt19937 rng(13);
	const Rational c = R(5, 2);
	for (int trial = 0; trial < 1000; ++trial) {
		const Mode a = random_mode(rng, 3);
		const Mode b = random_mode(rng, 3);
		const Mode x = random_mode(rng, 3);
		const Element lhs = bracket_with(a, as_element(bracket(b, x, c)), c);

		Element rhs;
		for (const auto& [coeff, m] : bracket(a, b, c).terms) {
			rhs.add(bracket(m, x, c), coeff);
		}
		const Rational sign = (a.fermionic() && b.fermionic()) ? R(-1) : R(1);
		const Element bax = bracket_with(b, as_element(bracket(a, x, c)), c);
		for (const auto& [m, v] : bax.modes) {
			rhs.modes[m] += sign * v;
			if (rhs.modes[m] == 0) {
				rhs.modes.erase(m);
			}
		}
		rhs.central += sign * bax.central;
		EXPECT_EQ(lhs, rhs) << a.to_string() << " " << b.to_string() << " " << x.to_string();
	}
}

TEST(PBW, SmallLevels)
{
	EXPECT_EQ(pbw_basis(R(0), 0), (std::vector<PBWMonomial>{PBWMonomial{}}));
	EXPECT_EQ(pbw_basis(R(1), 0), (std::vector<PBWMonomial>{{Mode::J(-1)}}));
	EXPECT_TRUE(pbw_basis(R(1, 2)).empty());
	EXPECT_EQ(pbw_basis(R(3, 2), 1), (std::vector<PBWMonomial>{{Mode::Gp(-3)}}));
	const std::vector<std::size_t> expected{1, 0, 1, 2, 3, 4, 6};
	for (int t = 0; t <= 6; ++t) {
		EXPECT_EQ(pbw_basis(R(t, 2)).size(), expected[t]) << "level " << t << "/2";
	}
	EXPECT_THROW(pbw_basis(R(1, 3)), DomainError);
	EXPECT_THROW(pbw_basis(R(-1)), DomainError);
}

TEST(PBW, CanonicalAndHomogeneous)
{
	for (int t = 0; t <= 10; ++t) {
		const Rational level = R(t, 2);
		const auto basis = pbw_basis(level);
		for (std::size_t i = 0; i < basis.size(); ++i) {
			EXPECT_TRUE(is_canonical(basis[i])) << word_to_string(basis[i]);
			EXPECT_EQ(monomial_level(basis[i]), level);
			if (i > 0) {
				EXPECT_LT(basis[i - 1], basis[i]);
			}
		}
		std::size_t total = 0;
		for (int q : pbw_charges(level)) {
			total += pbw_basis(level, q).size();
		}
		EXPECT_EQ(total, basis.size());
	}
}

TEST(PBW, CountMatchesGeneratingFunction)
{
	// prod_{n>=2} (1-q^n)^-1 prod_{n>=1} (1-q^n)^-1 prod_{r>=3/2} (1+q^r)^2
	const Rational order = R(9, 2);
	QSeries gf = QSeries::constant(R(1), order);
	for (int n = 2; R(n) < order; ++n) {
		gf *= geometric_inverse(R(n), -1, order);
	}
	for (int n = 1; R(n) < order; ++n) {
		gf *= geometric_inverse(R(n), -1, order);
	}
	for (int t = 3; R(t, 2) < order; t += 2) {
		const QSeries f = QSeries::constant(R(1)) + QSeries::monomial(R(1), R(t, 2));
		gf *= f;
		gf *= f;
	}
	for (int t = 0; t <= 8; ++t) {
		EXPECT_EQ(gf.coeff(R(t, 2)), Rational(pbw_basis(R(t, 2)).size())) << "level " << t << "/2";
	}
}

TEST(PBW, IsCanonicalRejects)
{
	EXPECT_FALSE(is_canonical({Mode::J(-1), Mode::L(-2)}));
	EXPECT_FALSE(is_canonical({Mode::Gp(-3), Mode::Gp(-3)}));
	EXPECT_FALSE(is_canonical({Mode::L(-1)}));
	EXPECT_TRUE(is_canonical({Mode::J(-1), Mode::J(-1)}));
	EXPECT_TRUE(is_canonical({Mode::L(-3), Mode::L(-2), Mode::Gp(-5), Mode::Gp(-3)}));
}
