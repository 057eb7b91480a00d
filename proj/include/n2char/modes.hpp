#ifndef N2CHAR_MODES_HPP
#define N2CHAR_MODES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "n2char/errors.hpp"
#include "n2char/rational.hpp"

namespace n2char {

// Canonical family order inside a PBW monomial: L, J, G+, G-.
enum class Family : std::uint8_t { L = 0, J = 1, Gplus = 2, Gminus = 3 };

inline bool is_fermionic(Family f)
{
	return f == Family::Gplus || f == Family::Gminus;
}

inline std::string_view family_name(Family f)
{
	switch (f) {
	case Family::L:
		return "L";
	case Family::J:
		return "J";
	case Family::Gplus:
		return "G+";
	case Family::Gminus:
		return "G-";
	}
	return "?";
}

/// A single mode L_n, J_n or G^{+-}_r of the NS sector. The index is stored
/// doubled, so it is even for L, J and odd for G.
class Mode
{
public:
	Mode(Family family, std::int32_t twice_index) : family_(family), twice_(twice_index)
	{
		const bool odd = (twice_index % 2) != 0;
		if (odd != is_fermionic(family)) {
			throw DomainError(std::string("mode ") + std::string(family_name(family)) +
				" has the wrong index parity (NS sector: integer for L/J, half-odd for G)");
		}
	}

	static Mode L(std::int32_t n) { return Mode(Family::L, 2 * n); }
	static Mode J(std::int32_t n) { return Mode(Family::J, 2 * n); }
	/// G^+_{r} with r = twice_r / 2
	static Mode Gp(std::int32_t twice_r) { return Mode(Family::Gplus, twice_r); }
	static Mode Gm(std::int32_t twice_r) { return Mode(Family::Gminus, twice_r); }

	Family family() const { return family_; }
	std::int32_t twice_index() const { return twice_; }
	Rational index() const { return Rational(Integer(twice_), Integer(2)); }
	bool fermionic() const { return is_fermionic(family_); }

	/// Contribution to L_0 when acting: -index.
	Rational level() const { return -index(); }

	/// J_0 charge: +1 for G+, -1 for G-, 0 otherwise.
	int charge() const
	{
		return family_ == Family::Gplus ? 1 : family_ == Family::Gminus ? -1 : 0;
	}

	/// Kills the vacuum: L_n (n >= -1), J_n (n >= 0), G_r (r >= -1/2).
	bool annihilates_vacuum() const
	{
		switch (family_) {
		case Family::L:
			return twice_ >= -2;
		case Family::J:
			return twice_ >= 0;
		default:
			return twice_ >= -1;
		}
	}

	/// Creation modes: L_{-n} n >= 2, J_{-n} n >= 1, G_{-r} r >= 3/2.
	bool is_creation() const { return !annihilates_vacuum(); }

	/// L_n^+ = L_{-n}, J_n^+ = J_{-n}, (G^+-_r)^+ = G^-+_{-r}
	Mode dagger() const
	{
		switch (family_) {
		case Family::Gplus:
			return Mode(Family::Gminus, -twice_);
		case Family::Gminus:
			return Mode(Family::Gplus, -twice_);
		default:
			return Mode(family_, -twice_);
		}
	}

	/// "L-2", "G+-3/2", "J1"
	std::string to_string() const { return std::string(family_name(family_)) + to_pretty(index()); }

	/// Canonical PBW order: by family, then by increasing index (for creation
	/// modes: decreasing |index|).
	friend auto operator<=>(const Mode& a, const Mode& b)
	{
		if (a.family_ != b.family_) {
			return a.family_ <=> b.family_;
		}
		return a.twice_ <=> b.twice_;
	}
	friend bool operator==(const Mode&, const Mode&) = default;

private:
	Family family_;
	std::int32_t twice_;
};

inline Mode parse_mode(std::string_view text)
{
	Family family;
	std::string_view rest;
	if (text.starts_with("G+")) {
		family = Family::Gplus;
		rest = text.substr(2);
	} else if (text.starts_with("G-")) {
		family = Family::Gminus;
		rest = text.substr(2);
	} else if (text.starts_with("L")) {
		family = Family::L;
		rest = text.substr(1);
	} else if (text.starts_with("J")) {
		family = Family::J;
		rest = text.substr(1);
	} else {
		throw ParseError("unknown mode '" + std::string(text) + "'");
	}
	const Rational index = parse_rational(rest);
	const Rational twice = index * 2;
	if (!is_integer(twice)) {
		throw ParseError("mode index must be a half-integer in '" + std::string(text) + "'");
	}
	return Mode(family, static_cast<std::int32_t>(to_int64(numerator(twice))));
}

/// Formal product of modes with a coefficient, leftmost letter acting last.
struct ModeWord
{
	std::vector<Mode> modes;
	Rational coefficient{1};

	ModeWord() = default;
	ModeWord(std::vector<Mode> m, Rational c = Rational(1)) : modes(std::move(m)), coefficient(std::move(c)) {}

	Rational level() const
	{
		Rational total(0);
		for (const Mode& m : modes) {
			total += m.level();
		}
		return total;
	}

	int charge() const
	{
		int total = 0;
		for (const Mode& m : modes) {
			total += m.charge();
		}
		return total;
	}

	friend bool operator==(const ModeWord&, const ModeWord&) = default;
};

/// Concatenation x * y (y acts first).
inline ModeWord operator*(const ModeWord& x, const ModeWord& y)
{
	ModeWord out = x;
	out.modes.insert(out.modes.end(), y.modes.begin(), y.modes.end());
	out.coefficient *= y.coefficient;
	return out;
}

/// Anti-involution: reverse the word and dagger every letter.
inline ModeWord dagger(const ModeWord& w)
{
	ModeWord out;
	out.coefficient = w.coefficient;
	out.modes.reserve(w.modes.size());
	for (auto it = w.modes.rbegin(); it != w.modes.rend(); ++it) {
		out.modes.push_back(it->dagger());
	}
	return out;
}

/// Dot-separated modes, "" for the empty word.
inline std::string word_to_string(const std::vector<Mode>& modes)
{
	std::string out;
	for (const Mode& m : modes) {
		if (!out.empty()) {
			out += '.';
		}
		out += m.to_string();
	}
	return out;
}

inline std::vector<Mode> parse_word(std::string_view text)
{
	std::vector<Mode> out;
	while (!text.empty()) {
		const auto dot = text.find('.');
		out.push_back(parse_mode(text.substr(0, dot)));
		if (dot == std::string_view::npos) {
			break;
		}
		text.remove_prefix(dot + 1);
	}
	return out;
}

// ---------------------------------------------------------------------------
// Commutation relations
// ---------------------------------------------------------------------------

/// Result of a (super)bracket [a, b}: a combination of modes plus a central term.
struct BracketTerms
{
	std::vector<std::pair<Rational, Mode>> terms;
	Rational central{0};
};

/// The NS-sector N=2 superconformal relations at central charge c, in the
/// standard normalisation:
///   [L_m, L_n]     = (m-n) L_{m+n} + c/12 (m^3-m) delta_{m+n,0}
///   [L_m, J_n]     = -n J_{m+n}
///   [L_m, G^+-_r]  = (m/2 - r) G^+-_{m+r}
///   [J_m, J_n]     = c/3 m delta_{m+n,0}
///   [J_m, G^+-_r]  = +-G^+-_{m+r}
///   {G^+_r, G^-_s} = 2 L_{r+s} + (r-s) J_{r+s} + c/3 (r^2 - 1/4) delta_{r+s,0}
///   {G^+-_r, G^+-_s} = 0
/// The remaining orderings follow from graded antisymmetry. This is the
/// only place the structure constants live.
inline BracketTerms bracket(const Mode& a, const Mode& b, const Rational& c)
{
	using F = Family;
	const std::int32_t sum2 = a.twice_index() + b.twice_index();
	const bool zero_sum = (sum2 == 0);
	BracketTerms out;
	auto add = [&](Rational coeff, Family f) {
		if (coeff != 0) {
			out.terms.emplace_back(std::move(coeff), Mode(f, sum2));
		}
	};

	// Put the pair into the orientation of the table. Swapping two bosons, or
	// a boson and a fermion, flips the sign; two fermions anticommute.
	const bool swap = (a.family() > b.family() && !(a.fermionic() && b.fermionic())) ||
		(a.family() == F::Gminus && b.family() == F::Gplus);
	if (swap) {
		out = bracket(b, a, c);
		if (!(a.fermionic() && b.fermionic())) {
			for (auto& t : out.terms) {
				t.first = -t.first;
			}
			out.central = -out.central;
		}
		return out;
	}

	const Rational m = a.index();
	const Rational n = b.index();
	switch (a.family()) {
	case F::L:
		switch (b.family()) {
		case F::L:
			add(m - n, F::L);
			if (zero_sum) {
				out.central = c / 12 * (m * m * m - m);
			}
			break;
		case F::J:
			add(-n, F::J);
			break;
		case F::Gplus:
		case F::Gminus:
			add(m / 2 - n, b.family());
			break;
		}
		break;
	case F::J:
		if (b.family() == F::J) {
			if (zero_sum) {
				out.central = c / 3 * m;
			}
		} else {
			add(Rational(b.family() == F::Gplus ? 1 : -1), b.family());
		}
		break;
	case F::Gplus:
		if (b.family() == F::Gminus) {
			add(Rational(2), F::L);
			add(m - n, F::J);
			if (zero_sum) {
				out.central = c / 3 * (m * m - Rational(Integer(1), Integer(4)));
			}
		}
		break;
	case F::Gminus:
		break;
	}
	return out;
}

// ---------------------------------------------------------------------------
// PBW monomials
// ---------------------------------------------------------------------------

/// Canonically ordered product of creation modes applied to the vacuum.
using PBWMonomial = std::vector<Mode>;

inline bool is_canonical(const PBWMonomial& m)
{
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (!m[i].is_creation()) {
			return false;
		}
		if (i > 0) {
			if (m[i] < m[i - 1]) {
				return false;
			}
			if (m[i] == m[i - 1] && m[i].fermionic()) {
				return false;
			}
		}
	}
	return true;
}

inline Rational monomial_level(const PBWMonomial& m)
{
	Rational total(0);
	for (const Mode& x : m) {
		total += x.level();
	}
	return total;
}

inline int monomial_charge(const PBWMonomial& m)
{
	int total = 0;
	for (const Mode& x : m) {
		total += x.charge();
	}
	return total;
}

namespace detail {

// Creation modes of level <= max_twice/2, in canonical order.
inline std::vector<Mode> creation_modes(std::int32_t max_twice)
{
	std::vector<Mode> out;
	for (std::int32_t t = max_twice; t >= 4; --t) {
		if (t % 2 == 0) {
			out.push_back(Mode(Family::L, -t));
		}
	}
	for (std::int32_t t = max_twice; t >= 2; --t) {
		if (t % 2 == 0) {
			out.push_back(Mode(Family::J, -t));
		}
	}
	for (Family f : {Family::Gplus, Family::Gminus}) {
		for (std::int32_t t = max_twice; t >= 3; --t) {
			if (t % 2 != 0) {
				out.push_back(Mode(f, -t));
			}
		}
	}
	return out;
}

inline void enumerate_monomials(const std::vector<Mode>& modes, std::size_t from, std::int32_t remaining,
	PBWMonomial& current, std::vector<PBWMonomial>& out)
{
	if (remaining == 0) {
		out.push_back(current);
		return;
	}
	for (std::size_t i = from; i < modes.size(); ++i) {
		const std::int32_t cost = -modes[i].twice_index();
		if (cost > remaining) {
			continue;
		}
		current.push_back(modes[i]);
		// bosons may repeat, fermions may not
		enumerate_monomials(modes, modes[i].fermionic() ? i + 1 : i, remaining - cost, current, out);
		current.pop_back();
	}
}

inline std::int32_t twice_level(const Rational& level)
{
	const Rational twice = level * 2;
	if (level < 0 || !is_integer(twice)) {
		throw DomainError("level must be a nonnegative half-integer, got " + to_pretty(level));
	}
	return static_cast<std::int32_t>(to_int64(numerator(twice)));
}

} // namespace detail

/// All canonical monomials of the given level (any charge), lexicographic
/// in the canonical mode order.
inline std::vector<PBWMonomial> pbw_basis(const Rational& level)
{
	const std::int32_t t = detail::twice_level(level);
	std::vector<PBWMonomial> out;
	PBWMonomial current;
	detail::enumerate_monomials(detail::creation_modes(t), 0, t, current, out);
	std::sort(out.begin(), out.end());
	return out;
}

inline std::vector<PBWMonomial> pbw_basis(const Rational& level, int charge)
{
	std::vector<PBWMonomial> out;
	for (PBWMonomial& m : pbw_basis(level)) {
		if (monomial_charge(m) == charge) {
			out.push_back(std::move(m));
		}
	}
	return out;
}

/// Charges that occur among the monomials at this level, ascending.
inline std::vector<int> pbw_charges(const Rational& level)
{
	std::vector<int> charges;
	for (const PBWMonomial& m : pbw_basis(level)) {
		charges.push_back(monomial_charge(m));
	}
	std::sort(charges.begin(), charges.end());
	charges.erase(std::unique(charges.begin(), charges.end()), charges.end());
	return charges;
}

} // namespace n2char

#endif // N2CHAR_MODES_HPP
