#ifndef N2CHAR_STRAIGHTEN_HPP
#define N2CHAR_STRAIGHTEN_HPP

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "n2char/modes.hpp"
#include "n2char/rational.hpp"

namespace n2char {

/// Vector in the universal vacuum module: PBW monomial -> coefficient.
/// The empty monomial is the vacuum itself.
using StateVector = std::map<PBWMonomial, Rational>;

inline void accumulate(StateVector& into, const PBWMonomial& m, const Rational& value)
{
	if (value == 0) {
		return;
	}
	auto [it, inserted] = into.try_emplace(m, value);
	if (!inserted) {
		it->second += value;
		if (it->second == 0) {
			into.erase(it);
		}
	}
}

inline void accumulate(StateVector& into, const StateVector& from, const Rational& scale)
{
	if (scale == 0) {
		return;
	}
	for (const auto& [m, v] : from) {
		accumulate(into, m, v * scale);
	}
}

/// Coefficient of the vacuum, i.e. the projection onto the span of 1.
inline Rational vacuum_component(const StateVector& v)
{
	const auto it = v.find(PBWMonomial{});
	return it == v.end() ? Rational(0) : it->second;
}

/// The universal NS vacuum module at central charge c. Applies modes to PBW
/// monomials by commuting them into canonical position, memoising each
/// (mode, monomial) result. Not thread-safe; use one instance per thread.
class VacuumModule
{
public:
	explicit VacuumModule(Rational c) : c_(std::move(c)) {}

	const Rational& central_charge() const { return c_; }

	/// mode . (monomial . vacuum), as a combination of PBW monomials.
	const StateVector& apply(const Mode& mode, const PBWMonomial& monomial)
	{
		const auto key = std::make_pair(mode, monomial);
		if (const auto it = cache_.find(key); it != cache_.end()) {
			return it->second;
		}
		StateVector result = compute(mode, monomial);
		return cache_.emplace(key, std::move(result)).first->second;
	}

	StateVector apply(const Mode& mode, const StateVector& state)
	{
		StateVector out;
		for (const auto& [m, v] : state) {
			accumulate(out, apply(mode, m), v);
		}
		return out;
	}

	/// word . state; the rightmost letter acts first.
	StateVector apply(const ModeWord& word, StateVector state)
	{
		for (auto it = word.modes.rbegin(); it != word.modes.rend(); ++it) {
			if (state.empty()) {
				break;
			}
			state = apply(*it, state);
		}
		if (word.coefficient != 1) {
			for (auto& [m, v] : state) {
				v *= word.coefficient;
			}
			if (word.coefficient == 0) {
				state.clear();
			}
		}
		return state;
	}

	StateVector act_on_vacuum(const ModeWord& word)
	{
		return apply(word, StateVector{{PBWMonomial{}, Rational(1)}});
	}

	/// <x vac, y vac> = pi(x^dagger y)
	Rational pair(const ModeWord& x, const ModeWord& y)
	{
		return vacuum_component(act_on_vacuum(dagger(x) * y));
	}

	/// Pairing of two PBW monomials.
	Rational pair(const PBWMonomial& x, const PBWMonomial& y)
	{
		return vacuum_component(apply(dagger(ModeWord(x)), StateVector{{y, Rational(1)}}));
	}

	std::size_t cache_size() const { return cache_.size(); }

private:
	StateVector compute(const Mode& mode, const PBWMonomial& monomial)
	{
		StateVector out;
		if (monomial.empty()) {
			if (!mode.annihilates_vacuum()) {
				out.emplace(PBWMonomial{mode}, Rational(1));
			}
			return out;
		}
		const Mode& head = monomial.front();
		if (mode.is_creation() && mode <= head) {
			if (mode == head && mode.fermionic()) {
				// (G_r)^2 = 0
				return out;
			}
			PBWMonomial prepended;
			prepended.reserve(monomial.size() + 1);
			prepended.push_back(mode);
			prepended.insert(prepended.end(), monomial.begin(), monomial.end());
			out.emplace(std::move(prepended), Rational(1));
			return out;
		}

		// mode . head . rest = [mode, head} . rest +- head . (mode . rest)
		const PBWMonomial rest(monomial.begin() + 1, monomial.end());
		const Rational sign = (mode.fermionic() && head.fermionic()) ? Rational(-1) : Rational(1);

		const StateVector moved = apply(mode, rest);
		accumulate(out, apply(head, moved), sign);

		const BracketTerms br = bracket(mode, head, c_);
		for (const auto& [coeff, m] : br.terms) {
			accumulate(out, apply(m, rest), coeff);
		}
		if (br.central != 0) {
			accumulate(out, rest, br.central);
		}
		return out;
	}

	Rational c_;
	std::map<std::pair<Mode, PBWMonomial>, StateVector> cache_;
};

inline StateVector act_on_vacuum(const ModeWord& word, const Rational& c)
{
	VacuumModule module(c);
	return module.act_on_vacuum(word);
}

inline Rational shapovalov_pair(const ModeWord& x, const ModeWord& y, const Rational& c)
{
	VacuumModule module(c);
	return module.pair(x, y);
}

// ---------------------------------------------------------------------------
// Word rewriting with a selectable rewrite order
// ---------------------------------------------------------------------------

/// Order in which adjacent inversions are resolved by straighten_words.
enum class RewriteOrder { Leftmost, Rightmost, Random };

namespace detail {

// Total order on all modes used by the word rewriter: creation modes in
// canonical order, then every vacuum annihilator.
inline bool rewrite_less(const Mode& a, const Mode& b)
{
	if (a.is_creation() != b.is_creation()) {
		return a.is_creation();
	}
	return a < b;
}

inline bool needs_swap(const Mode& a, const Mode& b)
{
	return rewrite_less(b, a) || (a == b && a.fermionic());
}

} // namespace detail

/// Independent straightening of word . vacuum by term rewriting on whole
/// words. Any adjacent pair out of order is replaced by
///   a b -> +-b a + [a, b}
/// (with G G -> 0), and a word ending in an annihilator is dropped. The
/// order in which pairs are chosen is controlled by `order`; every choice
/// must produce the same normal form.
inline StateVector straighten_words(const ModeWord& word, const Rational& c, RewriteOrder order,
	std::uint64_t seed = 0)
{
	std::mt19937_64 rng(seed);
	std::map<std::vector<Mode>, Rational> pending;
	if (word.coefficient != 0) {
		pending.emplace(word.modes, word.coefficient);
	}
	StateVector done;

	auto push = [&](std::vector<Mode> w, const Rational& v) {
		if (v == 0) {
			return;
		}
		auto [it, inserted] = pending.try_emplace(std::move(w), v);
		if (!inserted) {
			it->second += v;
			if (it->second == 0) {
				pending.erase(it);
			}
		}
	};

	while (!pending.empty()) {
		// Pick a word; the random strategy also picks among pending words.
		auto it = pending.begin();
		if (order == RewriteOrder::Random && pending.size() > 1) {
			std::advance(it, static_cast<std::ptrdiff_t>(rng() % pending.size()));
		} else if (order == RewriteOrder::Rightmost) {
			it = std::prev(pending.end());
		}
		std::vector<Mode> w = it->first;
		const Rational v = it->second;
		pending.erase(it);

		if (!w.empty() && w.back().annihilates_vacuum()) {
			continue;
		}
		std::vector<std::size_t> inversions;
		for (std::size_t i = 0; i + 1 < w.size(); ++i) {
			if (detail::needs_swap(w[i], w[i + 1])) {
				inversions.push_back(i);
			}
		}
		if (inversions.empty()) {
			accumulate(done, w, v);
			continue;
		}
		std::size_t pos = inversions.front();
		if (order == RewriteOrder::Rightmost) {
			pos = inversions.back();
		} else if (order == RewriteOrder::Random) {
			pos = inversions[rng() % inversions.size()];
		}
		const Mode a = w[pos];
		const Mode b = w[pos + 1];
		const bool both_odd = a.fermionic() && b.fermionic();
		if (!(a == b && a.fermionic())) {
			std::vector<Mode> swapped = w;
			std::swap(swapped[pos], swapped[pos + 1]);
			push(std::move(swapped), both_odd ? -v : v);
		}
		const BracketTerms br = bracket(a, b, c);
		if (a == b && a.fermionic()) {
			// G G = 1/2 {G, G} = 0
			continue;
		}
		for (const auto& [coeff, m] : br.terms) {
			std::vector<Mode> replaced(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
			replaced.push_back(m);
			replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
			push(std::move(replaced), v * coeff);
		}
		if (br.central != 0) {
			std::vector<Mode> removed(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
			removed.insert(removed.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
			push(std::move(removed), v * br.central);
		}
	}
	return done;
}

} // namespace n2char

#endif // N2CHAR_STRAIGHTEN_HPP
