#ifndef N2CHAR_SHAPOVALOV_HPP
#define N2CHAR_SHAPOVALOV_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "n2char/embeddings.hpp"
#include "n2char/errors.hpp"
#include "n2char/exact_rank.hpp"
#include "n2char/modes.hpp"
#include "n2char/rational.hpp"
#include "n2char/straighten.hpp"

namespace n2char {

/// Levels above this are refused unless the caller raises the cap; the PBW
/// basis grows quickly.
struct LevelCap
{
	Rational max_level{6};

	void check(const Rational& level) const
	{
		if (level > max_level) {
			throw DomainError("level " + to_pretty(level) + " exceeds the cap " + to_pretty(max_level) +
				" (raise it explicitly to go further)");
		}
	}
};

struct GramBlock
{
	Rational level;
	int charge = 0;
	Rational central_charge;
	std::vector<PBWMonomial> basis;
	/// matrix[i][j] = <basis_i, basis_j>
	RationalMatrix matrix;

	std::size_t size() const { return basis.size(); }
	std::size_t rank() const { return exact_rank(matrix); }
	std::size_t radical_dimension() const { return size() - rank(); }
};

inline GramBlock gram_block(VacuumModule& module, const Rational& level, int charge, const LevelCap& cap = {})
{
	cap.check(level);
	GramBlock block;
	block.level = level;
	block.charge = charge;
	block.central_charge = module.central_charge();
	block.basis = pbw_basis(level, charge);
	const std::size_t n = block.basis.size();
	block.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) {
			block.matrix[i][j] = module.pair(block.basis[i], block.basis[j]);
		}
	}
	return block;
}

inline GramBlock gram_block(const Rational& level, int charge, const Rational& c, const LevelCap& cap = {})
{
	VacuumModule module(c);
	return gram_block(module, level, charge, cap);
}

struct GradedDimension
{
	Rational level;
	std::size_t pbw_count = 0;
	std::size_t radical = 0;

	std::size_t quotient() const { return pbw_count - radical; }
};

/// dim of M_d at a level: PBW count minus the radical of the Shapovalov form
/// at c_d, summed over J-charge blocks.
inline GradedDimension graded_dimension(VacuumModule& module, const Rational& level, const LevelCap& cap = {})
{
	cap.check(level);
	GradedDimension out;
	out.level = level;
	for (int charge : pbw_charges(level)) {
		const GramBlock block = gram_block(module, level, charge, cap);
		out.pbw_count += block.size();
		out.radical += block.radical_dimension();
	}
	return out;
}

inline std::size_t quotient_graded_dim(int d, const Rational& level, const LevelCap& cap = {})
{
	VacuumModule module(central_charge(d));
	return graded_dimension(module, level, cap).quotient();
}

/// Graded dimensions at every level 0, 1/2, ..., max_level sharing one module cache.
inline std::vector<GradedDimension> quotient_graded_dims(int d, const Rational& max_level, const LevelCap& cap = {})
{
	cap.check(max_level);
	VacuumModule module(central_charge(d));
	std::vector<GradedDimension> out;
	const Rational half(Integer(1), Integer(2));
	for (Rational level(0); level <= max_level; level += half) {
		out.push_back(graded_dimension(module, level, cap));
	}
	return out;
}

// ---------------------------------------------------------------------------
// Diagonal embedding X -> X (x) 1 + 1 (x) X
// ---------------------------------------------------------------------------

/// a (x) b in V_{d2} (x) V_{d3}, stored as (AΩ, BΩ) with a (x) b = (A (x) 1)(1 (x) B) Ω (x) Ω.
using TensorState = std::map<std::pair<PBWMonomial, PBWMonomial>, Rational>;

/// Delta(word) (Ω (x) Ω), where Delta sends each mode X to X (x) 1 + 1 (x) X.
/// A letter sent to the right factor that sits left of a left-factor
/// letter is moved past it, contributing a sign when both are odd.
inline TensorState diagonal_image(const std::vector<Mode>& word, VacuumModule& left, VacuumModule& right)
{
	TensorState out;
	const std::size_t n = word.size();
	if (n >= 31) {
		throw DomainError("word too long for diagonal expansion");
	}
	for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
		// bit set: letter goes to the left factor
		std::vector<Mode> lw;
		std::vector<Mode> rw;
		int odd_right_seen = 0;
		int sign = 1;
		for (std::size_t i = 0; i < n; ++i) {
			if (mask & (1u << i)) {
				if (word[i].fermionic() && (odd_right_seen % 2 != 0)) {
					sign = -sign;
				}
				lw.push_back(word[i]);
			} else {
				if (word[i].fermionic()) {
					++odd_right_seen;
				}
				rw.push_back(word[i]);
			}
		}
		const StateVector a = left.act_on_vacuum(ModeWord(lw));
		if (a.empty()) {
			continue;
		}
		const StateVector b = right.act_on_vacuum(ModeWord(rw));
		for (const auto& [ma, va] : a) {
			for (const auto& [mb, vb] : b) {
				const Rational v = va * vb * sign;
				auto [it, inserted] = out.try_emplace(std::make_pair(ma, mb), v);
				if (!inserted) {
					it->second += v;
					if (it->second == 0) {
						out.erase(it);
					}
				}
			}
		}
	}
	return out;
}

/// <a (x) b, a' (x) b'> = <a, a'> <b, b'>, extended bilinearly.
inline Rational tensor_pair(const TensorState& x, const TensorState& y, VacuumModule& left, VacuumModule& right)
{
	Rational total(0);
	for (const auto& [kx, vx] : x) {
		for (const auto& [ky, vy] : y) {
			const Rational l = left.pair(kx.first, ky.first);
			if (l == 0) {
				continue;
			}
			total += vx * vy * l * right.pair(kx.second, ky.second);
		}
	}
	return total;
}

struct IsometryCounterexample
{
	PBWMonomial x;
	PBWMonomial y;
	Rational single;
	Rational tensor;
};

struct IsometryReport
{
	Rational c1;
	Rational c2;
	Rational c3;
	Rational max_level;
	std::size_t words = 0;
	std::size_t pairs_checked = 0;
	std::optional<IsometryCounterexample> counterexample;

	bool passed() const { return !counterexample.has_value(); }
};

/// Checks <Delta(x)Ω, Delta(y)Ω> at (c2, c3) against <xΩ, yΩ> at c1 for all
/// PBW monomials x, y of level <= max_level. The central charges are free
/// parameters here so that mismatched charges can be probed.
inline IsometryReport isometry_check(const Rational& c1, const Rational& c2, const Rational& c3,
	const Rational& max_level, const LevelCap& cap = {})
{
	cap.check(max_level);
	IsometryReport report;
	report.c1 = c1;
	report.c2 = c2;
	report.c3 = c3;
	report.max_level = max_level;

	VacuumModule single(c1);
	VacuumModule left(c2);
	VacuumModule right(c3);

	std::vector<PBWMonomial> words;
	const Rational half(Integer(1), Integer(2));
	for (Rational level(0); level <= max_level; level += half) {
		for (PBWMonomial& m : pbw_basis(level)) {
			words.push_back(std::move(m));
		}
	}
	report.words = words.size();

	std::vector<TensorState> images;
	images.reserve(words.size());
	for (const PBWMonomial& w : words) {
		images.push_back(diagonal_image(w, left, right));
	}

	for (std::size_t i = 0; i < words.size(); ++i) {
		for (std::size_t j = 0; j < words.size(); ++j) {
			++report.pairs_checked;
			const Rational lhs = single.pair(words[i], words[j]);
			const Rational rhs = tensor_pair(images[i], images[j], left, right);
			if (lhs != rhs) {
				report.counterexample = IsometryCounterexample{words[i], words[j], lhs, rhs};
				return report;
			}
		}
	}
	return report;
}

inline IsometryReport isometry_check(const EmbeddingCase& embedding, const Rational& max_level,
	const LevelCap& cap = {})
{
	return isometry_check(central_charge(embedding.d1()), central_charge(embedding.d2()),
		central_charge(embedding.d3()), max_level, cap);
}

} // namespace n2char

#endif // N2CHAR_SHAPOVALOV_HPP
