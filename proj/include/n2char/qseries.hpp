#ifndef N2CHAR_QSERIES_HPP
#define N2CHAR_QSERIES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "n2char/errors.hpp"
#include "n2char/rational.hpp"

namespace n2char {

/// Sparse formal series in q with exponents on the lattice (1/D)Z and exact
/// rational coefficients.
///
/// A term k -> a stands for a * q^(k/D). A series is either exact (no
/// truncation) or truncated at an exclusive order: exponents >= order are
/// unknown, and binary operations propagate the smaller order. The
/// constructor keeps three invariants: D is a multiple of the order's
/// denominator, no coefficient is zero, and no exponent reaches the order.
class QSeries
{
public:
	using Terms = std::map<std::int64_t, Rational>;

	QSeries() = default;

	QSeries(std::int64_t denom, Terms terms, std::optional<Rational> order = std::nullopt)
		: denom_(denom), order_(std::move(order)), terms_(std::move(terms))
	{
		if (denom_ <= 0) {
			throw DomainError("series denominator must be positive");
		}
		if (order_) {
			const std::int64_t od = to_int64(denominator(*order_));
			const std::int64_t lcm = std::lcm(denom_, od);
			if (lcm != denom_) {
				rebase_in_place(lcm);
			}
		}
		prune();
	}

	static QSeries zero(std::optional<Rational> order = std::nullopt)
	{
		return QSeries(1, {}, std::move(order));
	}

	static QSeries constant(const Rational& value, std::optional<Rational> order = std::nullopt)
	{
		return QSeries(1, {{0, value}}, std::move(order));
	}

	/// value * q^exponent
	static QSeries monomial(const Rational& value, const Rational& exponent,
		std::optional<Rational> order = std::nullopt)
	{
		const std::int64_t den = to_int64(denominator(exponent));
		return QSeries(den, {{to_int64(numerator(exponent)), value}}, std::move(order));
	}

	/// Builds from (exponent, coefficient) pairs given as rationals.
	static QSeries from_pairs(const std::vector<std::pair<Rational, Rational>>& pairs,
		std::optional<Rational> order = std::nullopt)
	{
		QSeries out = zero(std::move(order));
		for (const auto& [e, v] : pairs) {
			out = out + monomial(v, e);
		}
		return out;
	}

	std::int64_t denom() const { return denom_; }
	const std::optional<Rational>& order() const { return order_; }
	bool is_exact() const { return !order_.has_value(); }
	const Terms& terms() const { return terms_; }
	bool empty() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	Rational exponent(std::int64_t k) const { return Rational(Integer(k), Integer(denom_)); }

	std::optional<Rational> leading_exponent() const
	{
		if (terms_.empty()) {
			return std::nullopt;
		}
		return exponent(terms_.begin()->first);
	}

	/// Coefficient of q^e; zero if absent. Throws TruncationError if e >= order.
	Rational coeff(const Rational& e) const
	{
		if (order_ && e >= *order_) {
			throw TruncationError("coefficient of q^" + to_pretty(e) + " requested at or beyond order " +
				to_pretty(*order_));
		}
		const Rational scaled = e * denom_;
		if (!is_integer(scaled)) {
			return Rational(0);
		}
		const auto it = terms_.find(to_int64(numerator(scaled)));
		return it == terms_.end() ? Rational(0) : it->second;
	}

	/// Same series on the finer lattice (1/denom)Z; denom must be a multiple of denom().
	QSeries rebased(std::int64_t denom) const
	{
		QSeries out = *this;
		out.rebase_in_place(denom);
		return out;
	}

	/// Drops everything at or above new_order; new_order may not exceed the current order.
	QSeries truncated(const Rational& new_order) const
	{
		if (order_ && new_order > *order_) {
			throw TruncationError("cannot extend truncation order from " + to_pretty(*order_) + " to " +
				to_pretty(new_order));
		}
		return QSeries(denom_, terms_, new_order);
	}

	/// Multiplies by q^by; the order moves along with the terms.
	QSeries shifted(const Rational& by) const
	{
		const std::int64_t lcm = std::lcm(denom_, to_int64(denominator(by)));
		const QSeries base = rebased(lcm);
		const std::int64_t step = to_int64(numerator(by * lcm));
		Terms moved;
		for (const auto& [k, v] : base.terms_) {
			moved.emplace_hint(moved.end(), k + step, v);
		}
		std::optional<Rational> order;
		if (order_) {
			order = *order_ + by;
		}
		return QSeries(lcm, std::move(moved), std::move(order));
	}

	QSeries scaled(const Rational& factor) const
	{
		Terms out;
		if (factor != 0) {
			for (const auto& [k, v] : terms_) {
				out.emplace_hint(out.end(), k, v * factor);
			}
		}
		return QSeries(denom_, std::move(out), order_);
	}

	friend QSeries operator+(const QSeries& a, const QSeries& b)
	{
		const std::int64_t lcm = std::lcm(a.denom_, b.denom_);
		QSeries lhs = a.rebased(lcm);
		const QSeries rhs = b.rebased(lcm);
		for (const auto& [k, v] : rhs.terms_) {
			lhs.terms_[k] += v;
		}
		return QSeries(lcm, std::move(lhs.terms_), min_order(a.order_, b.order_));
	}

	friend QSeries operator-(const QSeries& a)
	{
		return a.scaled(Rational(-1));
	}

	friend QSeries operator-(const QSeries& a, const QSeries& b)
	{
		return a + (-b);
	}

	/// Cauchy product truncated at the smaller order. Both factors must have
	/// nonnegative leading exponent, otherwise the truncation bound of the
	/// result would not be min(order(a), order(b)).
	friend QSeries operator*(const QSeries& a, const QSeries& b)
	{
		for (const QSeries* s : {&a, &b}) {
			if (!s->terms_.empty() && s->terms_.begin()->first < 0) {
				throw DomainError("series product requires nonnegative leading exponents");
			}
		}
		const std::int64_t lcm = std::lcm(a.denom_, b.denom_);
		const QSeries lhs = a.rebased(lcm);
		const QSeries rhs = b.rebased(lcm);
		std::optional<Rational> order = min_order(a.order_, b.order_);
		std::optional<std::int64_t> bound;
		if (order) {
			bound = to_int64(ceil(*order * lcm));
		}
		Terms out;
		for (const auto& [i, x] : lhs.terms_) {
			if (bound && i >= *bound) {
				break;
			}
			for (const auto& [j, y] : rhs.terms_) {
				if (bound && i + j >= *bound) {
					break;
				}
				out[i + j] += x * y;
			}
		}
		return QSeries(lcm, std::move(out), std::move(order));
	}

	QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
	QSeries& operator-=(const QSeries& b) { return *this = *this - b; }
	QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

	/// Equal orders and equal coefficients, independent of the lattice used.
	friend bool operator==(const QSeries& a, const QSeries& b)
	{
		if (a.order_ != b.order_) {
			return false;
		}
		const std::int64_t lcm = std::lcm(a.denom_, b.denom_);
		return a.rebased(lcm).terms_ == b.rebased(lcm).terms_;
	}

	/// Human-readable form such as "1 + 2q^(1/2) + q + O(q^2)".
	std::string to_display() const
	{
		std::ostringstream os;
		bool first = true;
		for (const auto& [k, v] : terms_) {
			const Rational e = exponent(k);
			Rational mag = v;
			if (first) {
				if (v < 0) {
					os << "-";
					mag = -v;
				}
			} else {
				os << (v < 0 ? " - " : " + ");
				if (v < 0) {
					mag = -v;
				}
			}
			first = false;
			const bool unit = (mag == 1);
			if (e == 0) {
				os << to_pretty(mag);
				continue;
			}
			if (!unit) {
				os << to_pretty(mag);
			}
			os << "q";
			if (e != 1) {
				os << "^" << (is_integer(e) ? to_pretty(e) : "(" + to_pretty(e) + ")");
			}
		}
		if (order_) {
			os << (first ? "" : " + ") << "O(q^" << (is_integer(*order_) ? to_pretty(*order_) : "(" + to_pretty(*order_) + ")") << ")";
		} else if (first) {
			os << "0";
		}
		return os.str();
	}

private:
	static std::optional<Rational> min_order(const std::optional<Rational>& a, const std::optional<Rational>& b)
	{
		if (!a) {
			return b;
		}
		if (!b) {
			return a;
		}
		return std::min(*a, *b);
	}

	void rebase_in_place(std::int64_t denom)
	{
		if (denom <= 0 || denom % denom_ != 0) {
			throw DomainError("cannot rebase series with denominator " + std::to_string(denom_) + " to " +
				std::to_string(denom));
		}
		const std::int64_t factor = denom / denom_;
		if (factor != 1) {
			Terms moved;
			for (auto& [k, v] : terms_) {
				moved.emplace_hint(moved.end(), k * factor, std::move(v));
			}
			terms_ = std::move(moved);
			denom_ = denom;
		}
	}

	void prune()
	{
		std::optional<std::int64_t> bound;
		if (order_) {
			bound = to_int64(numerator(*order_ * denom_));
		}
		for (auto it = terms_.begin(); it != terms_.end();) {
			if (it->second == 0 || (bound && it->first >= *bound)) {
				it = terms_.erase(it);
			} else {
				++it;
			}
		}
	}

	std::int64_t denom_ = 1;
	std::optional<Rational> order_;
	Terms terms_;
};

inline Rational coefficient(const QSeries& s, const Rational& e)
{
	return s.coeff(e);
}

/// 1/(1 + sign*q^a) = sum_k (-sign)^k q^(k a), truncated at order.
/// sign = +1 expands 1/(1 + q^a), sign = -1 expands 1/(1 - q^a).
inline QSeries geometric_inverse(const Rational& a, int sign, const Rational& order)
{
	if (a <= 0) {
		throw DomainError("geometric expansion needs a positive exponent, got " + to_pretty(a));
	}
	if (sign != 1 && sign != -1) {
		throw DomainError("geometric expansion sign must be +1 or -1");
	}
	const std::int64_t lcm = std::lcm(to_int64(denominator(a)), to_int64(denominator(order)));
	const std::int64_t step = to_int64(numerator(a * lcm));
	const Integer bound = numerator(order * lcm);
	QSeries::Terms terms;
	Rational value(1);
	for (std::int64_t k = 0; Integer(k) < bound; k += step) {
		terms.emplace_hint(terms.end(), k, value);
		if (sign == 1) {
			value = -value;
		}
	}
	return QSeries(lcm, std::move(terms), order);
}

/// prod_{i>=1} (1 - q^i)^(-1), i.e. q^(1/24)/eta(q).
inline QSeries inverse_euler(const Rational& order)
{
	QSeries out = QSeries::constant(Rational(1), order);
	for (std::int64_t i = 1; Rational(i) < order; ++i) {
		out *= geometric_inverse(Rational(i), -1, order);
	}
	return out;
}

/// prod_{i>=1} (1 - q^i)^(-3) = q^(1/8)/eta(q)^3, the generating function of
/// three-coloured partitions.
inline QSeries inverse_euler_cubed(const Rational& order)
{
	QSeries out = QSeries::constant(Rational(1), order);
	for (std::int64_t i = 1; Rational(i) < order; ++i) {
		const QSeries factor = geometric_inverse(Rational(i), -1, order);
		out *= factor;
		out *= factor;
		out *= factor;
	}
	return out;
}

/// theta_3(1;q) = prod_{i>=1} (1 + q^(i-1/2))^2 (1 - q^i), truncated at order.
inline QSeries theta3(const Rational& order)
{
	QSeries out = QSeries::constant(Rational(1), order);
	const Rational half(Integer(1), Integer(2));
	for (std::int64_t i = 1; Rational(i) - half < order; ++i) {
		const QSeries plus = QSeries::constant(Rational(1)) + QSeries::monomial(Rational(1), Rational(i) - half);
		out *= plus;
		out *= plus;
		if (Rational(i) < order) {
			out *= QSeries::constant(Rational(1)) - QSeries::monomial(Rational(1), Rational(i));
		}
	}
	return out;
}

} // namespace n2char

#endif // N2CHAR_QSERIES_HPP
