#ifndef N2CHAR_NSMODULES_HPP
#define N2CHAR_NSMODULES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "n2char/errors.hpp"
#include "n2char/qseries.hpp"
#include "n2char/rational.hpp"

namespace n2char {

enum class Sector { NS, R };

/// Irreducible module C_{p;r} of the minimal quotient M_d, with
/// 1 <= r <= d-1 and -r <= p <= r-1. It lies in the NS sector when p+r is odd.
class ModuleLabel
{
public:
	ModuleLabel(int d, int p, int r) : d_(d), p_(p), r_(r)
	{
		if (d < 2) {
			throw DomainError("module label needs d >= 2, got d=" + std::to_string(d));
		}
		if (r < 1 || r > d - 1) {
			throw DomainError("module label needs 1 <= r <= d-1, got " + to_string());
		}
		if (p < -r || p > r - 1) {
			throw DomainError("module label needs -r <= p <= r-1, got " + to_string());
		}
	}

	int d() const { return d_; }
	int p() const { return p_; }
	int r() const { return r_; }
	Sector sector() const { return ((p_ + r_) % 2 != 0) ? Sector::NS : Sector::R; }

	std::string to_string() const
	{
		return "C[d=" + std::to_string(d_) + ",p=" + std::to_string(p_) + ",r=" + std::to_string(r_) + "]";
	}

	friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
	friend auto operator<=>(const ModuleLabel&, const ModuleLabel&) = default;

private:
	int d_;
	int p_;
	int r_;
};

struct WeightData
{
	Rational conformal_weight;
	Rational j_weight;
};

namespace detail {

// 1 + (-1)^n
inline int one_plus_sign(int n)
{
	return (n % 2 == 0) ? 2 : 0;
}

} // namespace detail

/// Delta_{p,r} = (r^2 - p^2 - 1)/(4d) + (1 + (-1)^(r+p))/16
inline Rational conformal_weight(const ModuleLabel& m)
{
	const Integer r(m.r());
	const Integer p(m.p());
	return Rational(r * r - p * p - 1, Integer(4 * m.d())) +
		Rational(Integer(detail::one_plus_sign(m.r() + m.p())), Integer(16));
}

/// j_{p,r} = p/d + (1 + (-1)^(p+r))/4
inline Rational j_weight(const ModuleLabel& m)
{
	return Rational(Integer(m.p()), Integer(m.d())) +
		Rational(Integer(detail::one_plus_sign(m.p() + m.r())), Integer(4));
}

inline WeightData weights(const ModuleLabel& m)
{
	return {conformal_weight(m), j_weight(m)};
}

/// NS labels (d, 0, r) with integral conformal weight, i.e. r odd and
/// 4d | r^2 - 1. These are the only candidates for summands of a module
/// whose J-weights and conformal weights are integers.
inline std::vector<ModuleLabel> allowed_integer_modules(int d)
{
	if (d < 2) {
		throw DomainError("allowed_integer_modules needs d >= 2");
	}
	std::vector<ModuleLabel> out;
	for (int r = 1; r <= d - 1; r += 2) {
		const std::int64_t rr = static_cast<std::int64_t>(r) * r - 1;
		if (rr % (4 * static_cast<std::int64_t>(d)) == 0) {
			out.emplace_back(d, 0, r);
		}
	}
	return out;
}

namespace detail {

// q^(j(dj+r)) (1/(1+q^a) - 1/(1+q^-a)) with a = (2dj+r)/2, rewritten so
// only nonnegative powers appear:
//   a > 0:  q^e (1 - q^a)/(1 + q^a)
//   a < 0:  q^e (q^|a| - 1)/(1 + q^|a|)
// a = 0 is impossible for odd r.
inline QSeries bracket_term(int d, int r, std::int64_t j, const Rational& order)
{
	const Rational a(Integer(2 * d * j + r), Integer(2));
	const Rational e(Integer(j) * (Integer(d) * j + r));
	if (e >= order) {
		return QSeries::zero(order);
	}
	const Rational b = a > 0 ? a : -a;
	const QSeries one = QSeries::constant(Rational(1));
	const QSeries qb = QSeries::monomial(Rational(1), b);
	const QSeries numerator = a > 0 ? one - qb : qb - one;
	const Rational inner = order - e;
	const QSeries body = numerator * geometric_inverse(b, +1, inner);
	return body.shifted(e).truncated(order);
}

inline QSeries bracket_window(int d, int r, std::int64_t window, const Rational& order)
{
	QSeries out = QSeries::zero(order);
	for (std::int64_t j = -window; j <= window; ++j) {
		out += bracket_term(d, r, j, order);
	}
	return out;
}

} // namespace detail

/// Sum over j of the theta-quotient bracket in the NS character of C_{0;r}.
/// The j window starts at ceil(sqrt(order/d)) + ceil(r/d) + 2 and doubles
/// until two successive windows agree below order.
inline QSeries character_bracket_sum(int d, int r, const Rational& order)
{
	Integer start = 0;
	if (order > 0) {
		const Rational ratio = order / d;
		// ceil(sqrt(ratio)) for a nonnegative rational
		Integer s = 0;
		while (Rational(s * s) < ratio) {
			++s;
		}
		start = s;
	}
	std::int64_t window = to_int64(start + ceil(Rational(Integer(r), Integer(d))) + 2);
	QSeries previous = detail::bracket_window(d, r, window, order);
	for (int doubling = 0; doubling < 6; ++doubling) {
		window *= 2;
		QSeries next = detail::bracket_window(d, r, window, order);
		if (next == previous) {
			return next;
		}
		previous = std::move(next);
	}
	throw StabilizationFailure("character sum for d=" + std::to_string(d) + ", r=" + std::to_string(r) +
		" did not stabilise after 6 doublings");
}

/// NS character tr_{C_r} q^{L_0} of C_r = C_{0;r}, truncated at order:
///   q^Delta prod(1-q^i)^(-3) theta_3(1;q) sum_j (...) q^(j(dj+r)).
/// The q^(1/8) of the prefactor cancels against eta^3.
inline QSeries character_C(int d, int r, const Rational& order)
{
	const ModuleLabel label(d, 0, r);
	if (label.sector() != Sector::NS) {
		throw DomainError("character_C needs an NS label (odd r), got " + label.to_string());
	}
	const Rational delta = conformal_weight(label);
	if (order <= delta) {
		return QSeries::zero(order);
	}
	const Rational inner = order - delta;
	const QSeries body = character_bracket_sum(d, r, inner) * theta3(inner) * inverse_euler_cubed(inner);
	return body.shifted(delta);
}

/// Character of M_d as a module over itself (r = 1).
inline QSeries vacuum_character(int d, const Rational& order)
{
	return character_C(d, 1, order);
}

} // namespace n2char

#endif // N2CHAR_NSMODULES_HPP
