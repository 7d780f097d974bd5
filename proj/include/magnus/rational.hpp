#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace magnus {

/// Exact rational number backed by GMP. Always held in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) == 1.
class Rational {
public:
	Rational() { mpq_init(q_); }

	Rational(long n)
	{
		mpq_init(q_);
		mpq_set_si(q_, n, 1);
	}

	Rational(int n) : Rational(static_cast<long>(n)) {}

	Rational(long num, long den);

	/// Parse decimal strings, e.g. ("-1", "6"). The pair is reduced.
	static Rational from_strings(const std::string &num, const std::string &den);

	Rational(const Rational &other)
	{
		mpq_init(q_);
		mpq_set(q_, other.q_);
	}

	Rational(Rational &&other) noexcept
	{
		mpq_init(q_);
		mpq_swap(q_, other.q_);
	}

	Rational &operator=(const Rational &other)
	{
		if (this != &other)
			mpq_set(q_, other.q_);
		return *this;
	}

	Rational &operator=(Rational &&other) noexcept
	{
		mpq_swap(q_, other.q_);
		return *this;
	}

	~Rational() { mpq_clear(q_); }

	Rational &operator+=(const Rational &o)
	{
		mpq_add(q_, q_, o.q_);
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		mpq_sub(q_, q_, o.q_);
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		mpq_mul(q_, q_, o.q_);
		return *this;
	}
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

	Rational operator-() const
	{
		Rational r;
		mpq_neg(r.q_, q_);
		return r;
	}

	bool is_zero() const { return mpq_sgn(q_) == 0; }
	int sign() const { return mpq_sgn(q_); }

	Rational abs() const
	{
		Rational r;
		mpq_abs(r.q_, q_);
		return r;
	}

	double to_double() const { return mpq_get_d(q_); }

	std::string num_string() const;
	std::string den_string() const;

	/// "p/q", or just "p" when the denominator is 1.
	std::string str() const;

	friend bool operator==(const Rational &a, const Rational &b)
	{
		return mpq_equal(a.q_, b.q_) != 0;
	}

	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = mpq_cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		             : c > 0 ? std::strong_ordering::greater
		                     : std::strong_ordering::equal;
	}

private:
	mpq_t q_;
};

/// n! as an exact rational.
Rational factorial(unsigned n);

/// Binomial coefficient C(n, k) as an exact rational; 0 when k > n.
Rational binomial(unsigned n, unsigned k);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace magnus
