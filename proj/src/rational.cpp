#include "magnus/rational.hpp"

#include <memory>
#include <ostream>
#include <stdexcept>

namespace magnus {

namespace {

std::string mpz_to_string(const mpz_t z)
{
	// mpz_get_str needs base-10 digits + sign + NUL
	size_t len = mpz_sizeinbase(z, 10) + 2;
	std::unique_ptr<char[]> buf(new char[len]);
	mpz_get_str(buf.get(), 10, z);
	return std::string(buf.get());
}

} // namespace

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("Rational: zero denominator");
	mpq_init(q_);
	if (den < 0) {
		num = -num;
		den = -den;
	}
	mpq_set_si(q_, num, static_cast<unsigned long>(den));
	mpq_canonicalize(q_);
}

Rational Rational::from_strings(const std::string &num, const std::string &den)
{
	Rational r;
	if (mpz_set_str(mpq_numref(r.q_), num.c_str(), 10) != 0)
		throw std::invalid_argument("Rational: bad numerator string '" + num + "'");
	if (mpz_set_str(mpq_denref(r.q_), den.c_str(), 10) != 0)
		throw std::invalid_argument("Rational: bad denominator string '" + den + "'");
	if (mpz_sgn(mpq_denref(r.q_)) == 0)
		throw std::invalid_argument("Rational: zero denominator");
	if (mpz_sgn(mpq_denref(r.q_)) < 0) {
		mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
		mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
	}
	mpq_canonicalize(r.q_);
	return r;
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::invalid_argument("Rational: division by zero");
	mpq_div(q_, q_, o.q_);
	return *this;
}

std::string Rational::num_string() const { return mpz_to_string(mpq_numref(q_)); }

std::string Rational::den_string() const { return mpz_to_string(mpq_denref(q_)); }

std::string Rational::str() const
{
	if (mpz_cmp_ui(mpq_denref(q_), 1) == 0)
		return num_string();
	return num_string() + "/" + den_string();
}

Rational factorial(unsigned n)
{
	mpz_t f;
	mpz_init(f);
	mpz_fac_ui(f, n);
	Rational out = Rational::from_strings(mpz_to_string(f), "1");
	mpz_clear(f);
	return out;
}

Rational binomial(unsigned n, unsigned k)
{
	if (k > n)
		return Rational(0);
	mpz_t b;
	mpz_init(b);
	mpz_bin_uiui(b, n, k);
	Rational out = Rational::from_strings(mpz_to_string(b), "1");
	mpz_clear(b);
	return out;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace magnus
