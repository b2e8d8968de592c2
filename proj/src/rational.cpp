#include "wrg/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace wrg {

Rational parse_rational(std::string_view text)
{
	std::string s(text);
	if (s.empty()) throw std::invalid_argument("empty rational literal");
	if (s.find('/') != std::string::npos) {
		Rational q;
		if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
		if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
		q.canonicalize();
		return q;
	}

	// decimal with optional exponent, parsed exactly
	long exponent = 0;
	if (auto e = s.find_first_of("eE"); e != std::string::npos) {
		try {
			exponent = std::stol(s.substr(e + 1));
		} catch (const std::exception&) {
			throw std::invalid_argument("bad exponent in literal: " + s);
		}
		s.resize(e);
	}
	bool negative = false;
	if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
		negative = s[0] == '-';
		s.erase(0, 1);
	}
	std::string digits;
	long frac_digits = 0;
	bool seen_point = false;
	for (char ch : s) {
		if (ch == '.') {
			if (seen_point) throw std::invalid_argument("bad decimal literal: " + std::string(text));
			seen_point = true;
		} else if (ch >= '0' && ch <= '9') {
			digits.push_back(ch);
			if (seen_point) ++frac_digits;
		} else {
			throw std::invalid_argument("bad decimal literal: " + std::string(text));
		}
	}
	if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + std::string(text));
	Rational q{Integer(digits, 10)};
	long scale = exponent - frac_digits;
	Integer ten_pow;
	mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
	if (scale < 0)
		q /= ten_pow;
	else
		q *= ten_pow;
	q.canonicalize();
	return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q)
{
	if (q.get_den() == 1) return q.get_num().get_str();
	return q.get_str();
}

Rational fraction(const Integer& num, const Integer& den)
{
	if (den == 0) throw std::invalid_argument("fraction: zero denominator");
	Rational q(num, den);
	q.canonicalize();
	return q;
}

Rational pow(const Rational& base, long exponent)
{
	if (exponent == 0) return Rational(1);
	if (exponent < 0) {
		if (base == 0) throw std::domain_error("zero to a negative power");
		return pow(Rational(1) / base, -exponent);
	}
	Integer num, den;
	auto e = static_cast<unsigned long>(exponent);
	mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
	mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
	Rational out(num, den);
	out.canonicalize();
	return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
	Integer out;
	mpz_bin_uiui(out.get_mpz_t(), n, k);
	return out;
}

Integer factorial(unsigned long n)
{
	Integer out;
	mpz_fac_ui(out.get_mpz_t(), n);
	return out;
}

Integer falling_factorial(unsigned long n, unsigned long k)
{
	if (k > n) return Integer(0);
	Integer out(1);
	for (unsigned long i = 0; i < k; ++i) out *= (n - i);
	return out;
}

double log_of(const Integer& z)
{
	if (z <= 0) throw std::domain_error("log of non-positive integer");
	long exp2 = 0;
	double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
	return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_of(const Rational& q)
{
	if (q <= 0) throw std::domain_error("log of non-positive rational");
	return log_of(Integer(q.get_num())) - log_of(Integer(q.get_den()));
}

} // namespace wrg
