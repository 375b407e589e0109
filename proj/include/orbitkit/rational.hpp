#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace orbitkit {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign, decimal digits only) into a reduced
/// rational. Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q"; integers are written without a denominator ("3", "-1").
std::string to_string(const Rational& q);

Vec parse_rational_list(std::string_view comma_separated);

bool is_integer(const Rational& q);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

std::string to_string(const Vec& v);

}  // namespace orbitkit
