#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace coinv {

// Exact scalars. Everything in the library is exact; nothing is ever rounded.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Canonical invariant-factor chain d_1 | d_2 | ... with every d_k > 1.
using InvariantFactors = std::vector<Integer>;

bool is_integral(const Rational& q);
Integer floor_of(const Rational& q);
// q - floor(q), always in [0, 1).
Rational fractional_part(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
// Representative of a modulo m in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const InvariantFactors& factors);  // "[2,2]"

// Parses "12", "-3", "1/2", "-7/4". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace coinv
