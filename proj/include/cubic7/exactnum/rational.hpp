#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cubic7 {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

bool is_integral(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// floor(sqrt(n)) for n >= 0
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// Prime factors with multiplicity, |n| >= 1.
std::vector<long> factor(long n);
// Sign-preserving squarefree kernel: -28 -> -7.
long squarefree_part(long n);

}  // namespace cubic7
