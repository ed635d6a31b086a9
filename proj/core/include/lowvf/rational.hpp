#pragma once

#include <gmpxx.h>

#include <string>

namespace lowvf {

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) under arithmetic; use rational() when building from raw
// numerator/denominator pairs.
using Rational = mpq_class;

Rational rational(long num, long den = 1);
Rational rational_from_string(const std::string& text);

// Canonical rendering: "3/2", "-7", "0".
std::string to_string(const Rational& q);

}  // namespace lowvf
