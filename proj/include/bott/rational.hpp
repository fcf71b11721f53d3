#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bott {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p/q", integers and finite decimals ("0.2" -> 1/5, "-1.5e-2").
Rat parse_rational(const std::string& s);
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

Int ceil_of(const Rat& q);
Int floor_of(const Rat& q);
Rat abs(const Rat& q);
int sign(const Rat& q);

}  // namespace bott
