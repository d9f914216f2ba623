#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace epikit {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Canonical form: reduced, positive denominator; "p/q", or just "p" when q == 1.
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q", optionally signed. Throws InputError on malformed input.
Rat rat_from_string(std::string_view s);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

} // namespace epikit
