#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subset_currents {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned n, unsigned k);

}  // namespace subset_currents
