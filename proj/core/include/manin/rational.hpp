#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace manin {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses the dataset rational syntax: optional sign, decimal integer,
// optionally followed by "/" and a positive decimal integer. No whitespace.
// The result is reduced. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" in
// lowest terms. parse_rational(format_rational(q)) == q.
std::string format_rational(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace manin
