#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagcalc {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Accepts `p`, `-p`, `p/q`; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// True iff q = r^2 for some rational r.
bool is_rational_square(const Rational& q);

/// Requires is_rational_square(q).
Rational rational_sqrt(const Rational& q);

}  // namespace flagcalc
