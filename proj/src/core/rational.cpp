#include "rational.hpp"

#include "errors.hpp"

#include <cctype>

namespace flagcalc {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool slash = false;
  bool digits = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    const char c = text[j];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!digits) throw ParseError("malformed rational literal '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) return true;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& q) {
  if (!is_rational_square(q)) throw InvalidInput("not a rational square: " + q.get_str());
  Integer num = sqrt(q.get_num());
  Integer den = sqrt(q.get_den());
  return Rational(num, den);
}

}  // namespace flagcalc
