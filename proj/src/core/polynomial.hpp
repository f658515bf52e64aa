#pragma once

// Sparse multivariate polynomials over the rationals, plus the small
// univariate toolkit (gcd, rational roots) the certificate code needs.

#include "rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flagcalc {

/// Exponent vector, one entry per generator.
using Monomial = std::vector<int>;

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Weighted degrees of all terms; -1 for the zero polynomial.
  int max_degree(const std::vector<int>& weights) const;
  bool is_homogeneous(const std::vector<int>& weights) const;

  int degree_in(int var) const;
  /// Coefficient of var^e, as a polynomial not involving var.
  Polynomial coefficient_in(int var, int e) const;

  /// Componentwise minimum of the exponents over all terms.
  Monomial monomial_content() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const Polynomial& o) const;

  int nvars_ = 0;
  Terms terms_;
};

/// Exact division; throws InvalidInput when `divisor` does not divide `p`.
Polynomial exact_divide(const Polynomial& p, const Polynomial& divisor);

/// Square root in Q[gens]. Returns false when p is not a perfect square;
/// otherwise sets `root` with positive leading coefficient.
bool polynomial_sqrt(const Polynomial& p, Polynomial& root);

/// Grammar: terms `c*g1^e1*g2^e2` joined by `+`/`-`; c optional, may be p/q.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Terms are printed in decreasing `order` (weighted degree, then exponents
/// compared from the last generator). parse(format(p)) == p.
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names,
                              const std::vector<int>& weights = {});

/// Graded order: true iff a < b.
bool monomial_less(const Monomial& a, const Monomial& b, const std::vector<int>& weights);

int weighted_degree(const Monomial& m, const std::vector<int>& weights);

/// All monomials of weighted degree d, in decreasing monomial order.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& weights, int d);

/// Univariate polynomials, coefficient i multiplies t^i, no trailing zeros.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p);
UniPoly uni_gcd(UniPoly a, UniPoly b);
/// Distinct rational roots, ascending. The zero polynomial is rejected.
std::vector<Rational> uni_rational_roots(UniPoly p);
Rational uni_eval(const UniPoly& p, const Rational& t);
/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
UniPoly uni_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace flagcalc
