#pragma once

// Graded quotient rings Q[g_1..g_n]/I with homogeneous relations. Every
// question is answered one degree at a time by exact row reduction of the
// degree-d slice of I.

#include "linalg.hpp"
#include "polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace flagcalc {

struct Generator {
  std::string name;
  int degree = 1;
};

/// Row-reduced degree-d slice of the ideal plus the standard monomials.
struct DegreeSlice {
  int degree = 0;
  std::vector<Monomial> monomials;  // decreasing order; column order of `rows`
  Matrix rows;                      // RREF of the ideal slice
  std::vector<int> pivots;
  std::vector<Monomial> basis;      // non-pivot monomials, decreasing
  std::map<Monomial, int> column;
};

class RingPresentation {
 public:
  RingPresentation(std::string name, std::vector<Generator> gens,
                   std::vector<Polynomial> relations);

  /// Builds relations from ASCII strings in the generators' names.
  static RingPresentation from_strings(std::string name, std::vector<Generator> gens,
                                       const std::vector<std::string>& relations);

  /// Inverse of export_text().
  static RingPresentation parse(std::string_view text);

  /// `ring <name>; gens g:deg,...;` then one relation per line.
  std::string export_text() const;

  const std::string& name() const;
  const std::vector<Generator>& generators() const;
  const std::vector<Polynomial>& relations() const;
  int nvars() const;
  const std::vector<std::string>& names() const;
  const std::vector<int>& weights() const;
  int generator_index(std::string_view name) const;

  Polynomial gen(std::string_view name) const;
  Polynomial one() const;
  Polynomial parse_poly(std::string_view text) const;
  std::string format(const Polynomial& p) const;

  /// Weighted degree of a homogeneous polynomial; InvalidInput otherwise.
  /// The zero polynomial has degree 0.
  int degree_of(const Polynomial& p) const;

  /// Cached; safe to call from several threads.
  const DegreeSlice& slice(int d) const;

  bool same_ring(const RingPresentation& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// An element of the quotient, stored as its canonical representative.
class ChowClass {
 public:
  ChowClass(RingPresentation ring, int degree, Polynomial poly)
      : ring_(std::move(ring)), degree_(degree), poly_(std::move(poly)) {}

  const RingPresentation& ring() const { return ring_; }
  int degree() const { return degree_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Coefficients over graded_piece(ring, degree).
  Vector coordinates() const;
  std::string to_string() const { return ring_.format(poly_); }

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.ring_.same_ring(b.ring_) && a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  RingPresentation ring_;
  int degree_;
  Polynomial poly_;
};

std::vector<Monomial> graded_piece(const RingPresentation& ring, int d);
int ideal_slice_dim(const RingPresentation& ring, int d);
/// RREF basis of the degree-d ideal slice, as polynomials.
std::vector<Polynomial> ideal_slice(const RingPresentation& ring, int d);

bool ideal_contains(const RingPresentation& ring, const Polynomial& p);
ChowClass normal_form(const RingPresentation& ring, const Polynomial& p);
ChowClass normal_form(const RingPresentation& ring, std::string_view p);
ChowClass multiply(const ChowClass& a, const ChowClass& b);
ChowClass add(const ChowClass& a, const ChowClass& b);
ChowClass scale(const ChowClass& a, const Rational& c);

/// Graded dimensions for degrees 0..max_degree.
std::vector<int> hilbert_series(const RingPresentation& ring, int max_degree);

/// Sum of all graded dimensions; throws Error if the ring is not zero in
/// every degree from some point below `degree_cap`.
int total_dimension(const RingPresentation& ring, int degree_cap = 64);

/// Highest degree with a nonzero graded piece (finite rings only).
int top_degree(const RingPresentation& ring, int degree_cap = 64);

/// Irreducibility certificate for p viewed as a polynomial of degree <= 2 in
/// generator `var` over the others. UnsupportedShape when deg_var p > 2 or
/// the leading coefficient in var is not a nonzero constant.
bool is_irreducible_quadratic_in(const Polynomial& p, int var);
bool is_irreducible_quadratic_in(const RingPresentation& ring, const Polynomial& p,
                                 std::string_view var);

}  // namespace flagcalc
