#include "chowpresentations.hpp"

#include "errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace flagcalc {

namespace {

// Laplace expansion along the first row; matrices here are at most 4x4.
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m, int nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(nvars, 1);
  Polynomial det(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][j] * poly_determinant(minor, nvars);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

// Solve v = sum lambda_j * basis[j]; throws if v is outside the span.
Vector coordinates_in(const std::vector<Vector>& basis, const Vector& v) {
  const int k = static_cast<int>(basis.size());
  Matrix a;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vector row;
    for (const auto& b : basis) row.push_back(b[i]);
    row.push_back(v[i]);
    a.push_back(std::move(row));
  }
  const auto pivots = rref(a, k + 1);
  Vector lambda(k, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) throw Error("class is outside the span of the reading basis");
    lambda[pivots[r]] = a[r][k];
  }
  return lambda;
}

Polynomial embed(const Polynomial& p, int total, int offset) {
  Polynomial out(total);
  for (const auto& [m, c] : p.terms()) {
    Monomial e(total, 0);
    std::copy(m.begin(), m.end(), e.begin() + offset);
    out.add_term(e, c);
  }
  return out;
}

void require(bool ok, std::vector<std::string>& facts, const std::string& fact) {
  if (!ok) throw Error("structure check failed: " + fact);
  facts.push_back(fact);
}

}  // namespace

RingPresentation borel_ring_BC(int n) {
  if (n < 2) throw InvalidInput("borel_ring_BC needs n >= 2");
  std::vector<Generator> gens;
  for (int i = 1; i < n; ++i) gens.push_back({"x" + std::to_string(i), 1});
  gens.push_back({"y", 2});
  const int nv = n;
  std::vector<Polynomial> squares;
  for (int i = 0; i < n - 1; ++i) squares.push_back(Polynomial::variable(nv, i).pow(2));
  squares.push_back(Polynomial::variable(nv, n - 1));
  // e_j by the recurrence e_j(v_1..v_k) = e_j(v_1..v_{k-1}) + v_k e_{j-1}(v_1..v_{k-1}).
  std::vector<Polynomial> e(n + 1, Polynomial(nv));
  e[0] = Polynomial::constant(nv, 1);
  for (const auto& v : squares)
    for (int j = n; j >= 1; --j) e[j] += v * e[j - 1];
  std::vector<Polynomial> rels(e.begin() + 1, e.end());
  return RingPresentation("BC" + std::to_string(n), std::move(gens), std::move(rels));
}

RingPresentation ring_OG510() {
  return RingPresentation::from_strings("OG510", {{"X1", 1}, {"X3", 3}},
                                        {"X3^2 - 4*X1^3*X3 + 2*X1^6", "12*X1^5*X3 - 7*X1^8"});
}

RingPresentation ring_isotropic2(Isotropic2Variant v) {
  const int nv = 4;
  auto sigma = [&](int i) {
    if (i == 0) return Polynomial::constant(nv, 1);
    if (i < 0 || i > 4) return Polynomial(nv);
    return Polynomial::variable(nv, i - 1);
  };
  std::vector<Polynomial> rels;
  for (int r = 3; r <= 4; ++r) {
    std::vector<std::vector<Polynomial>> m(r, std::vector<Polynomial>(r, Polynomial(nv)));
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j) m[i - 1][j - 1] = sigma(1 + j - i);
    rels.push_back(poly_determinant(m, nv));
  }
  for (int r = 2; r <= 3; ++r) {
    Polynomial q = sigma(r) * sigma(r);
    for (int i = 1; i <= 4 - r; ++i) {
      const Polynomial t = Rational(2) * sigma(r + i) * sigma(r - i);
      if (i % 2) q -= t;
      else q += t;
    }
    rels.push_back(q);
  }
  std::vector<Generator> gens{{"s1", 1}, {"s2", 2}, {"s3", 3}, {"s4", 4}};
  return RingPresentation(v == Isotropic2Variant::SG26 ? "SG26" : "OG27", std::move(gens),
                          std::move(rels));
}

std::string shape_name(TargetShape s) {
  switch (s) {
    case TargetShape::Rank1: return "rank-1";
    case TargetShape::Quadric4: return "quadric-4";
    case TargetShape::Isotropic2: return "isotropic-2-plane";
  }
  return "?";
}

TargetRingSpec ring_rank1(int m) {
  if (m < 4) throw InvalidInput("the rank-1 target needs dimension at least 4");
  RingPresentation ring = RingPresentation::from_strings(
      "P" + std::to_string(m), {{"H", 1}}, {"H^" + std::to_string(m + 1)});
  TargetRingSpec spec{TargetShape::Rank1, ring, ring.gen("H"), {ring.parse_poly("H^2")},
                      {ring.parse_poly("H^4")}, {"H^4"}, {}};
  require(graded_piece(ring, 4).size() == 1, spec.facts, "dim A^4 = 1");
  require(!normal_form(ring, ring.parse_poly("H^4")).is_zero(), spec.facts, "H^4 != 0");
  return spec;
}

TargetRingSpec ring_quadric4() {
  RingPresentation ring = RingPresentation::from_strings("Q4", {{"h", 1}, {"A", 2}},
                                                         {"h^3 - 2*h*A", "A^2 - h^2*A"});
  const Polynomial A = ring.gen("A");
  const Polynomial B = ring.parse_poly("h^2 - A");
  const Polynomial pt = A * A;
  TargetRingSpec spec{TargetShape::Quadric4, ring, ring.gen("h"), {A, B}, {pt}, {"pt"}, {}};
  auto nf = [&](const Polynomial& p) { return normal_form(ring, p); };
  require(graded_piece(ring, 4).size() == 1, spec.facts, "dim A^4 = 1");
  require(!nf(pt).is_zero(), spec.facts, "pt = A^2 != 0");
  require(nf(A * B).is_zero(), spec.facts, "A*B = 0");
  require(nf(B * B - pt).is_zero(), spec.facts, "B^2 = pt");
  require(nf(ring.parse_poly("h^4") - Rational(2) * pt).is_zero(), spec.facts, "h^4 = 2*pt");
  require(graded_piece(ring, 5).empty(), spec.facts, "dim A^5 = 0");
  return spec;
}

TargetRingSpec ring_isotropic2_target(Isotropic2Variant v) {
  RingPresentation ring = ring_isotropic2(v);
  const Polynomial s1 = ring.gen("s1"), s2 = ring.gen("s2");
  TargetRingSpec spec{TargetShape::Isotropic2, ring, s1, {s1 * s1, s2},
                      {s1.pow(4), s2 * s2}, {"s1^4", "s2^2"}, {}};
  require(graded_piece(ring, 4).size() == 2, spec.facts, "dim A^4 = 2");
  require(matrix_rank({normal_form(ring, s1.pow(4)).coordinates(),
                       normal_form(ring, s2 * s2).coordinates()}, 2) == 2,
          spec.facts, "s1^4 and s2^2 independent");
  require(ideal_contains(ring, Rational(3) * s2 * s2 - Rational(2) * s1 * s1 * s2), spec.facts,
          "3*s2^2 = 2*s1^2*s2");
  return spec;
}

std::string ObstructionReport::format_equation(std::size_t i) const {
  return format_polynomial(equation_system.at(i), unknowns) + " = 0";
}

ObstructionVerdict positivity_cascade(const std::vector<Polynomial>& equations,
                                      const std::vector<std::string>& unknowns,
                                      std::vector<ObstructionStep>* steps) {
  const int nu = static_cast<int>(unknowns.size());
  std::vector<bool> forced(nu, false);
  auto substitute = [&](const Polynomial& p) {
    Polynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
      bool dead = false;
      for (int i = 0; i < nu; ++i) dead = dead || (forced[i] && m[i] > 0);
      if (!dead) out.add_term(m, c);
    }
    return out;
  };
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& eq : equations) {
      const Polynomial p = substitute(eq);
      if (p.is_zero()) continue;
      // Visibly a positive combination of even monomials?
      bool positive = true;
      for (const auto& [m, c] : p.terms()) {
        positive = positive && sgn(c) > 0;
        for (int e : m) positive = positive && e % 2 == 0;
      }
      if (!positive) continue;
      ObstructionStep step{format_polynomial(p, unknowns) + " = 0", {}};
      for (const auto& [m, c] : p.terms()) {
        int support = -1, count = 0;
        for (int i = 0; i < nu; ++i)
          if (m[i] > 0) {
            support = i;
            ++count;
          }
        if (count == 1 && !forced[support]) {
          forced[support] = true;
          step.forced.push_back(unknowns[support]);
        }
      }
      if (!step.forced.empty()) {
        progress = true;
        if (steps) steps->push_back(std::move(step));
      }
    }
  }
  const bool all = std::all_of(forced.begin(), forced.end(), [](bool b) { return b; });
  return all ? ObstructionVerdict::ForcesZero : ObstructionVerdict::Inconclusive;
}

ObstructionReport quartic_obstruction(const MarkedDynkin& source, const TargetRingSpec& target) {
  const int n = source.rank();
  if ((source.family() != Family::B && source.family() != Family::C) ||
      static_cast<int>(source.marked().size()) != n - 1 || source.has_mark(n))
    throw InvalidInput("quartic obstruction needs a source of shape (B_n or C_n)/P_{D\\{n}}, got " +
                       source.to_string());
  const RingPresentation borel = borel_ring_BC(n);
  Polynomial quartic = borel.parse_poly("y^2");
  for (int i = 1; i < n; ++i) quartic += borel.parse_poly("x" + std::to_string(i) + "^4");

  std::vector<std::string> unknowns;
  for (int i = 1; i < n; ++i) unknowns.push_back("a" + std::to_string(i));
  if (target.degree2_basis.size() == 1) {
    unknowns.push_back("b");
  } else {
    unknowns.push_back("a" + std::to_string(n));
    unknowns.push_back("b" + std::to_string(n));
  }
  const RingPresentation& ring = target.ring;
  const int nt = ring.nvars();
  const int nu = static_cast<int>(unknowns.size());
  const int total = nt + nu;
  auto unknown = [&](int k) { return Polynomial::variable(total, nt + k); };

  // Images of the source generators in Q[target gens, unknowns].
  std::vector<Polynomial> image;
  for (int i = 0; i < n - 1; ++i) image.push_back(unknown(i) * embed(target.hyperplane, total, 0));
  Polynomial y_image(total);
  for (std::size_t k = 0; k < target.degree2_basis.size(); ++k)
    y_image += unknown(n - 1 + static_cast<int>(k)) * embed(target.degree2_basis[k], total, 0);
  image.push_back(y_image);

  Polynomial pulled(total);
  for (const auto& [m, c] : quartic.terms()) {
    Polynomial t = Polynomial::constant(total, c);
    for (int g = 0; g < n; ++g)
      if (m[g]) t = t * image[g].pow(m[g]);
    pulled += t;
  }

  std::vector<Vector> reading;
  for (const auto& b : target.reading_basis) reading.push_back(normal_form(ring, b).coordinates());
  std::vector<Polynomial> equations(reading.size(), Polynomial(nu));
  std::map<Monomial, Polynomial> grouped;
  for (const auto& [m, c] : pulled.terms()) {
    Monomial mt(m.begin(), m.begin() + nt), mu(m.begin() + nt, m.end());
    auto it = grouped.try_emplace(mt, Polynomial(nu)).first;
    it->second.add_term(mu, c);
  }
  for (const auto& [mt, coeff] : grouped) {
    const Vector v = normal_form(ring, Polynomial::monomial(mt)).coordinates();
    const Vector lambda = coordinates_in(reading, v);
    for (std::size_t j = 0; j < lambda.size(); ++j) equations[j] += coeff * lambda[j];
  }

  ObstructionReport report{source, target.shape, borel.format(quartic), ideal_contains(borel, quartic),
                           unknowns, equations, target.reading_labels, {}, ObstructionVerdict::Inconclusive};
  if (!report.quartic_in_ideal) throw Error("quartic relation missing from " + borel.name());
  report.verdict = positivity_cascade(report.equation_system, unknowns, &report.steps);
  return report;
}

}  // namespace flagcalc
