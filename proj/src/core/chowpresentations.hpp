#pragma once

// Concrete presentations: Borel rings of B_n/P_{D\{n}} (= C_n/P_{D\{n}}),
// OG(5,10), the isotropic 2-plane Grassmannians, the 4-dimensional quadric
// and projective space; and the quartic pullback obstruction.

#include "gradedring.hpp"
#include "rootsys.hpp"

#include <string>
#include <vector>

namespace flagcalc {

/// Generators x1..x{n-1} (degree 1) and y = x_n^2 (degree 2); relations
/// e_j(x1^2, ..., x{n-1}^2, y) for j = 1..n. Degrees are half the
/// cohomological ones.
RingPresentation borel_ring_BC(int n);

/// X1 (degree 1), X3 (degree 3).
RingPresentation ring_OG510();

enum class Isotropic2Variant { SG26, OG27 };

/// s1..s4 with deg s_i = i: Toeplitz determinants for r = 3, 4 and the
/// quadratic isotropy relations for r = 2, 3.
RingPresentation ring_isotropic2(Isotropic2Variant v);

enum class TargetShape { Rank1, Quadric4, Isotropic2 };
std::string shape_name(TargetShape s);

/// A ring together with the degree-4 reading basis the obstruction uses
/// and the names of the generic pullback coefficients.
struct TargetRingSpec {
  TargetShape shape;
  RingPresentation ring;
  Polynomial hyperplane;                  // the degree-1 generator
  std::vector<Polynomial> degree2_basis;  // y pulls back to sum c_k * degree2_basis[k]
  std::vector<Polynomial> reading_basis;  // basis of the degree-4 piece
  std::vector<std::string> reading_labels;
  /// Structure checks performed at construction, each "lhs = rhs".
  std::vector<std::string> facts;
};

/// P^m, m >= 4: Q[H]/(H^{m+1}); degree-4 piece spanned by H^4.
TargetRingSpec ring_rank1(int m = 4);

/// Q[h, A]/(h^3 - 2hA, A^2 - h^2 A). With B = h^2 - A: A^2 = B^2 = pt,
/// AB = 0, h^4 = 2 pt, zero above degree 4.
TargetRingSpec ring_quadric4();

/// SG(2,6) / OG(2,7) with y pulling back to a_n s1^2 + b_n s2 and the
/// degree-4 piece read in the basis {s1^4, s2^2}.
TargetRingSpec ring_isotropic2_target(Isotropic2Variant v = Isotropic2Variant::SG26);

enum class ObstructionVerdict { ForcesZero, Inconclusive };

struct ObstructionStep {
  std::string equation;            // printed over the unknowns, after substitution
  std::vector<std::string> forced; // unknowns this step sets to zero
};

struct ObstructionReport {
  MarkedDynkin source;
  TargetShape shape;
  std::string quartic;  // the source relation that is pulled back
  bool quartic_in_ideal = false;
  std::vector<std::string> unknowns;
  /// One equation per reading-basis element, polynomials in the unknowns.
  std::vector<Polynomial> equation_system;
  std::vector<std::string> equation_labels;
  std::vector<ObstructionStep> steps;
  ObstructionVerdict verdict = ObstructionVerdict::Inconclusive;

  std::string format_equation(std::size_t i) const;
};

/// Source must be (B_n or C_n)/P_{D\{n}}.
ObstructionReport quartic_obstruction(const MarkedDynkin& source, const TargetRingSpec& target);

/// The positivity cascade on its own: every equation whose terms are all
/// even monomials with positive coefficients forces the unknowns appearing
/// as pure powers to vanish; substitute and repeat.
ObstructionVerdict positivity_cascade(const std::vector<Polynomial>& equations,
                                      const std::vector<std::string>& unknowns,
                                      std::vector<ObstructionStep>* steps = nullptr);

}  // namespace flagcalc
