#pragma once

// Effective good divisibility (e.d.) and good divisibility (g.d.).
//
// e.d.(X) is the largest s such that x_i * x_j = 0 with x_i, x_j effective
// and i + j <= s forces a factor to vanish; g.d. drops effectivity. On a
// Schubert model, nonnegative structure constants reduce the effective
// question to pairs of basis classes.

#include "gradedring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace flagcalc {

struct SchubertClass {
  std::string label;
  int codim = 0;
};

class SchubertModel {
 public:
  using Product = std::vector<std::pair<int, Rational>>;  // (class index, coefficient)

  SchubertModel(std::string name, int dimension);

  int add_class(std::string label, int codim);
  /// Sets the product of classes i and j (unordered). Unset pairs are zero,
  /// except that a codimension-0 class acts as the identity.
  void set_product(int i, int j, Product p);

  /// Checks labels, codimensions, nonnegativity and additivity of degrees.
  void validate() const;

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  const std::vector<SchubertClass>& classes() const { return classes_; }
  int index_of(std::string_view label) const;
  Product product(int i, int j) const;

  /// Format:
  ///   name <name>
  ///   dimension <d>
  ///   classes:
  ///   <label> <codim>
  ///   products:
  ///   <label> <label> -> <label>:<coeff>, ...
  /// `→` is accepted for `->`; an empty right side means zero.
  static SchubertModel parse(std::string_view text);
  std::string to_text() const;

  /// Same model with class i renamed/reindexed through `perm` (perm[old] = new).
  SchubertModel permuted(const std::vector<int>& perm) const;

 private:
  std::string name_;
  int dimension_;
  std::vector<SchubertClass> classes_;
  std::map<std::pair<int, int>, Product> products_;
};

SchubertModel projective_space_model(int a);
/// Q^m: hyperplane powers below the middle, linear-space classes above; two
/// middle classes when m is even.
SchubertModel quadric_model(int m);
/// Structure constants are products of the factors' constants.
SchubertModel product_model(const SchubertModel& a, const SchubertModel& b);
/// Classes given as polynomials that form a basis of every graded piece;
/// structure constants read off by normal forms.
SchubertModel model_from_ring(const RingPresentation& ring,
                              const std::vector<std::pair<std::string, Polynomial>>& classes,
                              std::string name);
/// Q[e1..ek]/(h_{n-k+1}, ..., h_n), e_i of degree i.
RingPresentation grassmannian_ring(int k, int n);
/// Schubert classes of Gr(k,n) as Jacobi-Trudi determinants in the ring
/// above, labelled by partitions ("s2.1"; "1" for the identity).
SchubertModel grassmannian_model(int k, int n);
/// 1, h, A, B, l = hA, pt = A^2 on the quadric ring.
SchubertModel quadric4_model_from_ring();

enum class Provenance {
  Bruteforce,
  ProductRule,
  ProjectiveBundleRule,
  InPaperProof,
  ImportedLiterature,
};
std::string provenance_name(Provenance p);

struct EdValue {
  int value = 0;
  Provenance provenance = Provenance::Bruteforce;
  std::optional<bool> gd_equals_ed;
  /// A known lower bound for g.d., when one is available.
  std::optional<int> gd;
  bool exact = true;
  std::string note;
};

struct BruteforceResult {
  EdValue ed;
  /// A vanishing pair of minimal total codimension, if any.
  std::optional<std::pair<std::string, std::string>> witness;
};

BruteforceResult ed_bruteforce_detail(const SchubertModel& m);
EdValue ed_bruteforce(const SchubertModel& m);

/// min of the factor values. RuleNotApplicable unless every factor has
/// gd_equals_ed == true.
EdValue ed_product(const std::vector<EdValue>& factors);

/// Bounds for a product: lower = min over factors of known g.d. (1 for any
/// positive-dimensional factor without one), upper = min of factor e.d.
struct EdBounds {
  int lower = 0;
  int upper = 0;
};
EdBounds ed_product_bounds(const std::vector<EdValue>& factors);
/// Exact value from ed_product_bounds; RuleNotApplicable when they differ.
EdValue ed_product_sandwich(const std::vector<EdValue>& factors);

/// min(base, n - 1) for a projectivized rank-n bundle over a split base.
EdValue ed_projective_bundle(const EdValue& base_ed, int total_rank);

struct VanishingPair {
  int i = 0;
  int j = 0;
  Polynomial u;
  Polynomial v;
};

struct VanishingSearch {
  std::optional<VanishingPair> pair;
  /// How the answer was decided (kernel test or pencil minors).
  std::string certificate;
};

/// Nonzero u in A^i, v in A^j with multiplier * u * v = 0 in the ring.
/// Decided exactly when min(dim A^i, dim A^j) <= 2; UnsupportedShape otherwise.
VanishingSearch find_vanishing_pair(const RingPresentation& ring, const Polynomial& multiplier,
                                    int i, int j);

struct ProofStep {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct ProofReport {
  std::string name;
  std::vector<ProofStep> steps;
  bool passed = false;
  /// Conclusion values, e.g. {"gd": 7}. Empty when a step failed.
  std::map<std::string, std::variant<bool, int, std::string>> results;
};

/// Replays the g.d. = 7 argument for the given OG(5,10)-style presentation.
ProofReport verify_gd_OG510(const RingPresentation& ring);
ProofReport verify_gd_OG510();

/// Replays e.d. = 6 for the hyperplane section of OG(5,10) (the VMRT of F4/P4).
ProofReport verify_ed_F4P4_vmrt(const RingPresentation& ring);
ProofReport verify_ed_F4P4_vmrt();

}  // namespace flagcalc
