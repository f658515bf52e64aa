#pragma once

// Dynkin diagrams in Bourbaki labeling, positive roots, marked parabolic
// subsets and the fibers of the projections G/P_I -> G/P_J.

#include <string>
#include <string_view>
#include <vector>

namespace flagcalc {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

/// Rank bounds: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4, G = 2.
bool is_valid_rank(Family f, int rank);

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidInput when the rank is outside the family's bounds.
  static DynkinType make(Family family, int rank);

  bool is_classical() const {
    return family == Family::A || family == Family::B || family == Family::C ||
           family == Family::D;
  }
  std::string to_string() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Cartan matrix a[i][j] = <alpha_i^vee, alpha_j>, 0-based indices.
using CartanMatrix = std::vector<std::vector<int>>;
CartanMatrix cartan_matrix(const DynkinType& t);

/// Adjacency lists on 1-based node labels.
std::vector<std::vector<int>> dynkin_adjacency(const DynkinType& t);

/// A Dynkin type with a nonempty set of marked nodes, naming G/P_I.
class MarkedDynkin {
 public:
  MarkedDynkin(DynkinType type, std::vector<int> marked);

  /// Grammar: `<FAMILY><rank>/P<i1>,<i2>,...` or `<FAMILY><rank>/Pminus<k>`
  /// for all nodes except k. Case-insensitive.
  static MarkedDynkin parse(std::string_view text);

  /// The full flag G/B.
  static MarkedDynkin full_flag(DynkinType type);

  const DynkinType& type() const { return type_; }
  Family family() const { return type_.family; }
  int rank() const { return type_.rank; }
  const std::vector<int>& marked() const { return marked_; }

  bool is_grassmannian() const { return marked_.size() == 1; }
  bool is_full_flag() const { return static_cast<int>(marked_.size()) == type_.rank; }
  bool has_mark(int node) const;
  /// Requires is_grassmannian().
  int node() const;

  std::string to_string() const;
  friend bool operator==(const MarkedDynkin&, const MarkedDynkin&) = default;

 private:
  DynkinType type_;
  std::vector<int> marked_;
};

/// Positive roots as coefficient vectors in the simple-root basis.
using Root = std::vector<int>;

struct RootSystem {
  DynkinType type;
  std::vector<Root> positive_roots;
};

/// Closure of the simple roots under simple reflections, positive part.
RootSystem build_root_system(const DynkinType& t);

/// Shared cached instance; same content as build_root_system.
const RootSystem& root_system(const DynkinType& t);

/// dim G/P_I: positive roots whose support meets the marked set.
int dim_quotient(const MarkedDynkin& m);

/// A connected subdiagram, relabeled as a standard Dynkin type.
struct LeviComponent {
  DynkinType type;
  /// Ambient node labels, position i holds the ambient node sent to label i+1.
  std::vector<int> ambient_nodes;
  int label_of(int ambient_node) const;
};

/// Connected components of the diagram with `removed` deleted, each
/// identified up to Cartan-matrix isomorphism and relabeled.
std::vector<LeviComponent> levi_components(const DynkinType& t, const std::vector<int>& removed);

struct FiberDecomposition {
  MarkedDynkin base;
  MarkedDynkin total;
  std::vector<MarkedDynkin> fiber_factors;

  int dimension() const;
};

/// Fiber of G/P_{total.marked} -> G/P_{base_marks}. Factors are the
/// components of the diagram minus base_marks that carry a residual mark.
FiberDecomposition tits_fiber(const MarkedDynkin& total, std::vector<int> base_marks);

}  // namespace flagcalc
