#pragma once

// The VMRT table as data: one row per family of generalized Grassmannians,
// with the VMRT factors, a(X) and e.d.(VMRT). a(X) is always recomputed from
// the factors; e.d. is recomputed wherever a rule or model applies and is
// otherwise taken from a provenance-tagged store.

#include "divisibility.hpp"
#include "rootsys.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagcalc {

/// Integer expression in the variables n and k: + - * ( ) and min(...).
int eval_expr(std::string_view expr, const std::map<char, int>& vars);

/// Chained comparisons (<, <=, >, >=, =, ==, !=), e.g. "2<=k<=n-2".
bool eval_condition(std::string_view cond, const std::map<char, int>& vars);

enum class FactorKind { MarkedDynkin, ProjectiveBundle, Special };

struct VmrtFactor {
  FactorKind kind = FactorKind::MarkedDynkin;
  /// The factor (MarkedDynkin) or the bundle base (ProjectiveBundle).
  std::optional<MarkedDynkin> variety;
  int fiber_dim = 0;    // ProjectiveBundle only
  std::string special;  // Special only: catalog key
  std::string display;  // "P^3", "Q^5", "Gr(2,5)", "D5/P5", ...

  int dimension() const;
  /// Dimensions that enter a(X): the factor itself, or base and fiber of a
  /// bundle, or the stored parts of a special entry.
  std::vector<int> part_dimensions() const;
};

struct VmrtDescriptor {
  std::vector<VmrtFactor> factors;

  int dimension() const;
  std::string to_string() const;
};

/// Parses one factor list ("P(2) x Gr(2,5)") with variables substituted.
VmrtDescriptor parse_vmrt(std::string_view text, const std::map<char, int>& vars);

/// e.d. of a single factor by the strongest available path.
EdValue factor_ed(const VmrtFactor& f);

struct SpecialEntry {
  std::string key;
  std::string display;
  int dimension = 0;
  std::vector<int> parts;
};
const SpecialEntry& special_entry(std::string_view key);

struct ImportedValue {
  int ed = 0;
  std::optional<int> gd;
  std::string source;
};
/// Values taken from the literature, keyed by the variety string.
const std::map<std::string, ImportedValue>& imported_values();

struct CatalogRow {
  int index = 0;
  int line = 0;
  Family family = Family::A;
  int fixed_rank = 0;  // 0 for rows parameterized by n
  std::vector<std::string> node_alternatives;
  std::vector<std::string> constraints;
  std::string name;
  std::string vmrt;
  std::string a_expr;
  std::string ed_expr;
  Provenance provenance = Provenance::Bruteforce;

  bool parameterized() const { return fixed_rank == 0; }
  bool binds_k() const;
  /// "B_n/P_k", "E6/P1|6", ...
  std::string id() const;
  /// Does (n, node) satisfy this row? Fills k when bound.
  std::optional<std::map<char, int>> bind(int n, int node) const;
};

struct VmrtEntry {
  MarkedDynkin X;
  int row = 0;
  std::string row_id;
  std::string name;
  std::map<char, int> params;
  VmrtDescriptor vmrt;
  int a = 0;
  EdValue ed;
  int stored_a = 0;
  int stored_ed = 0;
  Provenance stored_provenance = Provenance::Bruteforce;
};

class Catalog {
 public:
  static Catalog parse(std::string_view text, std::string source = "<catalog>");
  static Catalog load(const std::string& path);
  /// The catalog compiled into the library.
  static const Catalog& builtin();

  const std::vector<CatalogRow>& rows() const { return rows_; }
  const std::string& source() const { return source_; }

  /// First matching row; NotCovered when none.
  const CatalogRow& row_for(const MarkedDynkin& X, std::map<char, int>* params = nullptr) const;

  VmrtDescriptor vmrt_of(const MarkedDynkin& X) const;
  int a_of(const MarkedDynkin& X) const;
  EdValue ed_vmrt(const MarkedDynkin& X) const;
  /// Everything above plus the stored table values.
  VmrtEntry entry(const MarkedDynkin& X) const;

  /// Copy with the stored e.d. of one row shifted (harness sanity checks).
  Catalog with_perturbed_ed(int row_index, int delta) const;

 private:
  std::vector<CatalogRow> rows_;
  std::string source_;
};

VmrtDescriptor vmrt_of(const MarkedDynkin& X);
int a_of(const MarkedDynkin& X);
EdValue ed_vmrt(const MarkedDynkin& X);

struct RowSample {
  std::string X;
  std::map<char, int> params;
  int a = 0, stored_a = 0;
  int ed = 0, stored_ed = 0;
  std::string provenance, stored_provenance;
  bool passed = false;
  std::string error;
};

struct RowReport {
  int row = 0;
  std::string id;
  std::string name;
  std::vector<RowSample> samples;
  bool passed = false;
};

struct TableReport {
  std::vector<RowReport> rows;
  bool passed = false;
  int failed_rows = 0;
};

/// Parameters tried for a row: for parameterized rows, n (and k) at the
/// minimum legal value plus offsets 1, 3, 2, 4, 5, ... clipped to the
/// constraints and to rank 12; for fixed rows, each node alternative.
std::vector<std::map<char, int>> sample_parameters(const CatalogRow& row, int samples);

TableReport verify_table(const Catalog& catalog, int samples = 3);
TableReport verify_table(int samples = 3);

}  // namespace flagcalc
