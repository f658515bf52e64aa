#pragma once

// Decision procedures: splitting of uniform bundles from their splitting
// type, constancy of morphisms between rational homogeneous spaces, and the
// unsplit homogeneous bundles of rank e.d.(VMRT) + 1.
//
// Every conclusion carries the numeric facts it rests on; those facts are
// re-checked when the verdict is built, so a verdict with a false witness
// cannot exist.

#include "rootsys.hpp"
#include "vmrtcatalog.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace flagcalc {

enum class Outcome { Splits, Constant, UnsplitExists, Unknown };
std::string outcome_name(Outcome o);

using WitnessValue = std::variant<long long, std::string, std::vector<long long>, std::vector<std::string>>;

struct Witness {
  std::string name;
  WitnessValue lhs;
  /// One of < <= > >= == != in not-in.
  std::string relation;
  WitnessValue rhs;

  bool holds() const;
  std::string to_string() const;
};

std::string value_to_string(const WitnessValue& v);

class Verdict {
 public:
  /// Throws Error when outcome != Unknown and the rule or witnesses are
  /// empty, or when any witness fails.
  Verdict(Outcome outcome, std::string rule, std::vector<Witness> witnesses, std::string note = {});
  static Verdict unknown(std::string note);

  Outcome outcome() const { return outcome_; }
  const std::string& rule() const { return rule_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::string& note() const { return note_; }

 private:
  Outcome outcome_;
  std::string rule_;
  std::vector<Witness> witnesses_;
  std::string note_;
};

class SplittingType {
 public:
  /// Entries must be nonincreasing and nonempty.
  explicit SplittingType(std::vector<int> entries);
  /// Comma-separated integers, e.g. "3,1,1,0".
  static SplittingType parse(std::string_view csv);

  const std::vector<int>& entries() const { return entries_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  /// Cumulative block boundaries i_1 < ... < i_m, excluding r itself.
  std::vector<int> boundaries() const;
  /// Size of the first block of equal entries.
  int leading_multiplicity() const;
  /// Sizes of all blocks in order.
  std::vector<int> block_sizes() const;
  std::string to_string() const;

 private:
  std::vector<int> entries_;
};

/// Rule keys, in the order they are tried.
namespace rules {
inline constexpr const char* kRankAtMostEd = "rank-at-most-ed";
inline constexpr const char* kLeadingBlockBelowA = "leading-block-below-a";
inline constexpr const char* kBoundaryOffL = "boundary-off-l";

inline constexpr const char* kSourceDimExceedsTarget = "source-dim-exceeds-target";
inline constexpr const char* kFullFlagTarget = "full-flag-target";
inline constexpr const char* kPartialFlagTarget = "partial-flag-target";
inline constexpr const char* kBcQuarticInduction = "bc-quartic-induction";
inline constexpr const char* kTitsInductionPicard = "tits-induction-picard";
inline constexpr const char* kGrassmannianToFlag = "grassmannian-to-flag";

inline constexpr const char* kUnsplitHomogeneous = "unsplit-homogeneous-bundle";
}  // namespace rules

/// (r(X), l(X)) for the varieties whose VMRT is a Grassmannian Gr(l, r+1)
/// handled by the boundary rule; nullopt otherwise.
std::optional<std::pair<int, int>> boundary_rule_numbers(const MarkedDynkin& X);

/// NotCovered when X is not in the catalog.
Verdict splitting_verdict(const MarkedDynkin& X, const SplittingType& t,
                          const Catalog& catalog = Catalog::builtin());

Verdict morphism_verdict(const MarkedDynkin& source, const MarkedDynkin& target);

struct WitnessBundle {
  MarkedDynkin X;
  /// "tits-projection" (built here) or "cited" (a known bundle from the
  /// literature; no projection data).
  std::string construction;
  std::optional<MarkedDynkin> total;
  std::optional<MarkedDynkin> other_projection;
  /// Fiber of total -> other_projection.
  std::vector<MarkedDynkin> other_fiber;
  int rank = 0;
  std::vector<Witness> inequality_facts;
  std::string note;

  /// UNSPLIT-EXISTS fact about (X, rank).
  Verdict verdict() const;
};

/// NotCovered when X is outside the list of varieties with a known unsplit
/// bundle of rank e.d.(VMRT) + 1, or when the construction does not reach
/// that rank.
WitnessBundle optimality_witness(const MarkedDynkin& X, const Catalog& catalog = Catalog::builtin());

/// Does X belong to the list handled by optimality_witness?
bool in_optimality_list(const MarkedDynkin& X);

}  // namespace flagcalc
