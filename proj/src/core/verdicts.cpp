#include "verdicts.hpp"

#include "errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace flagcalc {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Splits: return "SPLITS";
    case Outcome::Constant: return "CONSTANT";
    case Outcome::UnsplitExists: return "UNSPLIT-EXISTS";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

// ---------------------------------------------------------------- witnesses

std::string value_to_string(const WitnessValue& v) {
  struct {
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<long long>& xs) const {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
      return out + "}";
    }
    std::string operator()(const std::vector<std::string>& xs) const {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
      return out + "}";
    }
  } v2s;
  return std::visit(v2s, v);
}

bool Witness::holds() const {
  const std::string& r = relation;
  if (r == "in" || r == "not-in") {
    bool found = false;
    if (auto* x = std::get_if<long long>(&lhs)) {
      auto* set = std::get_if<std::vector<long long>>(&rhs);
      if (!set) return false;
      found = std::find(set->begin(), set->end(), *x) != set->end();
    } else if (auto* s = std::get_if<std::string>(&lhs)) {
      auto* set = std::get_if<std::vector<std::string>>(&rhs);
      if (!set) return false;
      found = std::find(set->begin(), set->end(), *s) != set->end();
    } else {
      return false;
    }
    return r == "in" ? found : !found;
  }
  if (auto* a = std::get_if<long long>(&lhs)) {
    auto* b = std::get_if<long long>(&rhs);
    if (!b) return false;
    if (r == "<") return *a < *b;
    if (r == "<=") return *a <= *b;
    if (r == ">") return *a > *b;
    if (r == ">=") return *a >= *b;
    if (r == "==") return *a == *b;
    if (r == "!=") return *a != *b;
    return false;
  }
  if (r == "==") return lhs == rhs;
  if (r == "!=") return lhs.index() == rhs.index() && lhs != rhs;
  return false;
}

std::string Witness::to_string() const {
  return name + ": " + value_to_string(lhs) + " " + relation + " " + value_to_string(rhs);
}

Verdict::Verdict(Outcome outcome, std::string rule, std::vector<Witness> witnesses, std::string note)
    : outcome_(outcome), rule_(std::move(rule)), witnesses_(std::move(witnesses)), note_(std::move(note)) {
  if (outcome_ == Outcome::Unknown) return;
  if (rule_.empty() || witnesses_.empty()) throw Error("a " + outcome_name(outcome_) + " verdict needs a rule and witnesses");
  for (const auto& w : witnesses_)
    if (!w.holds()) throw Error("witness does not hold: " + w.to_string());
}

Verdict Verdict::unknown(std::string note) { return Verdict(Outcome::Unknown, {}, {}, std::move(note)); }

// ---------------------------------------------------------------- splitting types

SplittingType::SplittingType(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("splitting type must be nonempty");
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1]) throw InvalidInput("splitting type must be nonincreasing: " + to_string());
}

SplittingType SplittingType::parse(std::string_view csv) {
  std::vector<int> v;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view tok = csv.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int x = 0;
    const char* b = tok.data();
    if (!tok.empty() && tok.front() == '+') ++b;
    auto [p, ec] = std::from_chars(b, tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("splitting type '" + std::string(csv) + "': expected comma-separated integers");
    v.push_back(x);
    start = end + 1;
  }
  return SplittingType(std::move(v));
}

std::vector<int> SplittingType::block_sizes() const {
  std::vector<int> out{1};
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] == entries_[i - 1]) ++out.back();
    else out.push_back(1);
  }
  return out;
}

std::vector<int> SplittingType::boundaries() const {
  std::vector<int> out;
  int acc = 0;
  const auto sizes = block_sizes();
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) out.push_back(acc += sizes[i]);
  return out;
}

int SplittingType::leading_multiplicity() const { return block_sizes().front(); }

std::string SplittingType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) out += (i ? "," : "") + std::to_string(entries_[i]);
  return out + ")";
}

// ---------------------------------------------------------------- splitting verdicts

std::optional<std::pair<int, int>> boundary_rule_numbers(const MarkedDynkin& X) {
  if (!X.is_grassmannian()) return std::nullopt;
  const int n = X.rank(), k = X.node();
  switch (X.family()) {
    case Family::B:
      if (n >= 3 && k == n) return std::make_pair(n, n - 1);
      break;
    case Family::D:
      // Both spinor nodes give OG(n, 2n).
      if (n >= 4 && (k == n || k == n - 1)) return std::make_pair(n - 1, n - 2);
      break;
    case Family::E:
      if (k == 2) return std::make_pair(n - 1, 3);
      break;
    default: break;
  }
  return std::nullopt;
}

namespace {
long long ll(int x) { return x; }
}  // namespace

Verdict splitting_verdict(const MarkedDynkin& X, const SplittingType& t, const Catalog& catalog) {
  const VmrtEntry e = catalog.entry(X);
  const int r = t.rank();
  const std::string xs = X.to_string();

  if (e.ed.exact && r <= e.ed.value)
    return Verdict(Outcome::Splits, rules::kRankAtMostEd,
                   {{"rank <= e.d.(VMRT of " + xs + ")", ll(r), "<=", ll(e.ed.value)}});

  const auto sizes = t.block_sizes();
  const int j = sizes.front();
  const bool tail_distinct = std::all_of(sizes.begin() + 1, sizes.end(), [](int s) { return s == 1; });
  if (r > j && tail_distinct && j < e.a)
    return Verdict(Outcome::Splits, rules::kLeadingBlockBelowA,
                   {{"leading multiplicity j", ll(j), "<", ll(e.a)},
                    {"blocks after the leading one", ll(static_cast<int>(sizes.size()) - 1), "==", ll(r - j)},
                    {"rank exceeds j", ll(r), ">", ll(j)}});

  if (auto rl = boundary_rule_numbers(X)) {
    const auto [rx, lx] = *rl;
    if (r == rx + 1) {
      const std::vector<long long> forbidden{lx, rx + 1 - lx};
      for (int i : t.boundaries()) {
        if (i == lx || i == rx + 1 - lx) continue;
        return Verdict(Outcome::Splits, rules::kBoundaryOffL,
                       {{"rank equals r(X)+1", ll(r), "==", ll(rx + 1)},
                        {"r(X) equals e.d.(VMRT)", ll(rx), "==", ll(e.ed.value)},
                        {"block boundary", ll(i), "not-in", forbidden}});
      }
    }
  }

  std::ostringstream why;
  why << "no rule applies to " << t.to_string() << " on " << xs << " (r = " << r << ", e.d.(VMRT) = " << e.ed.value
      << ", a = " << e.a << ", j = " << j << ")";
  return Verdict::unknown(why.str());
}

// ---------------------------------------------------------------- morphisms

namespace {

std::vector<int> all_but(int n, int k) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i)
    if (i != k) v.push_back(i);
  return v;
}

bool is_projective3(const MarkedDynkin& m) {
  return m.is_grassmannian() && m.family() == Family::A && m.rank() == 3 && (m.node() == 1 || m.node() == 3);
}

// Start m of a marked set {m-1, ..., n} in A_n (or its mirror image); 0 if not of that shape.
int final_segment_start(const MarkedDynkin& t) {
  if (t.family() != Family::A) return 0;
  const int n = t.rank();
  const auto& mk = t.marked();
  auto contiguous = [&](const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != v[i - 1] + 1) return false;
    return true;
  };
  if (!contiguous(mk)) return 0;
  if (mk.back() == n) return mk.front() + 1;
  if (mk.front() == 1) return n - mk.back() + 2;  // mirror of {n+1-b, ..., n}
  return 0;
}

}  // namespace

Verdict morphism_verdict(const MarkedDynkin& source, const MarkedDynkin& target) {
  const int ds = dim_quotient(source), dt = dim_quotient(target);
  const std::string ss = source.to_string(), ts = target.to_string();
  const bool single = source.is_grassmannian();

  if (single && ds > dt)
    return Verdict(Outcome::Constant, rules::kSourceDimExceedsTarget,
                   {{"source has one marked node", ll(static_cast<int>(source.marked().size())), "==", 1LL},
                    {"dim " + ss + " > dim " + ts, ll(ds), ">", ll(dt)}});

  if (single && target.is_full_flag() && ds >= 2)
    return Verdict(Outcome::Constant, rules::kFullFlagTarget,
                   {{"target is a full flag", ll(static_cast<int>(target.marked().size())), "==", ll(target.rank())},
                    {"dim " + ss, ll(ds), ">=", 2LL}});

  if (single) {
    const int m = final_segment_start(target);
    if (m >= 2 && ds >= m)
      return Verdict(Outcome::Constant, rules::kPartialFlagTarget,
                     {{"target marks form a final segment {m-1..n} (up to symmetry); m", ll(m), ">=", 2LL},
                      {"dim " + ss + " >= m", ll(ds), ">=", ll(m)}});
  }

  const bool bc_target = (target.family() == Family::B || target.family() == Family::C) &&
                         target.marked() == all_but(target.rank(), target.rank());
  const bool a_target = target.family() == Family::A && target.rank() >= 2 &&
                        (target.marked() == all_but(target.rank(), target.rank()) ||
                         target.marked() == all_but(target.rank(), 1));
  const bool classical = source.type().is_classical();
  const int m = source.rank();

  if (bc_target && single && classical && m >= 3 && !is_projective3(source))
    return Verdict(Outcome::Constant, rules::kBcQuarticInduction,
                   {{"target", ts, "==", MarkedDynkin(target.type(), all_but(target.rank(), target.rank())).to_string()},
                    {"source family", std::string(1, family_letter(source.family())), "in",
                     std::vector<std::string>{"A", "B", "C", "D"}},
                    {"source rank m", ll(m), ">=", 3LL},
                    {"source", ss, "not-in", std::vector<std::string>{"A3/P1", "A3/P3"}}});

  const int k = static_cast<int>(source.marked().size());
  if (classical && k >= 2 && (a_target || bc_target)) {
    const int factor = a_target ? 2 : 3;
    if (m >= factor * k + 1)
      return Verdict(Outcome::Constant, rules::kTitsInductionPicard,
                     {{"target", ts, "in",
                       a_target ? std::vector<std::string>{MarkedDynkin(target.type(), all_but(target.rank(), target.rank())).to_string(),
                                                           MarkedDynkin(target.type(), all_but(target.rank(), 1)).to_string()}
                                : std::vector<std::string>{MarkedDynkin(target.type(), all_but(target.rank(), target.rank())).to_string()}},
                      {"source family", std::string(1, family_letter(source.family())), "in",
                       std::vector<std::string>{"A", "B", "C", "D"}},
                      {"number of marked nodes k", ll(k), ">=", 2LL},
                      {std::string("source rank m >= ") + (a_target ? "2k+1" : "3k+1"), ll(m), ">=", ll(factor * k + 1)}});
  }

  if (single && source.family() == Family::A && target.family() == Family::A && source.rank() == target.rank()) {
    const int n = source.rank(), l = source.node();
    if (l != 1 && l != n) {
      const std::vector<long long> forbidden{l, n + 1 - l};
      for (int i : target.marked()) {
        if (i == l || i == n + 1 - l) continue;
        return Verdict(Outcome::Constant, rules::kGrassmannianToFlag,
                       {{"source node l", ll(l), "not-in", std::vector<long long>{1, n}},
                        {"same rank", ll(target.rank()), "==", ll(n)},
                        {"target node", ll(i), "not-in", forbidden}});
      }
    }
  }

  return Verdict::unknown("no rule applies to " + ss + " -> " + ts + " (dims " + std::to_string(ds) + ", " +
                          std::to_string(dt) + ")");
}

// ---------------------------------------------------------------- optimality witnesses

namespace {

struct Plan {
  std::string construction;  // "tits-projection" or "cited"
  std::vector<int> total;
  int other = 0;
  std::string note;
};

std::optional<Plan> plan_for(const MarkedDynkin& X) {
  if (!X.is_grassmannian()) return std::nullopt;
  const int n = X.rank(), k = X.node();
  auto tits = [&](std::vector<int> marks, int other) { return Plan{"tits-projection", std::move(marks), other, {}}; };
  auto cited = [](std::string note) { return Plan{"cited", {}, 0, std::move(note)}; };
  switch (X.family()) {
    case Family::A:
      return cited("homogeneous bundles of rank e.d.(VMRT)+1 on Grassmannians (tautological/tangent bundles)");
    case Family::B:
      if (k == n) return cited("known unsplit uniform bundle on the odd orthogonal Grassmannian");
      if (k >= 2 && 3 * k <= 2 * n) return tits({k - 1, k}, k - 1);
      if (n == 2 && k == 1) return cited("spinor bundle on Q^3");
      if (k == n - 1) return tits({n - 1, n}, n);
      return std::nullopt;
    case Family::C:
      if (k == n) return cited("known unsplit uniform bundle on the Lagrangian Grassmannian");
      if (k == 1) return cited("C_n/P_1 is projective space; tangent bundle");
      if (3 * k <= 2 * n + 1) return tits({k - 1, k}, k - 1);
      if (k == n - 1) return tits({n - 1, n}, n);
      return std::nullopt;
    case Family::D:
      if (k == n || k == n - 1) return cited("known unsplit uniform bundle on the spinor variety");
      if (k >= 2 && 3 * k <= 2 * n - 2) return tits({k - 1, k}, k - 1);
      if (k == n - 2) return tits({n - 2, n}, n);
      return std::nullopt;
    case Family::E: {
      if (k == 1 || k == n) return std::nullopt;
      if (k == 2) return tits({2, n}, n);
      if (k == 3) return tits({1, 3}, 1);
      if (k == 4) return tits({2, 4}, 2);
      // Remaining nodes on the long arm: pair with the end node.
      if (n == 6 && k == 5) return tits({5, 6}, 6);
      return tits({k, n}, n);
    }
    case Family::F:
      if (k == 2) return tits({1, 2}, 1);
      if (k == 3) return tits({3, 4}, 4);
      return std::nullopt;
    case Family::G: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool in_optimality_list(const MarkedDynkin& X) { return plan_for(X).has_value(); }

Verdict WitnessBundle::verdict() const {
  std::vector<Witness> w = inequality_facts;
  return Verdict(Outcome::UnsplitExists, rules::kUnsplitHomogeneous, std::move(w),
                 "unsplit uniform bundle of rank " + std::to_string(rank) + " on " + X.to_string());
}

WitnessBundle optimality_witness(const MarkedDynkin& X, const Catalog& catalog) {
  const auto plan = plan_for(X);
  if (!plan) throw NotCovered(X.to_string() + " is not in the list of varieties with a known optimal unsplit bundle");
  // C_n/P_1 is P^{2n-1}; its VMRT data is that of A_{2n-1}/P_1.
  const MarkedDynkin lookup = (X.family() == Family::C && X.node() == 1)
                                  ? MarkedDynkin(DynkinType::make(Family::A, 2 * X.rank() - 1), {1})
                                  : X;
  const EdValue ed = catalog.ed_vmrt(lookup);
  WitnessBundle wb{X, plan->construction, std::nullopt, std::nullopt, {}, 0, {}, plan->note};
  const int dx = dim_quotient(X);
  if (plan->construction == "cited") {
    wb.rank = ed.value + 1;
    wb.inequality_facts.push_back({"rank equals e.d.(VMRT)+1", ll(wb.rank), "==", ll(ed.value + 1)});
    return wb;
  }
  const MarkedDynkin total(X.type(), plan->total);
  const MarkedDynkin other(X.type(), {plan->other});
  const FiberDecomposition fp = tits_fiber(total, {X.node()});
  const FiberDecomposition fq = tits_fiber(total, {plan->other});
  if (fp.fiber_factors.size() != 1) throw Error("fiber of " + total.to_string() + " -> " + X.to_string() + " is not irreducible");
  const MarkedDynkin& pf = fp.fiber_factors.front();
  const bool projective = pf.family() == Family::A && (pf.node() == 1 || pf.node() == pf.rank());
  if (!projective) throw Error("fiber " + pf.to_string() + " of " + total.to_string() + " -> " + X.to_string() + " is not a projective space");
  wb.total = total;
  wb.other_projection = other;
  wb.other_fiber = fq.fiber_factors;
  wb.rank = dim_quotient(pf) + 1;
  if (wb.rank != ed.value + 1)
    throw NotCovered("the projectivized bundle " + total.to_string() + " -> " + X.to_string() + " has rank " +
                     std::to_string(wb.rank) + ", but e.d.(VMRT)+1 = " + std::to_string(ed.value + 1));
  std::string fiber_name;
  for (const auto& f : fq.fiber_factors) fiber_name += (fiber_name.empty() ? "" : " x ") + f.to_string();
  wb.inequality_facts = {
      {"dim " + X.to_string() + " > dim " + other.to_string(), ll(dx), ">", ll(dim_quotient(other))},
      {"dim " + X.to_string() + " > dim fiber " + fiber_name, ll(dx), ">", ll(fq.dimension())},
      {"fiber of " + total.to_string() + " -> " + X.to_string() + " is P^(rank-1)", ll(dim_quotient(pf)), "==",
       ll(wb.rank - 1)},
      {"rank equals e.d.(VMRT)+1", ll(wb.rank), "==", ll(ed.value + 1)},
  };
  for (const auto& w : wb.inequality_facts)
    if (!w.holds()) throw NotCovered("construction for " + X.to_string() + " fails: " + w.to_string());
  return wb;
}

}  // namespace flagcalc
