#include "vmrtcatalog.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

namespace flagcalc {

// ---------------------------------------------------------------- expressions

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, const std::map<char, int>& vars) : s_(s), vars_(vars) {}

  int parse_all() {
    const int v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  int expr() {
    int v = term();
    for (;;) {
      skip();
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(s_) + "': " + what);
  }

 private:
  int term() {
    int v = factor();
    for (;;) {
      skip();
      // Implicit product: "2n", "2(n-k)".
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(') &&
          !starts_with_min())
        v *= factor();
      else if (eat('*')) v *= factor();
      else return v;
    }
  }

  bool starts_with_min() const { return s_.substr(pos_, 3) == "min"; }

  int factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      const int v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return v;
    }
    if (starts_with_min()) {
      pos_ += 3;
      if (!eat('(')) fail("min needs '('");
      int v = expr();
      while (eat(',')) v = std::min(v, expr());
      if (!eat(')')) fail("missing ')' after min");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      auto it = vars_.find(c);
      if (it == vars_.end()) fail("unbound variable '" + std::string(1, c) + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::map<char, int>& vars_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + sep.size();
  }
  return out;
}

// Splits on commas that are not nested in parentheses.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace

int eval_expr(std::string_view expr, const std::map<char, int>& vars) {
  return ExprParser(expr, vars).parse_all();
}

bool eval_condition(std::string_view cond, const std::map<char, int>& vars) {
  // Tokenize into expressions separated by comparison operators.
  std::vector<std::string> exprs, ops;
  std::size_t start = 0, i = 0;
  while (i < cond.size()) {
    const char c = cond[i];
    if (c == '<' || c == '>' || c == '=' || c == '!') {
      exprs.push_back(std::string(cond.substr(start, i - start)));
      std::string op(1, c);
      if (i + 1 < cond.size() && cond[i + 1] == '=') op += '=', ++i;
      if (op == "!") throw ParseError("condition '" + std::string(cond) + "': stray '!'");
      ops.push_back(op);
      start = ++i;
    } else {
      ++i;
    }
  }
  exprs.push_back(std::string(cond.substr(start)));
  if (ops.empty()) throw ParseError("condition '" + std::string(cond) + "' has no comparison");
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const int l = eval_expr(exprs[j], vars), r = eval_expr(exprs[j + 1], vars);
    const auto& op = ops[j];
    bool ok = op == "<"    ? l < r
              : op == "<=" ? l <= r
              : op == ">"  ? l > r
              : op == ">=" ? l >= r
              : op == "!=" ? l != r
                           : l == r;
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------- factors

namespace {

enum class ModelKind { Projective, Quadric, Grassmannian, Other };

struct Classified {
  ModelKind kind = ModelKind::Other;
  int a = 0, b = 0;  // P^a; Q^a; Gr(a, b)
};

Classified classify(const MarkedDynkin& m) {
  if (!m.is_grassmannian()) return {};
  const int r = m.rank(), k = m.node();
  switch (m.family()) {
    case Family::A:
      if (k == 1 || k == r) return {ModelKind::Projective, r, 0};
      if (r == 3 && k == 2) return {ModelKind::Quadric, 4, 0};
      return {ModelKind::Grassmannian, std::min(k, r + 1 - k), r + 1};
    case Family::B:
      if (k == 1) return {ModelKind::Quadric, 2 * r - 1, 0};
      if (r == 2 && k == 2) return {ModelKind::Projective, 3, 0};
      return {};
    case Family::C:
      if (k == 1) return {ModelKind::Projective, 2 * r - 1, 0};
      return {};
    case Family::D:
      if (k == 1) return {ModelKind::Quadric, 2 * r - 2, 0};
      return {};
    default:
      return {};
  }
}

MarkedDynkin grassmannian_variety(int k, int n) {
  return MarkedDynkin(DynkinType::make(Family::A, n - 1), {k});
}

MarkedDynkin quadric_variety(int m) {
  if (m == 1) return MarkedDynkin(DynkinType::make(Family::A, 1), {1});
  if (m == 3) return MarkedDynkin(DynkinType::make(Family::B, 2), {1});
  if (m == 4) return MarkedDynkin(DynkinType::make(Family::A, 3), {2});
  if (m >= 5 && m % 2 == 1) return MarkedDynkin(DynkinType::make(Family::B, (m + 1) / 2), {1});
  if (m >= 6 && m % 2 == 0) return MarkedDynkin(DynkinType::make(Family::D, (m + 2) / 2), {1});
  throw InvalidInput("Q^" + std::to_string(m) + " is not a generalized Grassmannian");
}

VmrtFactor projective_factor(int e) {
  VmrtFactor f;
  if (e < 0) throw InvalidInput("P^" + std::to_string(e) + " has negative dimension");
  if (e == 0) {
    f.kind = FactorKind::Special;
    f.special = "point";
  } else {
    f.variety = MarkedDynkin(DynkinType::make(Family::A, e), {1});
  }
  f.display = "P^" + std::to_string(e);
  return f;
}

std::pair<std::string, std::vector<std::string>> head_args(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw ParseError("VMRT factor '" + std::string(text) + "' is not of the form head(args)");
  return {trim(text.substr(0, open)), split_top(text.substr(open + 1, text.size() - open - 2))};
}

VmrtFactor parse_factor(std::string_view raw, const std::map<char, int>& vars) {
  const std::string text = trim(raw);
  if (text.find('/') != std::string::npos) {
    VmrtFactor f;
    f.variety = MarkedDynkin::parse(text);
    f.display = f.variety->to_string();
    return f;
  }
  const auto [head, args] = head_args(text);
  auto argc = [&, &args = args, &head = head](std::size_t n) {
    if (args.size() != n)
      throw ParseError("VMRT factor " + head + " takes " + std::to_string(n) + " argument(s)");
  };
  if (head == "P") {
    argc(1);
    return projective_factor(eval_expr(args[0], vars));
  }
  if (head == "Q") {
    argc(1);
    const int m = eval_expr(args[0], vars);
    VmrtFactor f;
    f.variety = quadric_variety(m);
    f.display = "Q^" + std::to_string(m);
    return f;
  }
  if (head == "Gr") {
    argc(2);
    const int k = eval_expr(args[0], vars), n = eval_expr(args[1], vars);
    if (k < 1 || k >= n) throw InvalidInput("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") is empty");
    VmrtFactor f;
    f.variety = grassmannian_variety(k, n);
    f.display = "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
    return f;
  }
  if (head == "bundle") {
    argc(2);
    VmrtFactor base = parse_factor(args[0], vars);
    if (base.kind != FactorKind::MarkedDynkin) throw InvalidInput("bundle base must be a positive-dimensional variety");
    VmrtFactor f;
    f.kind = FactorKind::ProjectiveBundle;
    f.variety = base.variety;
    f.fiber_dim = eval_expr(args[1], vars);
    if (f.fiber_dim < 1) throw InvalidInput("bundle fiber dimension must be positive");
    f.display = "P^" + std::to_string(f.fiber_dim) + "-bundle over " + base.display;
    return f;
  }
  if (head == "special") {
    argc(1);
    const SpecialEntry& s = special_entry(args[0]);
    VmrtFactor f;
    f.kind = FactorKind::Special;
    f.special = s.key;
    f.display = s.display;
    return f;
  }
  throw ParseError("unknown VMRT factor '" + head + "'");
}

}  // namespace

const SpecialEntry& special_entry(std::string_view key) {
  static const std::vector<SpecialEntry> entries = {
      {"point", "point", 0, {0}},
      {"twisted-cubic", "twisted cubic curve in P^3", 1, {1}},
      {"quadric4-bundle-over-p1", "Q^4-bundle over P^1", 5, {1, 4}},
      {"spinor10-hyperplane-section", "hyperplane section of the 10-dim spinor variety", 9, {9}},
  };
  for (const auto& e : entries)
    if (e.key == key) return e;
  throw ParseError("unknown special VMRT '" + std::string(key) + "'");
}

const std::map<std::string, ImportedValue>& imported_values() {
  static const std::map<std::string, ImportedValue> values = {
      {"D5/P5", {7, std::nullopt, "e.d. of the spinor variety OG(5,10)"}},
      {"D6/P6", {9, std::nullopt, "e.d. of the spinor variety OG(6,12)"}},
      {"D7/P7", {11, std::nullopt, "e.d. of the spinor variety OG(7,14)"}},
      {"E6/P6", {12, std::nullopt, "e.d. of the Cayley plane"}},
      {"E7/P7", {19, std::nullopt, "e.d. of the Freudenthal variety"}},
      {"C3/P3", {5, std::nullopt, "e.d. of LG(3,6)"}},
      {"A4/P2", {4, 3, "g.d. of Gr(2,5)"}},
  };
  return values;
}

int VmrtFactor::dimension() const {
  switch (kind) {
    case FactorKind::MarkedDynkin: return dim_quotient(*variety);
    case FactorKind::ProjectiveBundle: return dim_quotient(*variety) + fiber_dim;
    case FactorKind::Special: return special_entry(special).dimension;
  }
  return 0;
}

std::vector<int> VmrtFactor::part_dimensions() const {
  switch (kind) {
    case FactorKind::MarkedDynkin: return {dim_quotient(*variety)};
    case FactorKind::ProjectiveBundle: return {dim_quotient(*variety), fiber_dim};
    case FactorKind::Special: return special_entry(special).parts;
  }
  return {};
}

int VmrtDescriptor::dimension() const {
  int d = 0;
  for (const auto& f : factors) d += f.dimension();
  return d;
}

std::string VmrtDescriptor::to_string() const {
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " x ") + f.display;
  return out;
}

VmrtDescriptor parse_vmrt(std::string_view text, const std::map<char, int>& vars) {
  VmrtDescriptor d;
  for (const auto& part : split(text, " x ")) {
    if (part.empty()) throw ParseError("empty VMRT factor in '" + std::string(text) + "'");
    d.factors.push_back(parse_factor(part, vars));
  }
  return d;
}

namespace {

std::mutex cache_mutex;
std::map<std::string, EdValue> ed_cache;

EdValue compute_factor_ed(const VmrtFactor& f);

EdValue marked_ed(const MarkedDynkin& m) {
  const Classified c = classify(m);
  EdValue v;
  switch (c.kind) {
    case ModelKind::Projective:
      v = ed_bruteforce(projective_space_model(c.a));
      v.gd_equals_ed = true;
      v.gd = v.value;
      return v;
    case ModelKind::Quadric:
      v = ed_bruteforce(quadric_model(c.a));
      v.gd_equals_ed = true;
      v.gd = v.value;
      return v;
    case ModelKind::Grassmannian: {
      v = ed_bruteforce(grassmannian_model(c.a, c.b));
      auto it = imported_values().find(m.to_string());
      if (it != imported_values().end() && it->second.gd) {
        v.gd = it->second.gd;
        v.gd_equals_ed = *v.gd == v.value;
        v.note += "; " + it->second.source + " imported";
      }
      return v;
    }
    case ModelKind::Other: break;
  }
  auto it = imported_values().find(m.to_string());
  if (it == imported_values().end())
    throw NotCovered("no e.d. value known for " + m.to_string());
  v.value = it->second.ed;
  v.provenance = Provenance::ImportedLiterature;
  v.note = it->second.source;
  if (m.to_string() == "D5/P5") {
    // The g.d. of OG(5,10) is established by replaying its proof.
    const ProofReport r = verify_gd_OG510();
    if (r.passed) {
      v.gd = std::get<int>(r.results.at("gd"));
      v.gd_equals_ed = *v.gd == v.value;
      v.note += "; g.d. = " + std::to_string(*v.gd) + " by proof replay";
    }
  }
  return v;
}

EdValue compute_factor_ed(const VmrtFactor& f) {
  switch (f.kind) {
    case FactorKind::MarkedDynkin: return marked_ed(*f.variety);
    case FactorKind::ProjectiveBundle: {
      const EdValue base = marked_ed(*f.variety);
      EdValue v = ed_projective_bundle(base, f.fiber_dim + 1);
      return v;
    }
    case FactorKind::Special: {
      EdValue v;
      if (f.special == "point") {
        v = ed_bruteforce(projective_space_model(0));
        v.gd_equals_ed = true;
        v.gd = v.value;
      } else if (f.special == "twisted-cubic") {
        // Abstractly a P^1.
        v = ed_bruteforce(projective_space_model(1));
        v.gd_equals_ed = true;
        v.gd = v.value;
        v.note += " (twisted cubic is isomorphic to P^1)";
      } else if (f.special == "quadric4-bundle-over-p1") {
        // The pulled-back point class of the base squares to zero.
        v.value = std::min(1, special_entry(f.special).dimension);
        v.provenance = Provenance::InPaperProof;
        v.note = "fibration over P^1: fiber class squares to zero, so e.d. <= 1";
      } else if (f.special == "spinor10-hyperplane-section") {
        const ProofReport r = verify_ed_F4P4_vmrt();
        if (!r.passed) throw Error("proof replay for the hyperplane section of OG(5,10) failed");
        v.value = std::get<int>(r.results.at("ed"));
        v.provenance = Provenance::InPaperProof;
        v.note = "proof replay " + r.name;
      } else {
        throw NotCovered("no e.d. rule for special entry " + f.special);
      }
      return v;
    }
  }
  throw Error("unreachable");
}

std::string factor_key(const VmrtFactor& f) {
  switch (f.kind) {
    case FactorKind::MarkedDynkin: return f.variety->to_string();
    case FactorKind::ProjectiveBundle: return "bundle:" + f.variety->to_string() + ":" + std::to_string(f.fiber_dim);
    case FactorKind::Special: return "special:" + f.special;
  }
  return {};
}

EdValue descriptor_ed(const VmrtDescriptor& d) {
  std::vector<EdValue> parts;
  for (const auto& f : d.factors) parts.push_back(factor_ed(f));
  if (parts.size() == 1) return parts.front();
  try {
    return ed_product(parts);
  } catch (const RuleNotApplicable&) {
    return ed_product_sandwich(parts);
  }
}

}  // namespace

EdValue factor_ed(const VmrtFactor& f) {
  const std::string key = factor_key(f);
  {
    std::lock_guard lock(cache_mutex);
    auto it = ed_cache.find(key);
    if (it != ed_cache.end()) return it->second;
  }
  EdValue v = compute_factor_ed(f);
  std::lock_guard lock(cache_mutex);
  ed_cache.emplace(key, v);
  return v;
}

// ---------------------------------------------------------------- catalog

bool CatalogRow::binds_k() const {
  return std::find(node_alternatives.begin(), node_alternatives.end(), "k") != node_alternatives.end();
}

std::string CatalogRow::id() const {
  std::string out(1, family_letter(family));
  out += fixed_rank ? std::to_string(fixed_rank) : "_n";
  out += "/P";
  for (std::size_t i = 0; i < node_alternatives.size(); ++i) {
    if (i) out += "|";
    const auto& a = node_alternatives[i];
    out += (a.size() == 1 ? a : "{" + a + "}");
  }
  return out;
}

std::optional<std::map<char, int>> CatalogRow::bind(int n, int node) const {
  if (fixed_rank && n != fixed_rank) return std::nullopt;
  if (!is_valid_rank(family, n) || node < 1 || node > n) return std::nullopt;
  for (const auto& alt : node_alternatives) {
    std::map<char, int> vars{{'n', n}};
    if (alt == "k") vars['k'] = node;
    else if (eval_expr(alt, vars) != node) continue;
    bool ok = true;
    for (const auto& c : constraints)
      if (!eval_condition(c, vars)) {
        ok = false;
        break;
      }
    if (ok) return vars;
  }
  return std::nullopt;
}

Catalog Catalog::parse(std::string_view text, std::string source) {
  Catalog cat;
  cat.source_ = std::move(source);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (trim(line).empty()) continue;
    auto fields = split(line, "|");
    auto where = [&] { return cat.source_ + ":" + std::to_string(lineno) + ": "; };
    if (fields.size() != 8) throw ParseError(where() + "expected 8 '|'-separated fields, got " + std::to_string(fields.size()));
    CatalogRow row;
    row.index = static_cast<int>(cat.rows_.size());
    row.line = lineno;
    const std::string& fam = fields[0];
    if (fam.empty()) throw ParseError(where() + "empty family");
    try {
      row.family = family_from_letter(fam[0]);
      if (fam.size() > 1) {
        row.fixed_rank = std::stoi(fam.substr(1));
        if (!is_valid_rank(row.family, row.fixed_rank)) throw ParseError("invalid rank");
      } else if (row.family == Family::E || row.family == Family::F || row.family == Family::G) {
        throw ParseError("exceptional families need an explicit rank");
      }
    } catch (const std::exception& e) {
      throw ParseError(where() + "bad family '" + fam + "': " + e.what());
    }
    row.node_alternatives = split(fields[1], " or ");
    for (const auto& c : split(fields[2], ","))
      if (!c.empty()) row.constraints.push_back(c);
    row.name = fields[3];
    row.vmrt = fields[4];
    row.a_expr = fields[5];
    row.ed_expr = fields[6];
    const std::string prov = fields[7];
    bool found = false;
    for (auto p : {Provenance::Bruteforce, Provenance::ProductRule, Provenance::ProjectiveBundleRule,
                   Provenance::InPaperProof, Provenance::ImportedLiterature})
      if (provenance_name(p) == prov) row.provenance = p, found = true;
    if (!found) throw ParseError(where() + "unknown provenance '" + prov + "'");
    // Syntax check of every expression with placeholder values.
    const std::map<char, int> probe{{'n', 8}, {'k', 3}};
    try {
      for (const auto& alt : row.node_alternatives)
        if (alt != "k") eval_expr(alt, probe);
      for (const auto& c : row.constraints) eval_condition(c, probe);
      eval_expr(row.a_expr, probe);
      eval_expr(row.ed_expr, probe);
    } catch (const ParseError& e) {
      throw ParseError(where() + e.what());
    }
    cat.rows_.push_back(std::move(row));
  }
  if (cat.rows_.empty()) throw ParseError(cat.source_ + ": catalog has no rows");
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read catalog " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

namespace {
#include "vmrt_catalog.inc"
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = parse(kBuiltinCatalog, "builtin");
  return cat;
}

const CatalogRow& Catalog::row_for(const MarkedDynkin& X, std::map<char, int>* params) const {
  if (!X.is_grassmannian())
    throw NotCovered(X.to_string() + " is not a generalized Grassmannian (exactly one marked node needed)");
  for (const auto& row : rows_) {
    if (row.family != X.family()) continue;
    if (auto vars = row.bind(X.rank(), X.node())) {
      if (params) *params = *vars;
      return row;
    }
  }
  throw NotCovered(X.to_string() + " is not covered by the catalog");
}

VmrtDescriptor Catalog::vmrt_of(const MarkedDynkin& X) const {
  std::map<char, int> vars;
  const CatalogRow& row = row_for(X, &vars);
  return parse_vmrt(row.vmrt, vars);
}

int Catalog::a_of(const MarkedDynkin& X) const {
  const VmrtDescriptor d = vmrt_of(X);
  int a = -1;
  for (const auto& f : d.factors)
    for (int p : f.part_dimensions()) a = a < 0 ? p : std::min(a, p);
  return a;
}

EdValue Catalog::ed_vmrt(const MarkedDynkin& X) const { return descriptor_ed(vmrt_of(X)); }

namespace {

std::string render_name(const CatalogRow& row, const std::map<char, int>& vars) {
  if (!row.parameterized()) return row.name;
  const auto open = row.name.find('(');
  if (open == std::string::npos || row.name.back() != ')') return row.name;
  const std::string head = row.name.substr(0, open);
  const auto args = split_top(std::string_view(row.name).substr(open + 1, row.name.size() - open - 2));
  if (args.size() == 1) return head + "^" + std::to_string(eval_expr(args[0], vars));
  std::string out = head + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + std::to_string(eval_expr(args[i], vars));
  return out + ")";
}

}  // namespace

VmrtEntry Catalog::entry(const MarkedDynkin& X) const {
  std::map<char, int> vars;
  const CatalogRow& row = row_for(X, &vars);
  VmrtEntry e{X, 0, {}, {}, {}, {}, 0, {}, 0, 0, Provenance::Bruteforce};
  e.row = row.index;
  e.row_id = row.id();
  e.name = render_name(row, vars);
  e.params = vars;
  e.vmrt = parse_vmrt(row.vmrt, vars);
  e.a = -1;
  for (const auto& f : e.vmrt.factors)
    for (int p : f.part_dimensions()) e.a = e.a < 0 ? p : std::min(e.a, p);
  e.ed = descriptor_ed(e.vmrt);
  e.stored_a = eval_expr(row.a_expr, vars);
  e.stored_ed = eval_expr(row.ed_expr, vars);
  e.stored_provenance = row.provenance;
  return e;
}

Catalog Catalog::with_perturbed_ed(int row_index, int delta) const {
  if (row_index < 0 || row_index >= static_cast<int>(rows_.size())) throw InvalidInput("row index out of range");
  Catalog c = *this;
  auto& e = c.rows_[row_index].ed_expr;
  e = "(" + e + ")" + (delta >= 0 ? "+" : "-") + std::to_string(delta >= 0 ? delta : -delta);
  return c;
}

VmrtDescriptor vmrt_of(const MarkedDynkin& X) { return Catalog::builtin().vmrt_of(X); }
int a_of(const MarkedDynkin& X) { return Catalog::builtin().a_of(X); }
EdValue ed_vmrt(const MarkedDynkin& X) { return Catalog::builtin().ed_vmrt(X); }

// ---------------------------------------------------------------- verification

namespace {

constexpr int kRankCap = 12;

std::vector<int> offsets(int samples) {
  std::vector<int> d{0, 1, 3, 2};
  for (int i = 4; static_cast<int>(d.size()) < samples; ++i) d.push_back(i);
  d.resize(std::max(samples, 0));
  return d;
}

}  // namespace

std::vector<std::map<char, int>> sample_parameters(const CatalogRow& row, int samples) {
  std::vector<std::map<char, int>> out;
  auto push = [&](std::map<char, int> v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  };
  // The node is carried under '@' so that alternatives stay distinguishable.
  auto bound = [&row](int n, int node) {
    auto v = row.bind(n, node);
    if (v) (*v)['@'] = node;
    return v;
  };
  if (!row.parameterized()) {
    const int n = row.fixed_rank;
    for (int node = 1; node <= n; ++node)
      if (auto v = bound(n, node)) push(*v);
    if (static_cast<int>(out.size()) > samples) out.resize(samples);
    return out;
  }
  // Legal (n, node) pairs up to the rank cap.
  std::map<int, std::vector<std::map<char, int>>> legal;
  for (int n = 1; n <= kRankCap; ++n)
    for (int node = 1; node <= n; ++node)
      if (auto v = bound(n, node)) legal[n].push_back(*v);
  if (legal.empty()) return out;
  std::vector<int> ns;
  for (const auto& [n, _] : legal) ns.push_back(n);
  int i = 0;
  for (int d : offsets(samples)) {
    const int want = ns.front() + d;
    auto it = std::lower_bound(ns.begin(), ns.end(), want);
    const int n = it == ns.end() ? ns.back() : *it;
    const auto& choices = legal[n];
    if (row.binds_k()) {
      // choices are ordered by k; step k by the same offset, clipped.
      push(choices[std::min<std::size_t>(d, choices.size() - 1)]);
    } else {
      push(choices[i % choices.size()]);
    }
    ++i;
  }
  return out;
}

TableReport verify_table(const Catalog& catalog, int samples) {
  auto check_row = [&catalog, samples](const CatalogRow& row) {
    RowReport rep;
    rep.row = row.index;
    rep.id = row.id();
    rep.name = row.name;
    const auto params = sample_parameters(row, samples);
    for (const auto& vars : params) {
      RowSample s;
      s.params = vars;
      s.params.erase('@');
      try {
        const int n = vars.at('n'), node = vars.at('@');
        const MarkedDynkin X(DynkinType::make(row.family, n), {node});
        s.X = X.to_string();
        const VmrtEntry e = catalog.entry(X);
        if (e.row != row.index) throw Error("instantiation is matched by row " + std::to_string(e.row) + " first");
        s.a = e.a;
        s.stored_a = e.stored_a;
        s.ed = e.ed.value;
        s.stored_ed = e.stored_ed;
        s.provenance = provenance_name(e.ed.provenance);
        s.stored_provenance = provenance_name(e.stored_provenance);
        s.passed = s.a == s.stored_a && s.ed == s.stored_ed && s.provenance == s.stored_provenance;
        if (!s.passed) s.error = "mismatch";
      } catch (const std::exception& ex) {
        s.passed = false;
        s.error = ex.what();
      }
      rep.samples.push_back(std::move(s));
    }
    rep.passed = !rep.samples.empty() &&
                 std::all_of(rep.samples.begin(), rep.samples.end(), [](const RowSample& s) { return s.passed; });
    return rep;
  };
  std::vector<std::future<RowReport>> jobs;
  for (const auto& row : catalog.rows()) jobs.push_back(std::async(std::launch::async, check_row, std::cref(row)));
  TableReport out;
  for (auto& j : jobs) out.rows.push_back(j.get());
  out.failed_rows = static_cast<int>(std::count_if(out.rows.begin(), out.rows.end(), [](const RowReport& r) { return !r.passed; }));
  out.passed = out.failed_rows == 0;
  return out;
}

TableReport verify_table(int samples) { return verify_table(Catalog::builtin(), samples); }

}  // namespace flagcalc
