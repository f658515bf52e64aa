#include "gradedring.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace flagcalc {

struct RingPresentation::Impl {
  std::string name;
  std::vector<Generator> gens;
  std::vector<Polynomial> relations;
  std::vector<std::string> names;
  std::vector<int> weights;

  mutable std::mutex mu;
  mutable std::map<int, std::unique_ptr<DegreeSlice>> slices;
};

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::unique_ptr<DegreeSlice> compute_slice(const RingPresentation& ring, int d) {
  auto s = std::make_unique<DegreeSlice>();
  s->degree = d;
  const auto& w = ring.weights();
  s->monomials = monomials_of_degree(w, d);
  auto& column = s->column;
  for (std::size_t i = 0; i < s->monomials.size(); ++i)
    column[s->monomials[i]] = static_cast<int>(i);
  const int ncols = static_cast<int>(s->monomials.size());
  for (const Polynomial& r : ring.relations()) {
    if (r.is_zero()) continue;
    const int dr = r.max_degree(w);
    if (dr > d) continue;
    for (const Monomial& m : monomials_of_degree(w, d - dr)) {
      Vector row(ncols, 0);
      for (const auto& [rm, c] : r.terms()) {
        Monomial t = rm;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += m[i];
        row[column.at(t)] += c;
      }
      s->rows.push_back(std::move(row));
    }
  }
  s->pivots = rref(s->rows, ncols);
  std::vector<bool> pivot(ncols, false);
  for (int c : s->pivots) pivot[c] = true;
  for (int c = 0; c < ncols; ++c)
    if (!pivot[c]) s->basis.push_back(s->monomials[c]);
  return s;
}

Vector to_vector(const DegreeSlice& s, const Polynomial& p) {
  Vector v(s.monomials.size(), 0);
  for (const auto& [m, c] : p.terms()) v[s.column.at(m)] = c;
  return v;
}

}  // namespace

RingPresentation::RingPresentation(std::string name, std::vector<Generator> gens,
                                   std::vector<Polynomial> relations) {
  auto impl = std::make_shared<Impl>();
  if (!is_identifier(name)) throw InvalidInput("ring name must be an identifier: '" + name + "'");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    if (!is_identifier(g.name)) throw InvalidInput("bad generator name '" + g.name + "'");
    if (g.degree < 1) throw InvalidInput("generator " + g.name + " must have positive degree");
    if (!seen.insert(g.name).second) throw InvalidInput("duplicate generator name " + g.name);
    impl->names.push_back(g.name);
    impl->weights.push_back(g.degree);
  }
  for (const auto& r : relations) {
    if (r.nvars() != static_cast<int>(gens.size()))
      throw InvalidInput("relation arity does not match the generator list");
    if (!r.is_homogeneous(impl->weights))
      throw InvalidInput("relation " + format_polynomial(r, impl->names, impl->weights) +
                         " is not homogeneous");
  }
  impl->name = std::move(name);
  impl->gens = std::move(gens);
  impl->relations = std::move(relations);
  impl_ = std::move(impl);
}

RingPresentation RingPresentation::from_strings(std::string name, std::vector<Generator> gens,
                                                const std::vector<std::string>& relations) {
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, names));
  return RingPresentation(std::move(name), std::move(gens), std::move(rels));
}

RingPresentation RingPresentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string name;
  std::vector<Generator> gens;
  std::vector<std::string> rels;
  bool header = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (header) {
      rels.push_back(line);
      continue;
    }
    // ring <name>; gens g:deg,...;
    if (line.rfind("ring ", 0) != 0)
      throw ParseError("ring text must start with 'ring <name>; gens g:deg,...;'");
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw ParseError("missing ';' after ring name");
    name = trim(std::string_view(line).substr(5, semi - 5));
    std::string rest = trim(std::string_view(line).substr(semi + 1));
    if (rest.rfind("gens", 0) != 0) throw ParseError("expected 'gens' after ring name");
    rest = trim(std::string_view(rest).substr(4));
    if (rest.empty() || rest.back() != ';') throw ParseError("generator list must end with ';'");
    rest.pop_back();
    std::stringstream list(rest);
    std::string item;
    while (std::getline(list, item, ',')) {
      item = trim(item);
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw ParseError("generator '" + item + "' lacks ':degree'");
      const std::string deg = trim(std::string_view(item).substr(colon + 1));
      if (deg.empty() || deg.size() > 4 ||
          !std::all_of(deg.begin(), deg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad degree in generator '" + item + "'");
      gens.push_back({trim(std::string_view(item).substr(0, colon)), std::stoi(deg)});
    }
    header = true;
  }
  if (!header) throw ParseError("empty ring text");
  return from_strings(std::move(name), std::move(gens), rels);
}

std::string RingPresentation::export_text() const {
  std::string out = "ring " + impl_->name + "; gens ";
  for (std::size_t i = 0; i < impl_->gens.size(); ++i) {
    if (i) out += ",";
    out += impl_->gens[i].name + ":" + std::to_string(impl_->gens[i].degree);
  }
  out += ";\n";
  for (const auto& r : impl_->relations) out += format(r) + "\n";
  return out;
}

const std::string& RingPresentation::name() const { return impl_->name; }
const std::vector<Generator>& RingPresentation::generators() const { return impl_->gens; }
const std::vector<Polynomial>& RingPresentation::relations() const { return impl_->relations; }
int RingPresentation::nvars() const { return static_cast<int>(impl_->gens.size()); }
const std::vector<std::string>& RingPresentation::names() const { return impl_->names; }
const std::vector<int>& RingPresentation::weights() const { return impl_->weights; }

int RingPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < impl_->names.size(); ++i)
    if (impl_->names[i] == name) return static_cast<int>(i);
  throw InvalidInput("ring " + impl_->name + " has no generator '" + std::string(name) + "'");
}

Polynomial RingPresentation::gen(std::string_view name) const {
  return Polynomial::variable(nvars(), generator_index(name));
}

Polynomial RingPresentation::one() const { return Polynomial::constant(nvars(), 1); }

Polynomial RingPresentation::parse_poly(std::string_view text) const {
  return parse_polynomial(text, impl_->names);
}

std::string RingPresentation::format(const Polynomial& p) const {
  return format_polynomial(p, impl_->names, impl_->weights);
}

int RingPresentation::degree_of(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw InvalidInput("polynomial is not over the generators of " + name());
  if (!p.is_homogeneous(impl_->weights))
    throw InvalidInput("polynomial " + format(p) + " is not homogeneous");
  return std::max(0, p.max_degree(impl_->weights));
}

const DegreeSlice& RingPresentation::slice(int d) const {
  if (d < 0) throw InvalidInput("negative degree");
  std::lock_guard lock(impl_->mu);
  auto& entry = impl_->slices[d];
  if (!entry) entry = compute_slice(*this, d);
  return *entry;
}

Vector ChowClass::coordinates() const {
  const DegreeSlice& s = ring_.slice(degree_);
  Vector v;
  for (const auto& m : s.basis) v.push_back(poly_.coefficient(m));
  return v;
}

std::vector<Monomial> graded_piece(const RingPresentation& ring, int d) {
  return ring.slice(d).basis;
}

int ideal_slice_dim(const RingPresentation& ring, int d) {
  return static_cast<int>(ring.slice(d).pivots.size());
}

std::vector<Polynomial> ideal_slice(const RingPresentation& ring, int d) {
  const DegreeSlice& s = ring.slice(d);
  std::vector<Polynomial> out;
  for (const auto& row : s.rows) {
    Polynomial p(ring.nvars());
    for (std::size_t c = 0; c < row.size(); ++c) p.add_term(s.monomials[c], row[c]);
    out.push_back(std::move(p));
  }
  return out;
}

ChowClass normal_form(const RingPresentation& ring, const Polynomial& p) {
  const int d = ring.degree_of(p);
  const DegreeSlice& s = ring.slice(d);
  const Vector v = reduce(to_vector(s, p), s.rows, s.pivots);
  Polynomial out(ring.nvars());
  for (std::size_t c = 0; c < v.size(); ++c) out.add_term(s.monomials[c], v[c]);
  return ChowClass(ring, d, std::move(out));
}

ChowClass normal_form(const RingPresentation& ring, std::string_view p) {
  return normal_form(ring, ring.parse_poly(p));
}

bool ideal_contains(const RingPresentation& ring, const Polynomial& p) {
  return normal_form(ring, p).is_zero();
}

ChowClass multiply(const ChowClass& a, const ChowClass& b) {
  if (!a.ring().same_ring(b.ring())) throw InvalidInput("cannot multiply classes from different rings");
  ChowClass c = normal_form(a.ring(), a.poly() * b.poly());
  return ChowClass(a.ring(), a.degree() + b.degree(), c.poly());
}

ChowClass add(const ChowClass& a, const ChowClass& b) {
  if (!a.ring().same_ring(b.ring())) throw InvalidInput("cannot add classes from different rings");
  if (a.degree() != b.degree() && !a.is_zero() && !b.is_zero())
    throw InvalidInput("cannot add classes of different degrees");
  const int d = a.is_zero() ? b.degree() : a.degree();
  return ChowClass(a.ring(), d, a.poly() + b.poly());
}

ChowClass scale(const ChowClass& a, const Rational& c) {
  return ChowClass(a.ring(), a.degree(), a.poly() * c);
}

std::vector<int> hilbert_series(const RingPresentation& ring, int max_degree) {
  std::vector<int> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(static_cast<int>(graded_piece(ring, d).size()));
  return out;
}

int top_degree(const RingPresentation& ring, int degree_cap) {
  const auto& w = ring.weights();
  const int span = w.empty() ? 1 : *std::max_element(w.begin(), w.end());
  int zeros = 0, top = -1;
  for (int d = 0; d <= degree_cap; ++d) {
    if (graded_piece(ring, d).empty()) {
      // Every monomial of degree >= D is divisible by one of degree in [D, D+span).
      if (++zeros == span) return top;
    } else {
      zeros = 0;
      top = d;
    }
  }
  throw Error("ring " + ring.name() + " is not finite below degree " + std::to_string(degree_cap));
}

int total_dimension(const RingPresentation& ring, int degree_cap) {
  const int top = top_degree(ring, degree_cap);
  int total = 0;
  for (int d = 0; d <= top; ++d) total += static_cast<int>(graded_piece(ring, d).size());
  return total;
}

bool is_irreducible_quadratic_in(const Polynomial& p, int var) {
  if (var < 0 || var >= p.nvars()) throw InvalidInput("variable index out of range");
  if (p.is_zero()) return false;
  const int deg = p.degree_in(var);
  if (deg > 2)
    throw UnsupportedShape("degree " + std::to_string(deg) +
                           " in the chosen variable; only degree <= 2 is certified");
  const Monomial content = p.monomial_content();
  int content_degree = 0;
  for (int e : content) content_degree += e;
  if (content_degree > 0) {
    // A monomial factor splits off; only a single variable is irreducible.
    if (p.size() == 1) return content_degree == 1;
    return false;
  }
  const Polynomial lc = p.coefficient_in(var, deg);
  if (!lc.is_constant())
    throw UnsupportedShape("leading coefficient in the chosen variable is not constant");
  if (deg == 0) return false;  // nonzero constant: a unit
  if (deg == 1) return true;
  const Polynomial b = p.coefficient_in(var, 1);
  const Polynomial c = p.coefficient_in(var, 0);
  const Polynomial disc = b * b - Rational(4) * lc * c;
  Polynomial root;
  return !polynomial_sqrt(disc, root);
}

bool is_irreducible_quadratic_in(const RingPresentation& ring, const Polynomial& p,
                                 std::string_view var) {
  ring.degree_of(p);
  return is_irreducible_quadratic_in(p, ring.generator_index(var));
}

}  // namespace flagcalc
