#include "polynomial.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace flagcalc {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw InvalidInput("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != nvars_) throw InvalidInput("monomial arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * (weights.empty() ? 1 : weights[i]);
  return d;
}

int Polynomial::max_degree(const std::vector<int>& weights) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m, weights));
  return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights) const {
  if (terms_.empty()) return true;
  const int d = weighted_degree(terms_.begin()->first, weights);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return weighted_degree(t.first, weights) == d; });
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
  return d;
}

Polynomial Polynomial::coefficient_in(int var, int e) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) != e) continue;
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < nvars_; ++i) g[i] = std::min(g[i], m[i]);
  return g;
}

void Polynomial::check_vars(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("polynomials over different generator sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_vars(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_vars(b);
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InvalidInput("negative exponent");
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {

// Lex order on exponent vectors: the leading term for division purposes.
const std::pair<const Monomial, Rational>& lead(const Polynomial& p) {
  return *p.terms().rbegin();
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

}  // namespace

Polynomial exact_divide(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw InvalidInput("division by zero polynomial");
  Polynomial rem = p;
  Polynomial q(p.nvars());
  const auto& [dm, dc] = lead(divisor);
  while (!rem.is_zero()) {
    const auto [rm, rc] = lead(rem);
    if (!divides(dm, rm)) throw InvalidInput("polynomial division is not exact");
    const Polynomial t = Polynomial::monomial(quotient(rm, dm), rc / dc);
    q += t;
    rem -= t * divisor;
  }
  return q;
}

bool polynomial_sqrt(const Polynomial& p, Polynomial& root) {
  root = Polynomial(p.nvars());
  if (p.is_zero()) return true;
  const auto& [m0, c0] = lead(p);
  if (!is_rational_square(c0)) return false;
  Monomial half(m0.size());
  for (std::size_t i = 0; i < m0.size(); ++i) {
    if (m0[i] % 2) return false;
    half[i] = m0[i] / 2;
  }
  const Rational r0 = rational_sqrt(c0);
  root = Polynomial::monomial(half, r0);
  // Each new term is strictly lex-smaller than the previous one, so the
  // loop runs at most once per monomial below `half`.
  Monomial last = half;
  for (;;) {
    const Polynomial rem = p - root * root;
    if (rem.is_zero()) return true;
    const auto& [rm, rc] = lead(rem);
    if (!divides(half, rm)) return false;
    const Monomial tm = quotient(rm, half);
    if (!(tm < last)) return false;
    root += Polynomial::monomial(tm, rc / (2 * r0));
    last = tm;
  }
}

bool monomial_less(const Monomial& a, const Monomial& b, const std::vector<int>& weights) {
  const int da = weighted_degree(a, weights), db = weighted_degree(b, weights);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<Monomial> monomials_of_degree(const std::vector<int>& weights, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = static_cast<int>(weights.size());
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e * weights[i] <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e * weights[i]);
    }
    cur[i] = 0;
  };
  if (n > 0) rec(rec, 0, d);
  else if (d == 0) out.push_back(cur);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return monomial_less(b, a, weights); });
  return out;
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string whole(text);
  if (s.empty()) throw ParseError("empty polynomial");
  Polynomial p(n);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse polynomial '" + whole + "': " + why);
  };
  auto read_int = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || i - start > 9) fail("expected an exponent");
    return std::stoi(s.substr(start, i - start));
  };
  bool first = true;
  while (i < s.size()) {
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Monomial m(n, 0);
    bool any = false;
    for (;;) {
      if (i >= s.size()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        const std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        coeff *= parse_rational(s.substr(start, i - start));
      } else if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
        const std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        const std::string name = s.substr(start, i - start);
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) fail("unknown generator '" + name + "'");
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = read_int();
        }
        m[it - names.begin()] += e;
      } else {
        fail(std::string("unexpected character '") + s[i] + "'");
      }
      any = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    p.add_term(m, sign * coeff);
  }
  return p;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names,
                              const std::vector<int>& weights) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return monomial_less(b->first, a->first, weights); });
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    Rational c = t->second;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    c = abs(c);
    std::string body;
    for (std::size_t v = 0; v < names.size(); ++v) {
      const int e = t->first[v];
      if (e == 0) continue;
      if (!body.empty()) body += "*";
      body += names[v];
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) out += c.get_str();
    else if (c == 1) out += body;
    else out += c.get_str() + "*" + body;
  }
  return out;
}

void uni_trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

namespace {

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    uni_trim(a);
  }
  return a;
}

}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Rational uni_eval(const UniPoly& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

std::vector<Rational> uni_rational_roots(UniPoly p) {
  uni_trim(p);
  if (p.empty()) throw InvalidInput("zero polynomial has every number as a root");
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < p.size() && sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.insert(Rational(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
  }
  if (p.size() > 1) {
    // Clear denominators, then apply the rational root theorem.
    Integer l = 1;
    for (const auto& c : p) l = lcm(l, c.get_den());
    std::vector<Integer> z;
    for (const auto& c : p) z.push_back(Integer(c * l));
    auto divisors = [](Integer v) {
      v = abs(v);
      std::vector<Integer> ds;
      for (Integer d = 1; d * d <= v; ++d)
        if (v % d == 0) {
          ds.push_back(d);
          if (d * d != v) ds.push_back(v / d);
        }
      return ds;
    };
    for (const Integer& num : divisors(z.front()))
      for (const Integer& den : divisors(z.back()))
        for (int s : {1, -1}) {
          Rational cand(num * s, den);
          cand.canonicalize();
          if (sgn(uni_eval(p, cand)) == 0) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

UniPoly uni_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  UniPoly result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    UniPoly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      UniPoly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += ys[i] * basis[k] / denom;
  }
  uni_trim(result);
  return result;
}

}  // namespace flagcalc
