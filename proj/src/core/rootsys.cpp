#include "rootsys.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace flagcalc {

namespace {

constexpr Family kFamilies[] = {Family::A, Family::B, Family::C, Family::D,
                                Family::E, Family::F, Family::G};

// Squared root lengths (scaled so short simply-laced roots have length 2),
// and the bonds of the diagram.
struct DiagramData {
  std::vector<int> length2;
  std::vector<std::pair<int, int>> edges;  // 1-based
};

DiagramData diagram_data(const DynkinType& t) {
  const int n = t.rank;
  DiagramData d;
  d.length2.assign(n, 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n);
      for (int i = 0; i < n - 1; ++i) d.length2[i] = 4;
      break;
    case Family::C:
      chain(1, n);
      d.length2[n - 1] = 4;
      break;
    case Family::D:
      chain(1, n - 1);
      d.edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      d.edges.emplace_back(1, 3);
      chain(3, n);
      d.edges.emplace_back(2, 4);
      break;
    case Family::F:
      chain(1, 4);
      d.length2 = {4, 4, 2, 2};
      break;
    case Family::G:
      chain(1, 2);
      d.length2 = {2, 6};
      break;
  }
  return d;
}

int count_inversions(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

// Identify a connected subdiagram. `nodes` are ambient labels in the order
// used for tie-breaking between isomorphisms.
LeviComponent identify_component(const DynkinType& ambient, const std::vector<int>& nodes) {
  const CartanMatrix amb = cartan_matrix(ambient);
  const int r = static_cast<int>(nodes.size());
  for (Family f : kFamilies) {
    if (!is_valid_rank(f, r)) continue;
    const DynkinType cand{f, r};
    const CartanMatrix std_matrix = cartan_matrix(cand);
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    std::vector<int> best;
    int best_inv = 0;
    do {
      bool ok = true;
      for (int u = 0; u < r && ok; ++u)
        for (int v = 0; v < r && ok; ++v)
          ok = amb[nodes[u] - 1][nodes[v] - 1] == std_matrix[perm[u]][perm[v]];
      if (!ok) continue;
      const int inv = count_inversions(perm);
      if (!found || inv < best_inv || (inv == best_inv && perm < best)) {
        found = true;
        best = perm;
        best_inv = inv;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (found) {
      LeviComponent c{cand, std::vector<int>(r)};
      for (int u = 0; u < r; ++u) c.ambient_nodes[best[u]] = nodes[u];
      return c;
    }
  }
  throw Error("unidentifiable Dynkin subdiagram");
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

int parse_positive_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 4)
    throw ParseError("expected a node index in '" + std::string(whole) + "'");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a node index in '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family family_from_letter(char c) {
  const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u < 'A' || u > 'G') throw ParseError(std::string("unknown Dynkin family '") + c + "'");
  return static_cast<Family>(u - 'A');
}

bool is_valid_rank(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

DynkinType DynkinType::make(Family family, int rank) {
  if (!is_valid_rank(family, rank))
    throw InvalidInput(std::string("invalid rank ") + std::to_string(rank) + " for type " +
                       family_letter(family));
  return DynkinType{family, rank};
}

std::string DynkinType::to_string() const { return family_letter(family) + std::to_string(rank); }

CartanMatrix cartan_matrix(const DynkinType& t) {
  const DiagramData d = diagram_data(t);
  CartanMatrix a(t.rank, std::vector<int>(t.rank, 0));
  for (int i = 0; i < t.rank; ++i) a[i][i] = 2;
  for (auto [u, v] : d.edges) {
    const int i = u - 1, j = v - 1;
    // (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2) / 2 for a bond.
    const int ip = -std::max(d.length2[i], d.length2[j]) / 2;
    a[i][j] = 2 * ip / d.length2[i];
    a[j][i] = 2 * ip / d.length2[j];
  }
  return a;
}

std::vector<std::vector<int>> dynkin_adjacency(const DynkinType& t) {
  std::vector<std::vector<int>> adj(t.rank + 1);
  for (auto [u, v] : diagram_data(t).edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

MarkedDynkin::MarkedDynkin(DynkinType type, std::vector<int> marked)
    : type_(DynkinType::make(type.family, type.rank)), marked_(std::move(marked)) {
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  if (marked_.empty()) throw InvalidInput("marked node set must be nonempty");
  for (int i : marked_)
    if (i < 1 || i > type_.rank)
      throw InvalidInput("marked node " + std::to_string(i) + " out of range for " +
                         type_.to_string());
}

MarkedDynkin MarkedDynkin::full_flag(DynkinType type) {
  std::vector<int> all(type.rank);
  std::iota(all.begin(), all.end(), 1);
  return MarkedDynkin(type, std::move(all));
}

namespace {
constexpr const char* kVarietyGrammar = "expected <FAMILY><rank>/P<i1>,<i2>,... or <FAMILY><rank>/Pminus<k>";
MarkedDynkin parse_variety(std::string_view text);
}  // namespace

MarkedDynkin MarkedDynkin::parse(std::string_view text) {
  try {
    return parse_variety(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + "; " + kVarietyGrammar);
  }
}

namespace {
MarkedDynkin parse_variety(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const std::string u = upper(s);
  const auto slash = u.find('/');
  if (u.size() < 2 || slash == std::string::npos || slash < 2 || slash + 2 > u.size() ||
      u[slash + 1] != 'P')
    throw ParseError("cannot parse variety '" + std::string(text) + "'");
  const Family fam = family_from_letter(u[0]);
  const int rank = parse_positive_int(std::string_view(u).substr(1, slash - 1), text);
  const DynkinType type = DynkinType::make(fam, rank);
  std::string_view rest = std::string_view(u).substr(slash + 2);
  std::vector<int> marked;
  if (rest.rfind("MINUS", 0) == 0) {
    const int k = parse_positive_int(rest.substr(5), text);
    if (k < 1 || k > rank) throw InvalidInput("Pminus index out of range in '" + std::string(text) + "'");
    for (int i = 1; i <= rank; ++i)
      if (i != k) marked.push_back(i);
    if (marked.empty()) throw InvalidInput("Pminus leaves no marked node in '" + std::string(text) + "'");
  } else {
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const auto piece = rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - pos);
      marked.push_back(parse_positive_int(piece, text));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return MarkedDynkin(type, std::move(marked));
}
}  // namespace

bool MarkedDynkin::has_mark(int node) const {
  return std::binary_search(marked_.begin(), marked_.end(), node);
}

int MarkedDynkin::node() const {
  if (!is_grassmannian()) throw InvalidInput(to_string() + " has more than one marked node");
  return marked_.front();
}

std::string MarkedDynkin::to_string() const {
  std::string s = type_.to_string() + "/P";
  for (std::size_t i = 0; i < marked_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(marked_[i]);
  }
  return s;
}

RootSystem build_root_system(const DynkinType& input) {
  const DynkinType t = DynkinType::make(input.family, input.rank);
  const CartanMatrix a = cartan_matrix(t);
  const int n = t.rank;
  std::set<Root> seen;
  std::vector<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Root beta = queue[head];
    for (int i = 0; i < n; ++i) {
      int pairing = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
      if (pairing == 0) continue;
      Root image = beta;
      image[i] -= pairing;
      // s_i permutes the positive roots other than alpha_i.
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  std::sort(queue.begin(), queue.end(), [](const Root& x, const Root& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x > y;
  });
  return RootSystem{t, std::move(queue)};
}

const RootSystem& root_system(const DynkinType& t) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, RootSystem> cache;
  const auto key = std::make_pair(static_cast<int>(t.family), t.rank);
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_root_system(t)).first;
  return it->second;
}

int dim_quotient(const MarkedDynkin& m) {
  const RootSystem& rs = root_system(m.type());
  int count = 0;
  for (const Root& r : rs.positive_roots)
    for (int i : m.marked())
      if (r[i - 1] != 0) {
        ++count;
        break;
      }
  return count;
}

int LeviComponent::label_of(int ambient_node) const {
  for (std::size_t i = 0; i < ambient_nodes.size(); ++i)
    if (ambient_nodes[i] == ambient_node) return static_cast<int>(i) + 1;
  throw InvalidInput("node " + std::to_string(ambient_node) + " not in component");
}

std::vector<LeviComponent> levi_components(const DynkinType& t, const std::vector<int>& removed) {
  const auto adj = dynkin_adjacency(t);
  std::vector<bool> gone(t.rank + 1, false), visited(t.rank + 1, false);
  for (int r : removed) {
    if (r < 1 || r > t.rank) throw InvalidInput("node out of range");
    gone[r] = true;
  }
  // Tie-break order: Bourbaki order, except that the E branch node 2 goes last.
  auto order_key = [&](int v) { return (t.family == Family::E && v == 2) ? 100 : v; };
  std::vector<LeviComponent> out;
  for (int start = 1; start <= t.rank; ++start) {
    if (gone[start] || visited[start]) continue;
    std::vector<int> comp, stack{start};
    visited[start] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (!gone[w] && !visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end(),
              [&](int x, int y) { return order_key(x) < order_key(y); });
    out.push_back(identify_component(t, comp));
  }
  return out;
}

int FiberDecomposition::dimension() const {
  int d = 0;
  for (const auto& f : fiber_factors) d += dim_quotient(f);
  return d;
}

FiberDecomposition tits_fiber(const MarkedDynkin& total, std::vector<int> base_marks) {
  std::sort(base_marks.begin(), base_marks.end());
  base_marks.erase(std::unique(base_marks.begin(), base_marks.end()), base_marks.end());
  if (base_marks.empty()) throw InvalidInput("base marks must be nonempty");
  for (int b : base_marks)
    if (!total.has_mark(b))
      throw InvalidInput("base mark " + std::to_string(b) + " is not marked in " + total.to_string());
  if (base_marks.size() == total.marked().size())
    throw InvalidInput("base marks must be a proper subset of the total marks");
  FiberDecomposition fd{MarkedDynkin(total.type(), base_marks), total, {}};
  for (const LeviComponent& c : levi_components(total.type(), base_marks)) {
    std::vector<int> residual;
    for (int v : c.ambient_nodes)
      if (total.has_mark(v)) residual.push_back(c.label_of(v));
    if (!residual.empty()) fd.fiber_factors.emplace_back(c.type, std::move(residual));
  }
  return fd;
}

}  // namespace flagcalc
