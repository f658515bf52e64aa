#pragma once

// Reference computations used only by the tests. Nothing here calls into the
// library; each routine takes a different road to a number the library also
// produces.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Diagram {
  int rank = 0;
  std::vector<int> len2;                        // squared root lengths
  std::vector<std::pair<int, int>> bonds;       // 1-based (i, j)
};

// Bourbaki numbering, written out by hand.
inline Diagram diagram(char family, int n) {
  Diagram d;
  d.rank = n;
  d.len2.assign(n, 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.bonds.push_back({i, i + 1});
  };
  switch (family) {
    case 'A': chain(1, n); break;
    case 'B': chain(1, n); d.len2.assign(n, 4); d.len2[n - 1] = 2; break;
    case 'C': chain(1, n); d.len2[n - 1] = 4; break;
    case 'D': chain(1, n - 1); d.bonds.push_back({n - 2, n}); break;
    case 'E':
      d.bonds = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) d.bonds.push_back({i, i + 1});
      break;
    case 'F': chain(1, 4); d.len2 = {4, 4, 2, 2}; break;
    case 'G': chain(1, 2); d.len2 = {2, 6}; break;
    default: throw std::invalid_argument("family");
  }
  return d;
}

// (alpha_i, alpha_j) for a bond equals minus half the longer squared length.
inline std::vector<std::vector<int>> inner_products(const Diagram& d) {
  std::vector<std::vector<int>> b(d.rank, std::vector<int>(d.rank, 0));
  for (int i = 0; i < d.rank; ++i) b[i][i] = d.len2[i];
  for (auto [i, j] : d.bonds) {
    const int v = -std::max(d.len2[i - 1], d.len2[j - 1]) / 2;
    b[i - 1][j - 1] = b[j - 1][i - 1] = v;
  }
  return b;
}

// Orbit of the simple roots under the simple reflections, positive half.
inline std::vector<std::vector<int>> positive_roots(char family, int n) {
  const Diagram d = diagram(family, n);
  const auto b = inner_products(d);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto beta = queue[q];
    for (int i = 0; i < n; ++i) {
      int ip = 0;
      for (int j = 0; j < n; ++j) ip += beta[j] * b[j][i];
      const int c = 2 * ip / d.len2[i];
      auto img = beta;
      img[i] -= c;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) pos.push_back(r);
  return pos;
}

inline int dim_by_roots(char family, int n, const std::vector<int>& marks) {
  int count = 0;
  for (const auto& r : positive_roots(family, n))
    for (int m : marks)
      if (r[m - 1] != 0) {
        ++count;
        break;
      }
  return count;
}

inline int positive_root_count_closed_form(char family, int n) {
  switch (family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::invalid_argument("family");
}

// Dimensions of the classical isotropic Grassmannians from linear algebra.
inline int classical_grassmannian_dim(char family, int n, int k) {
  switch (family) {
    case 'A': return k * (n + 1 - k);
    case 'B': return k * (2 * n + 1 - k) - k * (k + 1) / 2;
    case 'C': return k * (2 * n - k) - k * (k - 1) / 2;
    case 'D':
      if (k >= n - 1) return n * (n - 1) / 2;
      return k * (2 * n - k) - k * (k + 1) / 2;
  }
  throw std::invalid_argument("family");
}

// Signed permutations of 1..n act on e_1..e_n; positive roots of B_n are
// e_i - e_j, e_i + e_j (i < j) and e_i. Length = number of positive roots
// sent to negative ones.
inline int signed_perm_length(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  auto image_sign = [&](std::vector<int> v) {
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i) {
      const int t = std::abs(w[i]) - 1;
      out[t] += (w[i] > 0 ? 1 : -1) * v[i];
    }
    for (int x : out)
      if (x != 0) return x > 0;
    return true;
  };
  int len = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    if (!image_sign(e)) ++len;
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> a(n, 0), b(n, 0);
      a[i] = 1, a[j] = -1;
      b[i] = 1, b[j] = 1;
      if (!image_sign(a)) ++len;
      if (!image_sign(b)) ++len;
    }
  }
  return len;
}

// Length generating function of the minimal coset representatives of
// W(B_n) modulo the subgroup generated by the sign change of e_n.
inline std::vector<int> bc_min_coset_lengths(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::map<int, int> counts;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      std::vector<int> w(n);
      for (int i = 0; i < n; ++i) w[i] = (signs >> i & 1) ? -perm[i] : perm[i];
      auto ws = w;
      ws[n - 1] = -ws[n - 1];  // w * s_n
      const int l = signed_perm_length(w);
      if (signed_perm_length(ws) > l) ++counts[l];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<int> out(counts.empty() ? 0 : counts.rbegin()->first + 1, 0);
  for (auto [l, c] : counts) out[l] = c;
  return out;
}

inline int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace oracle
