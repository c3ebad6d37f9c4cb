#pragma once

// Independent reference computations used to cross-examine the library.
// Nothing here calls the classifier or the enumerators under test.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "kacscope/affine.hpp"

namespace oracle {

using kacscope::NodeSet;
using kacscope::affine::AffineDiagram;

// a[i][j] = 2(a_i, a_j) / (a_j, a_j) on the nodes of s, indexed by position in s.
inline std::vector<std::vector<int>> cartan(const AffineDiagram& d, const std::vector<int>& s) {
  const auto n = s.size();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto pos = [&](int v) {
    const auto it = std::find(s.begin(), s.end(), v);
    return it == s.end() ? -1 : static_cast<int>(it - s.begin());
  };
  for (const auto& e : d.edges()) {
    const int u = pos(e.u), v = pos(e.v);
    if (u < 0 || v < 0) continue;
    if (e.arrow_to < 0) {
      a[u][v] = a[v][u] = -e.multiplicity;
      continue;
    }
    const int shrt = e.arrow_to == e.u ? u : v;
    const int lng = shrt == u ? v : u;
    a[lng][shrt] = -e.multiplicity;
    a[shrt][lng] = -1;
  }
  return a;
}

// Number of roots of the finite root system on s, by closing the simple roots
// under simple reflections.  Fails loudly (returns -1) past `cap` roots.
inline int root_count(const AffineDiagram& d, NodeSet set, int cap = 100000) {
  const auto s = set.elements();
  const auto a = cartan(d, s);
  const auto n = s.size();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    roots.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (std::size_t j = 0; j < n; ++j) {
        int pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += r[i] * a[i][j];
        auto t = r;
        t[j] -= pairing;
        if (roots.insert(t).second) next.push_back(t);
      }
    }
    if (static_cast<int>(roots.size()) > cap) return -1;
    frontier = std::move(next);
  }
  return static_cast<int>(roots.size());
}

inline long long f_value(const AffineDiagram& d, NodeSet j) {
  const long long upper = d.label_sum(d.all() - j);
  const long long lower = d.label_sum(j);
  return upper * root_count(d, j) - static_cast<long long>(d.rank()) * lower;
}

inline bool preserves(const AffineDiagram& d, const std::vector<int>& p) {
  for (int i = 0; i < d.size(); ++i)
    if (d.label(i) != d.label(p[i])) return false;
  for (const auto& e : d.edges()) {
    bool found = false;
    for (const auto& f : d.edges()) {
      const bool same = f.u == p[e.u] && f.v == p[e.v];
      const bool flip = f.u == p[e.v] && f.v == p[e.u];
      if (!same && !flip) continue;
      const int arrow = e.arrow_to < 0 ? -1 : p[e.arrow_to];
      found = f.multiplicity == e.multiplicity && f.arrow_to == arrow;
      break;
    }
    if (!found) return false;
  }
  return true;
}

// Every permutation preserving labels, bonds and arrows, by exhaustive search.
inline std::size_t automorphism_count(const AffineDiagram& d) {
  std::vector<int> p(d.size());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    count += preserves(d, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Orbits of coprime solutions of e * sum c_i s_i = m under the permutations `group`.
inline std::size_t class_count(const AffineDiagram& d, int m,
                               const std::vector<std::vector<int>>& group) {
  std::set<std::vector<int>> seen;
  std::size_t orbits = 0;
  std::vector<int> s(d.size(), 0);
  auto visit = [&](auto&& self, int i, int remaining) -> void {
    if (i == d.size()) {
      if (remaining != 0) return;
      int g = 0;
      for (int v : s) g = std::gcd(g, v);
      if (g != 1 || seen.count(s)) return;
      ++orbits;
      for (const auto& p : group) {
        std::vector<int> image(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) image[p[k]] = s[k];
        seen.insert(image);
      }
      return;
    }
    for (int v = 0; v * d.label(i) <= remaining; ++v) {
      s[i] = v;
      self(self, i + 1, remaining - v * d.label(i));
    }
    s[i] = 0;
  };
  if (m % d.twist() == 0) visit(visit, 0, m / d.twist());
  return orbits;
}

}  // namespace oracle
