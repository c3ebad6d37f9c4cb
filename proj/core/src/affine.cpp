#include "kacscope/affine.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "kacscope/error.hpp"

namespace kacscope::affine {

namespace {

Permutation identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {  // a after b
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::vector<Permutation> generate(const std::vector<Permutation>& gens, int n) {
  std::vector<Permutation> group{identity(n)};
  for (std::size_t h = 0; h < group.size(); ++h)
    for (const auto& g : gens) {
      auto p = compose(g, group[h]);
      if (std::find(group.begin(), group.end(), p) == group.end()) group.push_back(p);
    }
  std::sort(group.begin(), group.end());
  return group;
}

Permutation reversal(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

Permutation swap_of(int n, std::initializer_list<std::pair<int, int>> pairs) {
  Permutation p = identity(n);
  for (auto [a, b] : pairs) std::swap(p[a], p[b]);
  return p;
}

bool is_exceptional(Family f) {
  return f == Family::E6 || f == Family::E7 || f == Family::E8 || f == Family::F4 ||
         f == Family::G2;
}

int fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

}  // namespace

void validate(const DiagramId& id) {
  const std::string name = to_spec(id);
  const int n = id.base_rank;
  auto reject = [&](const std::string& rule) {
    throw InvalidInput("inadmissible diagram " + name + ": " + rule);
  };
  if (id.twist < 1 || id.twist > 3) reject("twist must be 1, 2 or 3");
  if (is_exceptional(id.family) && n != fixed_rank(id.family))
    reject("exceptional family has fixed rank");
  if (id.twist == 1) {
    switch (id.family) {
      case Family::A: if (n < 1) reject("A_n requires n >= 1"); break;
      case Family::B: if (n < 3) reject("B_n requires n >= 3 (use C2 for rank 2)"); break;
      case Family::C: if (n < 2) reject("C_n requires n >= 2"); break;
      case Family::D: if (n < 4) reject("D_n requires n >= 4 (D3 is A3)"); break;
      default: break;
    }
  } else if (id.twist == 2) {
    switch (id.family) {
      case Family::A:
        if (n < 2) reject("twisted A requires base rank >= 2");
        if (n == 3) reject("twisted A3 coincides with twisted D3; use 2D3");
        break;
      case Family::D: if (n < 3) reject("twisted D requires base rank >= 3"); break;
      case Family::E6: break;
      default: reject("twist 2 exists only for A, D and E6");
    }
  } else if (id.family != Family::D || n != 4) {
    reject("twist 3 exists only for D4");
  }
}

DiagramId parse_spec(std::string_view text) {
  auto bad = [&] { throw InvalidInput("cannot parse diagram spec '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  DiagramId id;
  if (text.size() >= 2 && std::isdigit(static_cast<unsigned char>(text[0])) &&
      std::isalpha(static_cast<unsigned char>(text[1]))) {
    id.twist = text[0] - '0';
    pos = 1;
  }
  if (pos >= text.size()) bad();
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
  if (pos >= text.size()) bad();
  int n = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])) || n > 1000) bad();
    n = n * 10 + (text[pos] - '0');
  }
  id.base_rank = n;
  switch (letter) {
    case 'A': id.family = Family::A; break;
    case 'B': id.family = Family::B; break;
    case 'C': id.family = Family::C; break;
    case 'D': id.family = Family::D; break;
    case 'E':
      if (n < 6 || n > 8) throw InvalidInput("inadmissible diagram: E_n requires n in 6..8");
      id.family = n == 6 ? Family::E6 : n == 7 ? Family::E7 : Family::E8;
      break;
    case 'F': id.family = Family::F4; break;
    case 'G': id.family = Family::G2; break;
    default: bad();
  }
  validate(id);
  return id;
}

std::string to_spec(const DiagramId& id) {
  std::string s = id.twist > 1 ? std::to_string(id.twist) : "";
  return s + std::string(dynkin::family_name(id.family)) + std::to_string(id.base_rank);
}

void AffineDiagram::add_edge(int u, int v, int mult, int arrow_to) {
  edges_.push_back({u, v, mult, arrow_to});
  neighbors_[u].insert(v);
  neighbors_[v].insert(u);
}

int AffineDiagram::label_sum() const { return std::accumulate(labels_.begin(), labels_.end(), 0); }

int AffineDiagram::label_sum(NodeSet s) const {
  int t = 0;
  for (int i : s.elements()) t += labels_[i];
  return t;
}

dynkin::FiniteType AffineDiagram::base_type() const { return {id_.family, id_.base_rank}; }
int AffineDiagram::base_root_count() const { return dynkin::root_count(base_type()); }
int AffineDiagram::dim_g() const { return base_root_count() + id_.base_rank; }

NodeSet AffineDiagram::interior() const {
  NodeSet s;
  for (int i = 0; i < size(); ++i)
    if (is_interior(i)) s.insert(i);
  return s;
}

int AffineDiagram::bond(int i, int j) const {
  for (const Edge& e : edges_)
    if ((e.u == i && e.v == j) || (e.u == j && e.v == i)) return e.multiplicity;
  return 0;
}

dynkin::RootSystemProduct AffineDiagram::classify(NodeSet s) const {
  const auto nodes = s.elements();
  return dynkin::classify_subgraph(nodes, edges_);
}

std::vector<NodeSet> AffineDiagram::components(NodeSet s) const {
  std::vector<NodeSet> out;
  NodeSet left = s;
  while (!left.empty()) {
    NodeSet comp = NodeSet::single(left.elements().front());
    NodeSet frontier = comp;
    while (!frontier.empty()) {
      NodeSet next;
      for (int v : frontier.elements()) next = next | (neighbors_[v] & s);
      frontier = next - comp;
      comp = comp | next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

AffineDiagram build(const DiagramId& id) {
  validate(id);
  AffineDiagram d;
  d.id_ = id;
  const int r = id.base_rank;
  auto init = [&](std::vector<int> labels) {
    d.labels_ = std::move(labels);
    d.neighbors_.assign(d.labels_.size(), NodeSet{});
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) d.add_edge(i, i + 1);
  };
  auto spine = [&](int from, int to) {
    for (int i = from; i <= to; ++i) d.layout_.spine.push_back(i);
  };
  std::vector<Permutation> gens;

  if (id.twist == 1) {
    d.rank_ = r;
    switch (id.family) {
      case Family::A: {
        init(std::vector<int>(r + 1, 1));
        if (r == 1) {
          d.add_edge(0, 1, 4);
        } else {
          chain(0, r);
          d.add_edge(r, 0);
        }
        Permutation rot(r + 1);
        for (int i = 0; i <= r; ++i) rot[i] = (i + 1) % (r + 1);
        gens.push_back(rot);
        spine(0, r);
        d.layout_.cyclic = r > 1;
        break;
      }
      case Family::B: {
        std::vector<int> c(r + 1, 2);
        c[0] = c[1] = 1;
        init(c);
        d.add_edge(0, 2);
        d.add_edge(1, 2);
        chain(2, r - 1);
        d.add_edge(r - 1, r, 2, r);
        gens.push_back(swap_of(r + 1, {{0, 1}}));
        spine(1, r);
        d.layout_.arms.push_back({2, {0}});
        break;
      }
      case Family::C: {
        std::vector<int> c(r + 1, 2);
        c[0] = c[r] = 1;
        init(c);
        d.add_edge(0, 1, 2, 1);
        chain(1, r - 1);
        d.add_edge(r - 1, r, 2, r - 1);
        gens.push_back(reversal(r + 1));
        spine(0, r);
        break;
      }
      case Family::D: {
        std::vector<int> c(r + 1, 2);
        c[0] = c[1] = c[r - 1] = c[r] = 1;
        init(c);
        d.add_edge(0, 2);
        d.add_edge(1, 2);
        chain(2, r - 2);
        d.add_edge(r - 2, r - 1);
        d.add_edge(r - 2, r);
        Permutation rev(r + 1);
        for (int i = 2; i <= r - 2; ++i) rev[i] = r - i;
        if (r % 2 == 0) {
          rev[0] = r; rev[r] = 0; rev[1] = r - 1; rev[r - 1] = 1;
          gens.push_back(swap_of(r + 1, {{0, 1}, {r - 1, r}}));
        } else {
          rev[0] = r - 1; rev[r - 1] = 1; rev[1] = r; rev[r] = 0;
        }
        gens.push_back(rev);
        spine(1, r - 1);
        d.layout_.arms.push_back({2, {0}});
        d.layout_.arms.push_back({r - 2, {r}});
        break;
      }
      case Family::E6: {
        init({1, 1, 2, 2, 3, 2, 1});
        for (auto [u, v] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}, {0, 2}}) d.add_edge(u, v);
        gens.push_back({1, 6, 3, 5, 4, 2, 0});
        d.layout_.spine = {1, 3, 4, 5, 6};
        d.layout_.arms.push_back({4, {2, 0}});
        break;
      }
      case Family::E7: {
        init({1, 2, 2, 3, 4, 3, 2, 1});
        for (auto [u, v] : {std::pair{0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}})
          d.add_edge(u, v);
        gens.push_back({7, 6, 2, 5, 4, 3, 1, 0});
        d.layout_.spine = {0, 1, 3, 4, 5, 6, 7};
        d.layout_.arms.push_back({4, {2}});
        break;
      }
      case Family::E8: {
        init({1, 2, 3, 4, 6, 5, 4, 3, 2});
        for (auto [u, v] :
             {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}, {0, 8}})
          d.add_edge(u, v);
        d.layout_.spine = {0, 8, 7, 6, 5, 4, 3, 1};
        d.layout_.arms.push_back({4, {2}});
        break;
      }
      case Family::F4:
        init({1, 2, 3, 4, 2});
        d.add_edge(0, 1);
        d.add_edge(1, 2);
        d.add_edge(2, 3, 2, 3);
        d.add_edge(3, 4);
        spine(0, 4);
        break;
      case Family::G2:
        init({1, 2, 3});
        d.add_edge(0, 1);
        d.add_edge(1, 2, 3, 2);
        spine(0, 2);
        break;
    }
  } else if (id.twist == 2 && id.family == Family::A && r % 2 == 0) {
    const int n = r / 2;
    d.rank_ = n;
    std::vector<int> c(n + 1, 2);
    c[0] = 1;
    init(c);
    if (n == 1) {
      d.add_edge(0, 1, 4, 1);
    } else {
      d.add_edge(0, 1, 2, 1);
      chain(1, n - 1);
      d.add_edge(n - 1, n, 2, n);
    }
    spine(0, n);
  } else if (id.twist == 2 && id.family == Family::A) {
    const int n = (r + 1) / 2;
    d.rank_ = n;
    std::vector<int> c(n + 1, 2);
    c[0] = c[1] = c[n] = 1;
    init(c);
    d.add_edge(0, 2);
    d.add_edge(1, 2);
    chain(2, n - 1);
    d.add_edge(n - 1, n, 2, n - 1);
    gens.push_back(swap_of(n + 1, {{0, 1}}));
    spine(1, n);
    d.layout_.arms.push_back({2, {0}});
  } else if (id.twist == 2 && id.family == Family::D) {
    const int n = r - 1;
    d.rank_ = n;
    init(std::vector<int>(n + 1, 1));
    d.add_edge(0, 1, 2, 0);
    chain(1, n - 1);
    d.add_edge(n - 1, n, 2, n);
    gens.push_back(reversal(n + 1));
    spine(0, n);
  } else if (id.twist == 2) {  // E6
    d.rank_ = 4;
    init({1, 2, 3, 2, 1});
    d.add_edge(0, 1);
    d.add_edge(1, 2);
    d.add_edge(2, 3, 2, 2);
    d.add_edge(3, 4);
    spine(0, 4);
  } else {  // 3D4
    d.rank_ = 2;
    init({1, 2, 1});
    d.add_edge(0, 1);
    d.add_edge(1, 2, 3, 1);
    spine(0, 2);
  }
  d.omega_ = generate(gens, d.size());
  return d;
}

int coxeter_number(const AffineDiagram& d) { return d.coxeter_number(); }
const std::vector<Permutation>& omega_group(const AffineDiagram& d) { return d.omega(); }

NodeSet apply(const Permutation& p, NodeSet s) {
  NodeSet r;
  for (int i : s.elements()) r.insert(p[i]);
  return r;
}

namespace {

struct BondKey {
  int mult;
  int arrow;  // 0 none, 1 toward first, 2 toward second
};

BondKey bond_key(const AffineDiagram& d, int i, int j) {
  for (const Edge& e : d.edges()) {
    if (!((e.u == i && e.v == j) || (e.u == j && e.v == i))) continue;
    int arrow = 0;
    if (e.arrow_to == i) arrow = 1;
    if (e.arrow_to == j) arrow = 2;
    return {e.multiplicity, arrow};
  }
  return {0, 0};
}

bool same(BondKey a, BondKey b) { return a.mult == b.mult && a.arrow == b.arrow; }

void search(const AffineDiagram& d, Permutation& p, std::vector<bool>& used, int i,
            std::vector<Permutation>& out) {
  const int n = d.size();
  if (i == n) {
    out.push_back(p);
    return;
  }
  for (int t = 0; t < n; ++t) {
    if (used[t] || d.label(t) != d.label(i) || d.degree(t) != d.degree(i)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) ok = same(bond_key(d, j, i), bond_key(d, p[j], t));
    if (!ok) continue;
    p[i] = t;
    used[t] = true;
    search(d, p, used, i + 1, out);
    used[t] = false;
  }
}

}  // namespace

bool is_automorphism(const AffineDiagram& d, const Permutation& p) {
  const int n = d.size();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n);
  for (int t : p) {
    if (t < 0 || t >= n || seen[t]) return false;
    seen[t] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (d.label(i) != d.label(p[i])) return false;
    for (int j = 0; j < n; ++j)
      if (!same(bond_key(d, i, j), bond_key(d, p[i], p[j]))) return false;
  }
  return true;
}

std::vector<Permutation> automorphisms(const AffineDiagram& d) {
  Permutation p(d.size(), -1);
  std::vector<bool> used(d.size());
  std::vector<Permutation> out;
  search(d, p, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DiagramId> catalog(int max_rank) {
  std::vector<DiagramId> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({1, Family::A, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({1, Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({1, Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({1, Family::D, n});
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2})
    if (fixed_rank(f) <= max_rank) out.push_back({1, f, fixed_rank(f)});
  for (int n = 2; n <= max_rank; ++n)
    if (n != 3) out.push_back({2, Family::A, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({2, Family::D, n});
  if (max_rank >= 6) out.push_back({2, Family::E6, 6});
  if (max_rank >= 4) out.push_back({3, Family::D, 4});
  return out;
}

}  // namespace kacscope::affine
