#include "kacscope/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>

#include "kacscope/error.hpp"

namespace kacscope::dynkin {

namespace {

bool is_exceptional(Family f) {
  return f == Family::E6 || f == Family::E7 || f == Family::E8 || f == Family::F4 ||
         f == Family::G2;
}

int exceptional_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

std::string node_list(const std::vector<int>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nodes[i]);
  }
  return "{" + s + "}";
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6:
    case Family::E7:
    case Family::E8: return "E";
    case Family::F4: return "F";
    case Family::G2: return "G";
  }
  return "?";
}

bool is_valid(FiniteType t) {
  if (is_exceptional(t.family)) return t.rank == exceptional_rank(t.family);
  if (t.family == Family::D) return t.rank >= 2;
  return t.rank >= 1;
}

int root_count(FiniteType t) {
  if (!is_valid(t)) throw InvalidInput("invalid finite type " + to_string(t));
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E6: return 72;
    case Family::E7: return 126;
    case Family::E8: return 240;
    case Family::F4: return 48;
    case Family::G2: return 12;
  }
  return 0;
}

int coxeter_number(FiniteType t) {
  if (!is_valid(t)) throw InvalidInput("invalid finite type " + to_string(t));
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n + 1;
    case Family::B:
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
    case Family::F4: return 12;
    case Family::G2: return 6;
  }
  return 0;
}

std::string to_string(FiniteType t) {
  return std::string(family_name(t.family)) + std::to_string(t.rank);
}

void RootSystemProduct::add(Family family, int rank) {
  FiniteType t{family, rank};
  if (!is_valid(t)) throw InvalidInput("invalid finite type " + dynkin::to_string(t));
  if ((family == Family::B || family == Family::C) && rank == 1) t = {Family::A, 1};
  if (family == Family::C && rank == 2) t = {Family::B, 2};
  if (family == Family::D && rank == 3) t = {Family::A, 3};
  if (family == Family::D && rank == 2) {
    add(Family::A, 1);
    t = {Family::A, 1};
  }
  factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), t), t);
}

void RootSystemProduct::add(const RootSystemProduct& other) {
  for (const auto& t : other.factors_) add(t.family, t.rank);
}

int RootSystemProduct::rank() const {
  int r = 0;
  for (const auto& t : factors_) r += t.rank;
  return r;
}

int RootSystemProduct::root_count() const {
  int r = 0;
  for (const auto& t : factors_) r += dynkin::root_count(t);
  return r;
}

int RootSystemProduct::rank_spread() const {
  if (factors_.empty()) return 0;
  auto [lo, hi] = std::minmax_element(factors_.begin(), factors_.end(),
                                      [](auto& a, auto& b) { return a.rank < b.rank; });
  return hi->rank - lo->rank;
}

std::string RootSystemProduct::to_string() const {
  if (factors_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += dynkin::to_string(factors_[i]);
    i = j;
  }
  return out;
}

RootSystemProduct RootSystemProduct::parse(std::string_view text) {
  RootSystemProduct p;
  if (text.empty() || text == "empty") return p;
  std::size_t pos = 0;
  auto read_int = [&](int fallback) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) return fallback;
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  };
  while (pos < text.size()) {
    const int count = read_int(1);
    if (pos >= text.size()) throw InvalidInput("bad root system '" + std::string(text) + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos++])));
    const int rank = read_int(-1);
    if (rank < 0) throw InvalidInput("bad root system '" + std::string(text) + "'");
    Family f;
    switch (letter) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      case 'E':
        if (rank < 6 || rank > 8) throw InvalidInput("bad root system '" + std::string(text) + "'");
        f = rank == 6 ? Family::E6 : rank == 7 ? Family::E7 : Family::E8;
        break;
      case 'F': f = Family::F4; break;
      case 'G': f = Family::G2; break;
      default: throw InvalidInput("bad root system '" + std::string(text) + "'");
    }
    for (int i = 0; i < count; ++i) p.add(f, rank);
    if (pos < text.size()) {
      if (text[pos] != '+') throw InvalidInput("bad root system '" + std::string(text) + "'");
      ++pos;
    }
  }
  return p;
}

RootSystemProduct classify_subgraph(std::span<const int> nodes, std::span<const Edge> edges) {
  std::map<int, int> local;
  for (int v : nodes) local.emplace(v, static_cast<int>(local.size()));
  const int k = static_cast<int>(local.size());

  struct Bond {
    int to;
    int mult;
    int arrow_to;  // local index or -1
  };
  std::vector<std::vector<Bond>> adj(k);
  std::vector<int> original(k);
  for (auto [v, i] : local) original[i] = v;
  for (const Edge& e : edges) {
    auto a = local.find(e.u), b = local.find(e.v);
    if (a == local.end() || b == local.end()) continue;
    int arrow = -1;
    if (e.arrow_to == e.u) arrow = a->second;
    if (e.arrow_to == e.v) arrow = b->second;
    adj[a->second].push_back({b->second, e.multiplicity, arrow});
    adj[b->second].push_back({a->second, e.multiplicity, arrow});
  }

  RootSystemProduct result;
  std::vector<int> comp_of(k, -1);
  for (int start = 0; start < k; ++start) {
    if (comp_of[start] >= 0) continue;
    std::vector<int> comp{start};
    comp_of[start] = start;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (const Bond& b : adj[comp[h]])
        if (comp_of[b.to] < 0) {
          comp_of[b.to] = start;
          comp.push_back(b.to);
        }

    std::vector<int> orig;
    for (int v : comp) orig.push_back(original[v]);
    std::sort(orig.begin(), orig.end());
    const int size = static_cast<int>(comp.size());

    int edge_count = 0, doubles = 0, max_mult = 0, max_deg = 0, branches = 0, branch = -1;
    for (int v : comp) {
      const int deg = static_cast<int>(adj[v].size());
      edge_count += deg;
      max_deg = std::max(max_deg, deg);
      if (deg >= 3) {
        ++branches;
        branch = v;
      }
      for (const Bond& b : adj[v]) {
        max_mult = std::max(max_mult, b.mult);
        if (b.mult == 2 && v < b.to) ++doubles;
      }
    }
    edge_count /= 2;
    auto fail = [&](const std::string& why) {
      throw ClassificationError("component " + node_list(orig) + " is not of finite type: " + why);
    };
    if (edge_count != size - 1) fail("contains a cycle or repeated bond");
    if (max_mult >= 4) fail("bond of multiplicity 4");
    if (max_mult == 3) {
      if (size != 2) fail("triple bond inside a larger component");
      result.add(Family::G2, 2);
      continue;
    }
    if (size == 1) {
      result.add(Family::A, 1);
      continue;
    }

    // Walk a path from an end node.
    auto path_from = [&](int end) {
      std::vector<int> path{end};
      int prev = -1, cur = end;
      while (true) {
        int next = -1;
        for (const Bond& b : adj[cur])
          if (b.to != prev) next = b.to;
        if (next < 0) break;
        prev = cur;
        cur = next;
        path.push_back(cur);
      }
      return path;
    };

    if (doubles > 0) {
      if (doubles > 1) fail("more than one double bond");
      if (max_deg > 2) fail("double bond with a branch node");
      if (size == 2) {
        result.add(Family::B, 2);
        continue;
      }
      int end = comp.front();
      for (int v : comp)
        if (adj[v].size() == 1) end = v;
      const auto path = path_from(end);
      int pos = -1, arrow = -1;
      for (int i = 0; i + 1 < size; ++i)
        for (const Bond& b : adj[path[i]])
          if (b.to == path[i + 1] && b.mult == 2) {
            pos = i;
            arrow = b.arrow_to;
          }
      if (pos == 0 || pos == size - 2) {
        // Arrow toward the terminal node gives B, away from it gives C.
        const int inner = pos == 0 ? path[1] : path[size - 2];
        result.add(arrow == inner ? Family::C : Family::B, size);
        continue;
      }
      if (size == 4) {
        result.add(Family::F4, 4);
        continue;
      }
      fail("double bond in the middle of a long chain");
    }

    if (branches == 0) {
      result.add(Family::A, size);
      continue;
    }
    if (branches > 1 || max_deg > 3) fail("branch structure of affine type");
    std::vector<int> arms;
    for (const Bond& b : adj[branch]) {
      int len = 1, prev = branch, cur = b.to;
      while (true) {
        int next = -1;
        for (const Bond& c : adj[cur])
          if (c.to != prev) next = c.to;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      result.add(Family::D, size);
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) {
      result.add(Family::E6, 6);
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) {
      result.add(Family::E7, 7);
    } else if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4) {
      result.add(Family::E8, 8);
    } else {
      fail("branch arms of lengths " + std::to_string(arms[0]) + "," + std::to_string(arms[1]) +
           "," + std::to_string(arms[2]));
    }
  }
  return result;
}

}  // namespace kacscope::dynkin
