#include "kacscope/reductions.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "json.hpp"

#include "kacscope/error.hpp"
#include "kacscope/thomae.hpp"

namespace kacscope::reductions {

using dynkin::Family;

bool is_reducible(const DiagramId& id) {
  if (id.twist == 1) return id.family == Family::B || id.family == Family::C || id.family == Family::D;
  // 2A2 has no interior node; its two subsets are checked directly.
  return id.twist == 2 && ((id.family == Family::A && id.base_rank > 2) || id.family == Family::D);
}

int chain_parameter(const DiagramId& id) {
  if (!is_reducible(id)) throw InvalidInput(affine::to_spec(id) + " is not a reducible classical diagram");
  if (id.twist == 1) return id.base_rank;
  if (id.family == Family::D) return id.base_rank - 1;
  return id.base_rank % 2 == 0 ? id.base_rank / 2 : (id.base_rank + 1) / 2;
}

DiagramId with_chain_parameter(const DiagramId& id, int n) {
  DiagramId out = id;
  if (id.twist == 1)
    out.base_rank = n;
  else if (id.family == Family::D)
    out.base_rank = n + 1;
  else
    out.base_rank = id.base_rank % 2 == 0 ? 2 * n : 2 * n - 1;
  return out;
}

namespace {

int minimal_parameter(const DiagramId& id) {
  if (id.twist == 1) return id.family == Family::C ? 2 : id.family == Family::B ? 3 : 4;
  if (id.family == Family::D) return 2;
  return id.base_rank % 2 == 0 ? 2 : 3;
}

NodeSet delete_node(NodeSet s, int r) {
  const std::uint32_t low = s.bits() & ((std::uint32_t{1} << r) - 1);
  const std::uint32_t high = (s.bits() >> (r + 1)) << r;
  return NodeSet(low | high);
}

std::string neighborhood(const AffineDiagram& d, NodeSet zero_set, std::initializer_list<int> nodes) {
  std::string out = d.spec() + " J=" + zero_set.to_string() + ":";
  for (int v : nodes) {
    if (v < 0 || v >= d.size()) continue;
    out += " " + std::to_string(v) + "(s=" + (zero_set.contains(v) ? "0" : "1") + ";nbrs";
    for (int w : d.neighbors(v).elements())
      out += " " + std::to_string(w) + ":" + (zero_set.contains(w) ? "0" : "1");
    out += ")";
  }
  return out;
}

long long upper_weight(const AffineDiagram& d, NodeSet zero_set) {
  return d.label_sum(d.all() - zero_set);
}

}  // namespace

int interior_label(const AffineDiagram& d) {
  const auto nodes = d.interior().elements();
  if (nodes.empty()) throw InvalidInput(d.spec() + " has no interior node");
  return d.label(nodes.front());
}

bool in_class_y(const AffineDiagram& d, NodeSet zero_set) {
  const NodeSet outside = d.interior() - zero_set;
  for (int v : outside.elements())
    if (!(d.neighbors(v) & outside).empty()) return false;
  return true;
}

std::vector<NodeSet> interior_components(const AffineDiagram& d, NodeSet zero_set) {
  std::vector<NodeSet> out;
  for (NodeSet c : d.components(zero_set))
    if ((c - d.interior()).empty()) out.push_back(c);
  return out;
}

std::vector<NodeSet> boundary_components(const AffineDiagram& d, NodeSet zero_set) {
  std::vector<NodeSet> out;
  for (NodeSet c : d.components(zero_set))
    if (!(c - d.interior()).empty()) out.push_back(c);
  return out;
}

int rank_gap(const AffineDiagram& d, NodeSet zero_set) {
  int lo = std::numeric_limits<int>::max(), hi = 0;
  for (NodeSet c : interior_components(d, zero_set)) {
    lo = std::min(lo, c.size());
    hi = std::max(hi, c.size());
  }
  return hi == 0 ? 0 : hi - lo;
}

bool in_class_z(const AffineDiagram& d, NodeSet zero_set) {
  return in_class_y(d, zero_set) && rank_gap(d, zero_set) <= 1;
}

Move interior_contraction(const AffineDiagram& d, NodeSet zero_set, int i, int j) {
  if (!is_reducible(d.id())) throw ReductionError(d.spec() + " is outside the classical reductions");
  auto mismatch = [&](const std::string& why) {
    throw ReductionError("no contraction pattern (" + why + ") at " + neighborhood(d, zero_set, {i, j}));
  };
  if (i < 0 || j < 0 || i >= d.size() || j >= d.size()) mismatch("node out of range");
  if (!d.neighbors(i).contains(j)) mismatch("nodes not adjacent");
  if (zero_set.contains(i) || zero_set.contains(j)) mismatch("both nodes must lie outside J");
  if (!d.is_interior(i)) mismatch("first node must be interior");

  if (d.is_interior(j) || d.degree(i) == 2) {
    int r = i;
    if (d.degree(i) != 2) {
      if (d.degree(j) == 2) {
        r = j;
      } else if (d.id().family == Family::D && d.id().twist == 1 && d.degree(i) == 3 &&
                 d.degree(j) == 3) {
        r = std::max(i, j);  // D5: the two branch nodes merge
      } else {
        mismatch("no removable node");
      }
    }
    const int n = chain_parameter(d.id());
    if (n - 1 < minimal_parameter(d.id())) mismatch("family has minimal rank");
    Contraction out;
    out.diagram = with_chain_parameter(d.id(), n - 1);
    out.zero_set = delete_node(zero_set, r);
    out.removed = r;
    const auto smaller = affine::build(out.diagram);
    out.f_before = thomae::f_value(d, zero_set);
    out.f_after = thomae::f_value(smaller, out.zero_set);
    out.expected_drop = static_cast<long long>(d.label(r)) * d.classify(zero_set).root_count() -
                        d.label_sum(zero_set);
    return out;
  }

  if (d.degree(i) != 3) mismatch("branch node must have degree 3");
  int k = -1, other = -1;
  for (int v : d.neighbors(i).elements()) {
    if (v == j) continue;
    if (d.is_interior(v))
      k = v;
    else
      other = v;
  }
  if (k < 0 || other < 0) mismatch("branch node lacks an interior neighbour and a second tip");
  if (!zero_set.contains(k)) mismatch("interior neighbour outside J; contract that pair first");
  NodeSet run;
  for (NodeSet c : d.components(zero_set))
    if (c.contains(k)) run = c;
  if (!(run - d.interior()).empty() || d.classify(run) != [&] {
        dynkin::RootSystemProduct p;
        p.add(Family::A, run.size());
        return p;
      }())
    mismatch("run of J beyond the interior neighbour is not an interior A-chain");

  Switch out;
  out.branch = i;
  out.tip = j;
  out.neighbor = k;
  out.q = run.size() - 1;
  out.s = zero_set.contains(other) ? 0 : 1;
  out.zero_set = (zero_set - NodeSet::single(k)) | NodeSet::single(i);
  out.f_before = thomae::f_value(d, zero_set);
  out.f_after = thomae::f_value(d, out.zero_set);
  out.expected_drop = 2LL * (out.q + out.s - 1) * upper_weight(d, zero_set);
  out.vexing = out.q == 1 && out.s == 0;
  return out;
}

std::optional<Balance> balance_step(const AffineDiagram& d, NodeSet zero_set) {
  if (!in_class_y(d, zero_set))
    throw ReductionError("balance needs no adjacent interior nodes outside J: " +
                         neighborhood(d, zero_set, {}));
  auto comps = interior_components(d, zero_set);
  if (comps.empty()) return std::nullopt;
  std::sort(comps.begin(), comps.end(),
            [](NodeSet a, NodeSet b) { return a.elements().front() < b.elements().front(); });
  std::vector<int> sizes;
  for (NodeSet c : comps) sizes.push_back(c.size());
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  if (*hi - *lo <= 1) return std::nullopt;

  const int start = comps.front().elements().front();
  const int stop = comps.back().elements().back();
  NodeSet region;
  for (int v = start; v <= stop; ++v) region.insert(v);

  std::vector<int> order{*hi, *lo};
  const auto hi_at = hi - sizes.begin(), lo_at = lo - sizes.begin();
  for (std::size_t t = 0; t < sizes.size(); ++t)
    if (static_cast<long>(t) != hi_at && static_cast<long>(t) != lo_at) order.push_back(sizes[t]);

  NodeSet next = zero_set - region;
  int cursor = start;
  for (int t : order) {
    for (int v = cursor; v < cursor + t; ++v) next.insert(v);
    cursor += t + 1;
  }
  if (cursor - 1 != stop + 1)
    throw ReductionError("interior separators are not single nodes: " + neighborhood(d, zero_set, {}));
  const int j = start + *hi - 1;
  const int i = start + *hi;
  next.erase(j);
  next.insert(i);

  Balance out;
  out.q1 = *hi;
  out.q2 = *lo;
  out.zero_set = next;
  out.f_before = thomae::f_value(d, zero_set);
  out.f_after = thomae::f_value(d, next);
  out.expected_drop = 2LL * upper_weight(d, zero_set) * (out.q1 - out.q2 - 1);
  return out;
}

long long GreekDecomposition::alpha_at(long long q_value) const {
  return c * boundary_roots + a * q_value * (q_value - 1) - b * c * (q_value - 1) -
         q_value * boundary_weight;
}

GreekDecomposition greek_decomposition(const AffineDiagram& d, NodeSet zero_set) {
  if (!is_reducible(d.id())) throw ReductionError(d.spec() + " is outside the classical reductions");
  if (!in_class_z(d, zero_set))
    throw ReductionError("subset is not in class Z: " + neighborhood(d, zero_set, {}));
  GreekDecomposition g;
  g.c = interior_label(d);
  std::vector<int> sizes;
  for (NodeSet c : interior_components(d, zero_set)) sizes.push_back(c.size());
  if (!sizes.empty()) {
    const int t = *std::min_element(sizes.begin(), sizes.end());
    g.q = t + 1;
    g.x = static_cast<int>(std::count(sizes.begin(), sizes.end(), t));
    g.y = static_cast<int>(sizes.size()) - g.x;
  }
  NodeSet boundary;
  for (NodeSet c : boundary_components(d, zero_set)) boundary = boundary | c;
  g.boundary_roots = d.classify(boundary).root_count();
  g.boundary_weight = d.label_sum(boundary);
  g.a = upper_weight(d, zero_set) - static_cast<long long>(g.c) * (g.x + g.y);
  g.b = d.rank() - static_cast<long long>(g.q) * g.x - static_cast<long long>(g.q + 1) * g.y;
  g.alpha = g.alpha_at(g.q);
  g.beta = g.alpha_at(g.q + 1);
  g.gamma = g.a * g.boundary_roots - g.b * g.boundary_weight;
  return g;
}

bool RefinementTrace::strictly_decreasing() const {
  return std::all_of(steps.begin(), steps.end(), [](const RefinementStep& s) {
    return s.f_before - s.f_after == s.expected_drop && s.expected_drop > 0;
  });
}

RefinementTrace refine(const AffineDiagram& d, NodeSet zero_set, int max_steps) {
  RefinementTrace trace;
  trace.start = d.id();
  trace.start_set = zero_set;
  AffineDiagram cur = d;
  NodeSet j = zero_set;
  for (int step = 0; step < max_steps; ++step) {
    std::optional<std::pair<int, int>> pair;
    for (const auto& e : cur.edges()) {
      if (cur.is_interior(e.u) && cur.is_interior(e.v) && !j.contains(e.u) && !j.contains(e.v)) {
        pair = {e.u, e.v};
        break;
      }
    }
    if (pair) {
      auto move = interior_contraction(cur, j, pair->first, pair->second);
      const auto& c = std::get<Contraction>(move);
      trace.steps.push_back({RefinementStep::Kind::Contraction, c.diagram, c.zero_set, c.f_before,
                             c.f_after, c.expected_drop});
      cur = affine::build(c.diagram);
      j = c.zero_set;
      continue;
    }
    auto b = balance_step(cur, j);
    if (!b) break;
    trace.steps.push_back({RefinementStep::Kind::Balance, cur.id(), b->zero_set, b->f_before,
                           b->f_after, b->expected_drop});
    j = b->zero_set;
  }
  trace.final_diagram = cur.id();
  trace.final_set = j;
  trace.reached_z = in_class_z(cur, j);
  return trace;
}

namespace {

struct Shape {
  long long roots, upper, n, lower;
  friend bool operator==(const Shape&, const Shape&) = default;
};

NodeSet component_of(const AffineDiagram& d, NodeSet zero_set, int v) {
  for (NodeSet c : d.components(zero_set))
    if (c.contains(v)) return c;
  return {};
}

}  // namespace

std::optional<CaseCheck> match_printed_case(const AffineDiagram& d, NodeSet zero_set) {
  const auto g = greek_decomposition(d, zero_set);
  const DiagramId& id = d.id();
  const long long n = d.rank();
  const long long q = g.q, x = g.x, y = g.y;
  const long long interior_roots = q * (q - 1) * x + q * (q + 1) * y;
  const long long interior_lower = (q - 1) * x + q * y;  // divided by c
  const Shape actual{d.classify(zero_set).root_count(), upper_weight(d, zero_set), n,
                     d.label_sum(zero_set)};
  auto in = [&](int v) { return zero_set.contains(v); };
  auto size_of = [&](std::initializer_list<int> nodes) {
    NodeSet u;
    for (int v : nodes) u = u | component_of(d, zero_set, v);
    return u.size();
  };
  auto distinct = [&](int u, int v) { return !component_of(d, zero_set, u).contains(v); };

  CaseCheck out;
  out.spec = d.spec();
  out.id = id;
  out.rank = static_cast<int>(n);
  out.zero_set = zero_set;
  out.greek = g;
  out.f_direct = thomae::f_value(d, zero_set);
  long long p = 0, r = 0;
  Shape expected{};

  const int top = d.size() - 1;
  if (id.twist == 2 && id.family == Family::A && id.base_rank % 2 == 0) {
    if (in(0) || !in(top)) return std::nullopt;
    r = size_of({top});
    out.case_name = "2A2n case 1";
    expected = {2 * r * r + interior_roots, 1 + 2 * x + 2 * y, r + q * x + (q + 1) * y,
                2 * interior_lower + 2 * r};
    out.gamma_printed = 0;
    out.alpha_printed = (q - 2 * r) * (q - 2 * r - 1);
  } else if (id.twist == 1 && id.family == Family::C) {
    if (in(0) || in(top)) return std::nullopt;
    out.case_name = "C case 2";
    expected = {interior_roots, 2 * x + 2 * y, q * x + (q + 1) * y, 2 * interior_lower};
    out.gamma_printed = 0;
    out.alpha_printed = 0;
  } else if (id.twist == 2 && id.family == Family::D) {
    if (!in(0) || !in(top) || !distinct(0, top)) return std::nullopt;
    p = size_of({0});
    r = size_of({top});
    out.case_name = "2D case 3";
    expected = {2 * p * p + 2 * r * r + interior_roots, 1 + x + y, p + r + q * x + (q + 1) * y,
                p + r + interior_lower};
    out.gamma_printed = (p - r) * (p - r);
    out.alpha_printed = (p - r) * (p - r) * (p + r - q) * (p + r - q + 1);
  } else if (id.twist == 2 && id.family == Family::A) {
    if (in(top)) return std::nullopt;
    const int tips = in(0) + in(1);
    if (tips == 2) {
      p = size_of({0, 1});
      out.case_name = "2A2n-1 case A1";
      expected = {2 * p * (p - 1) + interior_roots, 1 + 2 * x + 2 * y, p + q * x + (q + 1) * y,
                  2 * (p - 1) + 2 * interior_lower};
      out.gamma_printed = 0;
      out.alpha_printed = (2 * p - q) * (2 * p - q - 1);
    } else if (tips == 1) {
      p = size_of({in(0) ? 0 : 1});
      out.case_name = "2A2n-1 case A2";
      expected = {p * (p + 1) + interior_roots, 2 + 2 * x + 2 * y, 1 + p + q * x + (q + 1) * y,
                  2 * p - 1 + 2 * interior_lower};
      out.gamma_printed = p + 1;
      out.alpha_printed = 2 * (p - q + 1) * (p - q + 1) + q;
    } else {
      out.case_name = "2A2n-1 case A3";
      expected = {interior_roots, 1 + 2 * x + 2 * y, 1 + q * x + (q + 1) * y, 2 * interior_lower};
      out.gamma_printed = 0;
      out.alpha_printed = (q - 1) * (q - 2);
    }
  } else if (id.twist == 1 && id.family == Family::B) {
    if (!in(top)) return std::nullopt;
    const int tips = in(0) + in(1);
    r = size_of({top});
    if (tips == 2) {
      if (!distinct(0, top)) return std::nullopt;
      p = size_of({0, 1});
      out.case_name = "B case B1";
      expected = {2 * p * (p - 1) + 2 * r * r + interior_roots, 2 * (1 + x + y),
                  p + r + q * x + (q + 1) * y, 2 * (p + r - 1) + 2 * interior_lower};
      out.gamma_printed = 2 * (p - r) * (p - r - 1);
      out.alpha_printed = 2 * (p - r) * (p - r - 1) + 2 * (p + r - q) * (p + r - q);
    } else if (tips == 1) {
      const int tip = in(0) ? 0 : 1;
      if (!distinct(tip, top)) return std::nullopt;
      p = size_of({tip});
      out.case_name = "B case B2";
      expected = {p * (p + 1) + 2 * r * r + interior_roots, 3 + 2 * x + 2 * y,
                  p + r + 1 + q * x + (q + 1) * y, 2 * p + 2 * r - 1 + 2 * interior_lower};
      out.gamma_printed = (2 * r - p - 1) * (2 * r - p - 1) + 3 * r;
      out.alpha_printed = 2 * (p - q) * (p - q + 1) + (q - r) * (q - r) + 3 * r * r + 2 * p;
    } else {
      out.case_name = "B case B3";
      expected = {2 * r * r + interior_roots, 2 + 2 * x + 2 * y, r + 1 + q * x + (q + 1) * y,
                  2 * r + 2 * interior_lower};
      out.gamma_printed = 2 * r * (r - 1);
      out.alpha_printed = 2 * (q - r - 1) * (q - r - 1) + 2 * r * (r - 1);
    }
  } else if (id.twist == 1 && id.family == Family::D) {
    const int nn = top;
    const int left = in(0) + in(1), right = in(nn - 1) + in(nn);
    if (left == 2 && right == 2) {
      if (!distinct(0, nn)) return std::nullopt;
      p = size_of({0, 1});
      r = size_of({nn - 1, nn});
      out.case_name = "D case 1";
      expected = {2 * p * (p - 1) + 2 * r * (r - 1) + interior_roots, 2 + 2 * x + 2 * y,
                  p + r + q * x + (q + 1) * y, 2 * (p + r - 2 + interior_lower)};
      out.gamma_printed = 2 * (p - r) * (p - r);
      out.alpha_printed = 2 * (p - r) * (p - r) + 2 * (p - q + r) * (p - q + r - 1);
    } else if (left == 1 && right == 1) {
      const int a = in(0) ? 0 : 1, b = in(nn - 1) ? nn - 1 : nn;
      if (!distinct(a, b)) return std::nullopt;
      p = size_of({a}) + 1;
      r = size_of({b}) + 1;
      out.case_name = "D case 2";
      expected = {p * (p - 1) + r * (r - 1) + interior_roots, 2 * (2 + x + y),
                  p + r + q * x + (q + 1) * y, 2 * (p + r - 3 + interior_lower)};
      out.gamma_printed = 2 * (p - r) * (p - r) + 2 * (p + r);
      out.alpha_printed = 2 * (p - q) * (p - q) + 2 * (p - r) * (p - r) + 2 * q;
    } else if ((left == 2 && right == 0) || (left == 0 && right == 2)) {
      p = left == 2 ? size_of({0, 1}) : size_of({nn - 1, nn});
      out.case_name = "D case 3";
      expected = {2 * p * (p - 1) + interior_roots, 2 * (1 + x + y), 1 + p + q * x + (q + 1) * y,
                  2 * (p - 1 + interior_lower)};
      out.gamma_printed = 2 * (p - 1) * (p - 1);
      out.alpha_printed = 2 * ((p - q + 1) * (p - q + 1) + (p - 2) * (p - 1) + (q - 2));
    } else if (left + right == 1) {
      const int tip = in(0) ? 0 : in(1) ? 1 : in(nn - 1) ? nn - 1 : nn;
      p = size_of({tip}) + 1;
      out.case_name = "D case 4";
      expected = {p * (p - 1) + interior_roots, 3 + 2 * x + 2 * y, 1 + p + q * x + (q + 1) * y,
                  2 * p - 3 + 2 * interior_lower};
      out.gamma_printed = (p - 1) * (p - 1) + 2;
      out.alpha_printed = 2 * (p - q) * (p - q) + (q - 1) * (q - 1) + 1;
    } else if (left + right == 0) {
      out.case_name = "D case 5";
      expected = {interior_roots, 2 + 2 * x + 2 * y, 2 + q * x + (q + 1) * y, 2 * interior_lower};
      out.gamma_printed = 0;
      out.alpha_printed = 2 * (q - 1) * (q - 2);
    } else {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  if (!(expected == actual)) return std::nullopt;
  out.p = static_cast<int>(p);
  out.r = static_cast<int>(r);
  return out;
}

void write_discrepancy(std::ostream& out, const CaseCheck& check) {
  nlohmann::ordered_json j;
  j["family"] = std::string(dynkin::family_name(check.id.family));
  j["e"] = check.id.twist;
  j["rank"] = check.rank;
  j["spec"] = check.spec;
  j["J"] = check.zero_set.elements();
  j["case_name"] = check.case_name;
  j["p"] = check.p;
  j["r"] = check.r;
  j["q"] = check.greek.q;
  j["x"] = check.greek.x;
  j["y"] = check.greek.y;
  j["alpha_printed"] = check.alpha_printed;
  j["alpha_computed"] = check.greek.alpha;
  j["gamma_printed"] = check.gamma_printed;
  j["gamma_computed"] = check.greek.gamma;
  j["f_direct"] = check.f_direct;
  out << j.dump() << '\n';
}

TypeACheck type_a_check(int n) {
  const auto d = affine::build(DiagramId{1, Family::A, n});
  TypeACheck out;
  out.rank = n;
  out.min_margin = std::numeric_limits<long long>::max();
  for (const auto& r : thomae::subset_ledger(d)) {
    if (r.zero_set.empty()) continue;
    ++out.subsets;
    out.min_margin = std::min(out.min_margin, r.f - r.type.rank());
  }
  return out;
}

}  // namespace kacscope::reductions
