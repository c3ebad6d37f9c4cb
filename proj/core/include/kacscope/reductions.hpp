#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kacscope/affine.hpp"

namespace kacscope::reductions {

using affine::AffineDiagram;
using affine::DiagramId;

// Classical diagrams other than untwisted A and 2A2: B, C, D, 2A, 2D.
bool is_reducible(const DiagramId& id);
// The chain parameter n of the family (n_e), and its inverse.
int chain_parameter(const DiagramId& id);
DiagramId with_chain_parameter(const DiagramId& id, int n);
// Common label of the interior nodes.
int interior_label(const AffineDiagram& d);

// No two adjacent interior nodes outside J.
bool in_class_y(const AffineDiagram& d, NodeSet zero_set);
// Components of J made only of interior nodes, and the rest.
std::vector<NodeSet> interior_components(const AffineDiagram& d, NodeSet zero_set);
std::vector<NodeSet> boundary_components(const AffineDiagram& d, NodeSet zero_set);
// Largest rank gap among the interior components.
int rank_gap(const AffineDiagram& d, NodeSet zero_set);
bool in_class_z(const AffineDiagram& d, NodeSet zero_set);

struct Contraction {
  DiagramId diagram;  // one node fewer
  NodeSet zero_set;   // reindexed
  int removed = -1;
  long long f_before = 0;
  long long f_after = 0;
  long long expected_drop = 0;  // c|R_J| - c_J
};

struct Switch {
  NodeSet zero_set;  // J' = J - {k} + {i}
  int branch = -1;   // i
  int tip = -1;      // j
  int neighbor = -1; // k
  int q = 0;
  int s = 0;
  long long f_before = 0;
  long long f_after = 0;
  long long expected_drop = 0;  // 2(q+s-1)c^J
  bool vexing = false;          // q = 1, s = 0
};

using Move = std::variant<Contraction, Switch>;

// i, j outside J and adjacent, i interior.  Contracts when i has degree two or
// j is interior; switches s_i and s_k when i is a degree-3 node and j one of its tips.
Move interior_contraction(const AffineDiagram& d, NodeSet zero_set, int i, int j);

struct Balance {
  NodeSet zero_set;
  int q1 = 0;
  int q2 = 0;
  long long f_before = 0;
  long long f_after = 0;
  long long expected_drop = 0;  // 2c^J(q1-q2-1)
};

// Requires class Y.  Returns nullopt once the rank gap is at most one.
std::optional<Balance> balance_step(const AffineDiagram& d, NodeSet zero_set);

struct GreekDecomposition {
  int c = 0;
  int x = 0;
  int y = 0;
  int q = 1;
  long long a = 0;
  long long b = 0;
  long long boundary_roots = 0;
  long long boundary_weight = 0;
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;

  // alpha as a polynomial in q, other quantities held fixed.
  long long alpha_at(long long q_value) const;
  long long evaluate() const { return c * x * y + alpha * x + beta * y + gamma; }
};

// Requires class Z.
GreekDecomposition greek_decomposition(const AffineDiagram& d, NodeSet zero_set);

struct RefinementStep {
  enum class Kind { Contraction, Balance };
  Kind kind;
  DiagramId diagram;  // after the step
  NodeSet zero_set;
  long long f_before = 0;
  long long f_after = 0;
  long long expected_drop = 0;
};

struct RefinementTrace {
  DiagramId start;
  NodeSet start_set;
  std::vector<RefinementStep> steps;
  DiagramId final_diagram;
  NodeSet final_set;
  bool reached_z = false;
  // Every step drops f by exactly the predicted positive amount.
  bool strictly_decreasing() const;
};

RefinementTrace refine(const AffineDiagram& d, NodeSet zero_set, int max_steps = 10000);

// One instance matched against a displayed case of the classical analysis.
struct CaseCheck {
  std::string spec;
  DiagramId id;
  int rank = 0;  // n_e
  NodeSet zero_set;
  std::string case_name;
  int p = 0;
  int r = 0;
  GreekDecomposition greek;
  long long alpha_printed = 0;
  long long gamma_printed = 0;
  long long f_direct = 0;
  bool alpha_applies() const { return greek.x + greek.y > 0; }
  bool alpha_match() const { return !alpha_applies() || alpha_printed == greek.alpha; }
  bool gamma_match() const { return gamma_printed == greek.gamma; }
  bool consistent() const { return alpha_match() && gamma_match(); }
};

// Requires class Z.  nullopt when the instance has none of the displayed shapes.
std::optional<CaseCheck> match_printed_case(const AffineDiagram& d, NodeSet zero_set);
// One JSON object per line.
void write_discrepancy(std::ostream& out, const CaseCheck& check);

struct TypeACheck {
  int rank = 0;
  std::uint64_t subsets = 0;
  long long min_margin = 0;  // min over nonempty J of f - rank(R_J)
  bool holds() const { return min_margin >= 0; }
};

// Exhaustive check that f >= rank(R_J) > 0 on sl_{n+1} for nonempty J.
TypeACheck type_a_check(int n);

}  // namespace kacscope::reductions
