#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kacscope/dynkin.hpp"
#include "kacscope/nodeset.hpp"

namespace kacscope::affine {

using dynkin::Edge;
using dynkin::Family;

// Affine diagram of twist e over a finite family; base_rank is the rank of g.
struct DiagramId {
  int twist = 1;
  Family family = Family::A;
  int base_rank = 1;
  friend auto operator<=>(const DiagramId&, const DiagramId&) = default;
};

// Throws InvalidInput naming the violated admissibility rule.
void validate(const DiagramId& id);
// Grammar: <e><family><baserank>, e optional, case-insensitive ("A5", "2A8", "3d4").
DiagramId parse_spec(std::string_view text);
std::string to_spec(const DiagramId& id);

using Permutation = std::vector<int>;

// Drawing order: a spine, plus short arms hanging off spine nodes.
struct Layout {
  struct Arm {
    int anchor;
    std::vector<int> nodes;
  };
  std::vector<int> spine;
  std::vector<Arm> arms;
  bool cyclic = false;
};

class AffineDiagram {
 public:
  const DiagramId& id() const { return id_; }
  std::string spec() const { return to_spec(id_); }
  int size() const { return static_cast<int>(labels_.size()); }
  int twist() const { return id_.twist; }
  // n_e: rank of the fixed-point algebra of the diagram automorphism.
  int rank() const { return rank_; }
  int label(int i) const { return labels_.at(i); }
  std::span<const int> labels() const { return labels_; }
  std::span<const Edge> edges() const { return edges_; }
  NodeSet all() const { return NodeSet::full(size()); }

  int label_sum() const;
  int label_sum(NodeSet s) const;
  int coxeter_number() const { return id_.twist * label_sum(); }
  dynkin::FiniteType base_type() const;
  int base_root_count() const;
  int dim_g() const;

  NodeSet neighbors(int i) const { return neighbors_.at(i); }
  int degree(int i) const { return neighbors_.at(i).size(); }
  bool is_interior(int i) const { return degree(i) >= 2; }
  NodeSet interior() const;
  int bond(int i, int j) const;

  const std::vector<Permutation>& omega() const { return omega_; }
  const Layout& layout() const { return layout_; }

  dynkin::RootSystemProduct classify(NodeSet s) const;
  // Connected components of the subgraph induced on s.
  std::vector<NodeSet> components(NodeSet s) const;

 private:
  friend AffineDiagram build(const DiagramId& id);
  void add_edge(int u, int v, int mult = 1, int arrow_to = -1);

  DiagramId id_;
  int rank_ = 0;
  std::vector<int> labels_;
  std::vector<Edge> edges_;
  std::vector<NodeSet> neighbors_;
  std::vector<Permutation> omega_;
  Layout layout_;
};

AffineDiagram build(const DiagramId& id);
inline AffineDiagram build(std::string_view spec) { return build(parse_spec(spec)); }

int coxeter_number(const AffineDiagram& d);
const std::vector<Permutation>& omega_group(const AffineDiagram& d);

bool is_automorphism(const AffineDiagram& d, const Permutation& p);
// Every label-, bond- and arrow-preserving permutation, found by search.
std::vector<Permutation> automorphisms(const AffineDiagram& d);
NodeSet apply(const Permutation& p, NodeSet s);

// All admissible diagrams whose finite algebra has rank at most max_rank.
std::vector<DiagramId> catalog(int max_rank);

}  // namespace kacscope::affine
