#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kacscope::dynkin {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string_view family_name(Family f);

struct FiniteType {
  Family family;
  int rank;
  friend auto operator<=>(const FiniteType&, const FiniteType&) = default;
};

bool is_valid(FiniteType t);
int root_count(FiniteType t);
int coxeter_number(FiniteType t);
std::string to_string(FiniteType t);

// Sorted multiset of simple factors, low-rank coincidences folded away
// (B1 = C1 = A1, D2 = 2A1, D3 = A3, C2 = B2).
class RootSystemProduct {
 public:
  RootSystemProduct() = default;

  static RootSystemProduct parse(std::string_view text);

  void add(Family family, int rank);
  void add(const RootSystemProduct& other);

  const std::vector<FiniteType>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  int rank() const;
  int root_count() const;
  // Largest minus smallest rank among the factors; 0 when empty.
  int rank_spread() const;
  std::string to_string() const;

  friend bool operator==(const RootSystemProduct&, const RootSystemProduct&) = default;
  friend auto operator<=>(const RootSystemProduct&, const RootSystemProduct&) = default;

 private:
  std::vector<FiniteType> factors_;
};

// Bond between two nodes.  arrow_to is the short-root end, or -1.
struct Edge {
  int u;
  int v;
  int multiplicity = 1;
  int arrow_to = -1;
};

// Classifies the subgraph induced on `nodes`.  Edges with an endpoint
// outside `nodes` are ignored.  Throws ClassificationError if a component
// is not of finite type.
RootSystemProduct classify_subgraph(std::span<const int> nodes, std::span<const Edge> edges);

}  // namespace kacscope::dynkin
