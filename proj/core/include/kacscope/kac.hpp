#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kacscope/affine.hpp"

namespace kacscope::kac {

using affine::AffineDiagram;

// Non-negative integers s_i on the nodes of a diagram, coprime, not all zero.
// Holds a reference: the diagram must outlive the coordinates.
class KacCoordinates {
 public:
  KacCoordinates(const AffineDiagram& diagram, std::vector<int> values);

  const AffineDiagram& diagram() const { return *diagram_; }
  std::span<const int> values() const { return values_; }
  int operator[](int i) const { return values_.at(i); }
  int size() const { return static_cast<int>(values_.size()); }

  friend bool operator==(const KacCoordinates& a, const KacCoordinates& b) {
    return a.diagram_->id() == b.diagram_->id() && a.values_ == b.values_;
  }

 private:
  const AffineDiagram* diagram_;
  std::vector<int> values_;
};

int order(const KacCoordinates& k);
NodeSet zero_set(const KacCoordinates& k);

struct FixedSubalgebraData {
  NodeSet zero_set;
  dynkin::RootSystemProduct type;
  int dimension;  // n_e + |R_J|
};

FixedSubalgebraData fixed_subalgebra(const KacCoordinates& k);

// s_i = 1 off J, 0 on J.  J must be a proper subset.
KacCoordinates from_zero_set(const AffineDiagram& d, NodeSet zero_set);

// Every coprime solution of e * sum c_i s_i = m, before quotienting by the diagram symmetries.
std::vector<std::vector<int>> raw_solutions(const AffineDiagram& d, int m);
// One canonical representative per symmetry orbit, sorted.
std::vector<KacCoordinates> enumerate_classes(const AffineDiagram& d, int m);

// Lexicographically least member of the orbit.
std::vector<int> canonical_form(const AffineDiagram& d, std::span<const int> s);
std::size_t orbit_size(const AffineDiagram& d, std::span<const int> s);

// Comma-separated values in node order.
KacCoordinates parse_kac(const AffineDiagram& d, std::string_view text);
std::string format_kac(std::span<const int> s);

}  // namespace kacscope::kac
