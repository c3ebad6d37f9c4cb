#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace kacscope {

// Subset of the nodes of a diagram, at most 32 nodes.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr NodeSet full(int n) {
    return NodeSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr NodeSet single(int i) { return NodeSet(std::uint32_t{1} << i); }
  static NodeSet of(const std::vector<int>& nodes) {
    NodeSet s;
    for (int i : nodes) s.insert(i);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr void insert(int i) { bits_ |= std::uint32_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint32_t{1} << i); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace kacscope
