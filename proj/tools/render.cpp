#include <string>

#include "cli.hpp"

namespace kacscope::cli {

namespace {

std::string bond(const affine::AffineDiagram& d, int a, int b, bool unicode) {
  for (const auto& e : d.edges()) {
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) continue;
    const bool forward = e.arrow_to == b;
    const bool backward = e.arrow_to == a;
    switch (e.multiplicity) {
      case 1: return " ";
      case 2:
        if (unicode) return forward ? "⇒" : "⇐";
        return forward ? "=>" : "<=";
      case 3:
        if (unicode) return forward ? "⇛" : "⇚";
        return forward ? "=3>" : "<3=";
      default:
        if (forward) return "=4>";
        if (backward) return "<4=";
        return "<4>";
    }
  }
  return " ";
}

}  // namespace

std::string render_kac(const affine::AffineDiagram& d, std::span<const int> s, bool unicode) {
  const auto& layout = d.layout();
  std::string out;
  int prev = -1;
  for (int v : layout.spine) {
    if (prev >= 0) out += bond(d, prev, v, unicode);
    out += std::to_string(s[v]);
    for (const auto& arm : layout.arms) {
      if (arm.anchor != v) continue;
      out += " (";
      int last = -1;
      for (int a : arm.nodes) {
        if (last >= 0) out += bond(d, last, a, unicode);
        out += std::to_string(s[a]);
        last = a;
      }
      out += ")";
    }
    prev = v;
  }
  return out;
}

}  // namespace kacscope::cli
