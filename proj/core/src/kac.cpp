#include "kacscope/kac.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "kacscope/error.hpp"

namespace kacscope::kac {

KacCoordinates::KacCoordinates(const AffineDiagram& diagram, std::vector<int> values)
    : diagram_(&diagram), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != diagram.size())
    throw InvalidInput("Kac coordinates for " + diagram.spec() + " need " +
                       std::to_string(diagram.size()) + " entries, got " +
                       std::to_string(values_.size()));
  int g = 0;
  for (int v : values_) {
    if (v < 0) throw InvalidInput("Kac coordinates must be non-negative");
    g = std::gcd(g, v);
  }
  if (g == 0) throw InvalidInput("Kac coordinates must not all vanish");
  if (g != 1) throw InvalidInput("Kac coordinates must be coprime, gcd is " + std::to_string(g));
}

int order(const KacCoordinates& k) {
  const auto& d = k.diagram();
  int sum = 0;
  for (int i = 0; i < k.size(); ++i) sum += d.label(i) * k[i];
  return d.twist() * sum;
}

NodeSet zero_set(const KacCoordinates& k) {
  NodeSet j;
  for (int i = 0; i < k.size(); ++i)
    if (k[i] == 0) j.insert(i);
  return j;
}

FixedSubalgebraData fixed_subalgebra(const KacCoordinates& k) {
  const NodeSet j = zero_set(k);
  auto type = k.diagram().classify(j);
  const int dim = k.diagram().rank() + type.root_count();
  return {j, std::move(type), dim};
}

KacCoordinates from_zero_set(const AffineDiagram& d, NodeSet zero_set) {
  if ((zero_set - d.all()) != NodeSet{}) throw InvalidInput("subset has nodes outside the diagram");
  if (zero_set == d.all()) throw InvalidInput("zero set must be a proper subset");
  std::vector<int> s(d.size(), 1);
  for (int i : zero_set.elements()) s[i] = 0;
  return KacCoordinates(d, std::move(s));
}

namespace {

void solve(const AffineDiagram& d, int i, int remaining, int g, std::vector<int>& s,
           std::vector<std::vector<int>>& out) {
  if (i == d.size()) {
    if (remaining == 0 && g == 1) out.push_back(s);
    return;
  }
  const int c = d.label(i);
  for (int v = 0; v * c <= remaining; ++v) {
    s[i] = v;
    solve(d, i + 1, remaining - v * c, std::gcd(g, v), s, out);
  }
  s[i] = 0;
}

}  // namespace

std::vector<std::vector<int>> raw_solutions(const AffineDiagram& d, int m) {
  std::vector<std::vector<int>> out;
  if (m <= 0 || m % d.twist() != 0) return out;
  std::vector<int> s(d.size(), 0);
  solve(d, 0, m / d.twist(), 0, s, out);
  return out;
}

std::vector<int> canonical_form(const AffineDiagram& d, std::span<const int> s) {
  std::vector<int> best(s.begin(), s.end());
  std::vector<int> image(s.size());
  for (const auto& p : d.omega()) {
    for (std::size_t i = 0; i < s.size(); ++i) image[p[i]] = s[i];
    if (image < best) best = image;
  }
  return best;
}

std::size_t orbit_size(const AffineDiagram& d, std::span<const int> s) {
  std::set<std::vector<int>> orbit;
  std::vector<int> image(s.size());
  for (const auto& p : d.omega()) {
    for (std::size_t i = 0; i < s.size(); ++i) image[p[i]] = s[i];
    orbit.insert(image);
  }
  return orbit.size();
}

std::vector<KacCoordinates> enumerate_classes(const AffineDiagram& d, int m) {
  std::set<std::vector<int>> reps;
  for (const auto& s : raw_solutions(d, m)) reps.insert(canonical_form(d, s));
  std::vector<KacCoordinates> out;
  for (const auto& s : reps) out.emplace_back(d, s);
  return out;
}

KacCoordinates parse_kac(const AffineDiagram& d, std::string_view text) {
  std::vector<int> s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    auto field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw InvalidInput("cannot parse Kac coordinates '" + std::string(text) + "'");
    s.push_back(v);
    pos = comma + 1;
  }
  return KacCoordinates(d, std::move(s));
}

std::string format_kac(std::span<const int> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace kacscope::kac
