#include "kacscope/thomae.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "kacscope/error.hpp"

namespace kacscope::thomae {

Fraction Fraction::reduced(long long num, long long den) {
  const long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

long long f_value(const AffineDiagram& d, NodeSet zero_set) {
  if ((zero_set - d.all()) != NodeSet{} || zero_set == d.all())
    throw InvalidInput("f is defined on proper subsets only");
  const long long upper = d.label_sum(d.all() - zero_set);
  const long long lower = d.label_sum(zero_set);
  return upper * d.classify(zero_set).root_count() - static_cast<long long>(d.rank()) * lower;
}

TheoremReport check_theorem(const kac::KacCoordinates& k) {
  const auto& d = k.diagram();
  auto fixed = kac::fixed_subalgebra(k);
  TheoremReport r;
  r.order = kac::order(k);
  r.fixed_dim = fixed.dimension;
  r.fixed_type = std::move(fixed.type);
  const long long quotient = static_cast<long long>(d.coxeter_number()) * d.rank();
  r.lhs = Fraction::reduced(1, r.order);
  r.rhs = Fraction::reduced(r.fixed_dim, quotient);
  const long long cross = static_cast<long long>(r.fixed_dim) * r.order;
  r.holds = quotient <= cross;
  r.equality = quotient == cross;
  return r;
}

std::vector<SubsetRecord> subset_ledger(const AffineDiagram& d) {
  const std::uint32_t full = d.all().bits();
  std::vector<SubsetRecord> out;
  out.reserve(full);
  const long long n = d.rank();
  for (std::uint32_t b = 0; b < full; ++b) {
    SubsetRecord r;
    r.zero_set = NodeSet(b);
    r.lower = d.label_sum(r.zero_set);
    r.upper = d.label_sum() - r.lower;
    r.type = d.classify(r.zero_set);
    r.f = static_cast<long long>(r.upper) * r.type.root_count() - n * r.lower;
    out.push_back(std::move(r));
  }
  return out;
}

ScanResult equality_subsets(const AffineDiagram& d) {
  ScanResult result;
  result.id = d.id();
  result.min_f = std::numeric_limits<long long>::max();
  std::set<std::vector<int>> seen;
  for (auto& r : subset_ledger(d)) {
    ++result.subsets_scanned;
    if (r.f < 0) throw VerificationFailure(d.spec(), r.zero_set.bits(), r.f);
    result.min_f = std::min(result.min_f, r.f);
    if (r.f != 0) continue;
    const auto k = kac::from_zero_set(d, r.zero_set);
    auto canon = kac::canonical_form(d, k.values());
    if (!seen.insert(canon).second) continue;
    EqualityClass c;
    c.zero_set = kac::zero_set(kac::KacCoordinates(d, canon));
    c.kac = std::move(canon);
    c.order = d.twist() * r.upper;
    c.type = d.classify(c.zero_set);
    c.fixed_dim = d.rank() + c.type.root_count();
    result.equality_classes.push_back(std::move(c));
  }
  std::sort(result.equality_classes.begin(), result.equality_classes.end(),
            [](const EqualityClass& a, const EqualityClass& b) {
              return a.order != b.order ? a.order > b.order : a.kac < b.kac;
            });
  return result;
}

namespace {

template <class Key, class Value>
std::vector<StepRow> tabulate(const AffineDiagram& d, int first, int last, int stride, Key key,
                              Value value) {
  const auto ledger = subset_ledger(d);
  std::vector<StepRow> rows;
  for (int k = first; k <= last; k += stride) {
    StepRow row;
    row.key = k;
    row.minimum = std::numeric_limits<int>::max();
    std::set<dynkin::RootSystemProduct> achievers;
    for (const auto& r : ledger) {
      if (key(r) != k) continue;
      if (r.f == 0) row.witnesses.push_back(r.zero_set);
      const int v = value(r);
      if (v < row.minimum) {
        row.minimum = v;
        achievers.clear();
      }
      if (v == row.minimum) achievers.insert(r.type);
    }
    if (achievers.empty()) continue;
    row.achievers.assign(achievers.begin(), achievers.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<StepRow> step1_table(const AffineDiagram& d, int m_first, int m_last) {
  return tabulate(
      d, m_first, m_last, 1, [](const SubsetRecord& r) { return r.upper; },
      [](const SubsetRecord& r) { return r.roots(); });
}

std::vector<StepRow> step2_table(const AffineDiagram& d, int r_first, int r_last) {
  return tabulate(
      d, r_first, r_last, 2, [](const SubsetRecord& r) { return r.roots(); },
      [](const SubsetRecord& r) { return r.upper; });
}

}  // namespace kacscope::thomae
