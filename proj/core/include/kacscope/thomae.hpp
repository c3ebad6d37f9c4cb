#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kacscope/affine.hpp"
#include "kacscope/kac.hpp"

namespace kacscope::thomae {

using affine::AffineDiagram;

struct Fraction {
  long long num = 0;
  long long den = 1;
  static Fraction reduced(long long num, long long den);
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct TheoremReport {
  int order = 0;
  int fixed_dim = 0;
  dynkin::RootSystemProduct fixed_type;
  Fraction lhs;  // 1/m
  Fraction rhs;  // dim g^theta / dim(g/t)
  bool holds = false;
  bool equality = false;
};

// f = c^J |R_J| - n_e c_J, with c^J the label sum off J and c_J the sum on J.
long long f_value(const AffineDiagram& d, NodeSet zero_set);
TheoremReport check_theorem(const kac::KacCoordinates& k);

struct SubsetRecord {
  NodeSet zero_set;
  int upper = 0;  // c^J
  int lower = 0;  // c_J
  dynkin::RootSystemProduct type;
  long long f = 0;
  int roots() const { return type.root_count(); }
};

// One record per proper subset J, in increasing bitmask order.
std::vector<SubsetRecord> subset_ledger(const AffineDiagram& d);

struct EqualityClass {
  std::vector<int> kac;  // canonical representative
  NodeSet zero_set;
  int order = 0;
  dynkin::RootSystemProduct type;
  int fixed_dim = 0;
};

struct ScanResult {
  affine::DiagramId id;
  std::uint64_t subsets_scanned = 0;
  long long min_f = 0;
  std::vector<EqualityClass> equality_classes;  // by decreasing order, then Kac vector
};

// Throws VerificationFailure if any subset has f < 0.
ScanResult equality_subsets(const AffineDiagram& d);

struct StepRow {
  int key = 0;      // m for the first table, |R_J| for the second
  int minimum = 0;  // min |R_J| at c^J = m, or min c^J at |R_J| = r
  std::vector<dynkin::RootSystemProduct> achievers;
  std::vector<NodeSet> witnesses;  // subsets with f = 0 among those considered
};

// r(m) = min |R_J| over J with c^J = m.  Keys with no subset are skipped.
std::vector<StepRow> step1_table(const AffineDiagram& d, int m_first, int m_last);
// m(r) = min c^J over J with |R_J| = r, for even r.
std::vector<StepRow> step2_table(const AffineDiagram& d, int r_first, int r_last);

}  // namespace kacscope::thomae
