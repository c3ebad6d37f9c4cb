#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kacscope/affine.hpp"
#include "kacscope/thomae.hpp"

namespace kacscope::ellreg {

using affine::AffineDiagram;
using affine::DiagramId;

struct Provenance {
  enum class Kind { Divisor, Literal };
  Kind kind = Kind::Literal;
  std::string rule;  // e.g. "k=4" or "d=3 via (2n+1)/(2k+1)"
  std::string to_string() const;
};

struct EllRegEntry {
  DiagramId id;
  int order = 0;
  std::vector<int> kac;  // canonical under the diagram symmetries
  Provenance provenance;
};

// Rows for the classical families, generated from the divisor rules.
std::vector<EllRegEntry> classical_table(const DiagramId& id);
// Literal rows for E6, E7, E8, F4, G2, 2E6 and 3D4.
std::vector<EllRegEntry> exceptional_table(const DiagramId& id);
// Dispatches on the family.  Rows are deduplicated and sorted by decreasing order.
std::vector<EllRegEntry> table(const DiagramId& id);

// Empty when the row is consistent: binary entries, stated order, and f = 0.
std::string validate_entry(const AffineDiagram& d, const EllRegEntry& e);

struct CrosscheckReport {
  DiagramId id;
  std::vector<EllRegEntry> table;
  thomae::ScanResult scan;
  std::vector<std::vector<int>> missing;  // tabulated but not on the equality locus
  std::vector<std::vector<int>> extras;   // on the locus but not tabulated
  std::vector<std::string> invalid_rows;
  bool match() const { return missing.empty() && extras.empty() && invalid_rows.empty(); }
};

CrosscheckReport crosscheck(const AffineDiagram& d);

// Columns: diagram, m, kac, J_type, provenance.  Header line first.
void write_tsv(std::ostream& out, const AffineDiagram& d, std::span<const EllRegEntry> entries);

}  // namespace kacscope::ellreg
