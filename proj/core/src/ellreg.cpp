#include "kacscope/ellreg.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "kacscope/error.hpp"
#include "kacscope/kac.hpp"

namespace kacscope::ellreg {

using dynkin::Family;

namespace {

using Row = std::vector<int>;

Row repeat(int value, int count) { return Row(std::max(count, 0), value); }

Row operator+(Row a, const Row& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Row times(const Row& block, int count) {
  Row out;
  for (int i = 0; i < count; ++i) out = out + block;
  return out;
}

// Fork families: the first entry of `line` is shared by both tips 0 and 1,
// the rest run along nodes 2..n.
Row from_fork_line(const Row& line) { return Row{line[0]} + line; }

// D_n: line is [left tips, 2, ..., n-2, right tips].
Row from_d_line(const Row& line, int n) {
  Row s(n + 1);
  s[0] = s[1] = line.front();
  for (int i = 2; i <= n - 2; ++i) s[i] = line[i - 1];
  s[n - 1] = s[n] = line.back();
  return s;
}

Provenance divisor(std::string rule) { return {Provenance::Kind::Divisor, std::move(rule)}; }

struct Builder {
  DiagramId id;
  std::vector<EllRegEntry> rows;
  void add(int m, Row s, std::string rule) {
    rows.push_back({id, m, std::move(s), divisor(std::move(rule))});
  }
};

void b_rows(Builder& b, int n) {
  b.add(2 * n, repeat(1, n + 1), "k=1");
  for (int k = 2; k <= n; ++k) {
    if (n % k) continue;
    const std::string rule = "k=" + std::to_string(k);
    if (k == 2) {
      Row line;
      for (int i = 1; i <= n; ++i) line.push_back(i % 2);
      b.add(n, from_fork_line(line), rule);
      continue;
    }
    const int left = k % 2 == 0 ? k / 2 : (k + 1) / 2;
    const int right = k % 2 == 0 ? k / 2 : (k - 1) / 2;
    Row line = repeat(0, left - 1) + Row{1} + times(repeat(0, k - 1) + Row{1}, n / k - 1) +
               repeat(0, right);
    b.add(2 * n / k, from_fork_line(line), rule);
  }
}

void c_rows(Builder& b, int n) {
  for (int k = 1; k <= n; ++k) {
    if (n % k) continue;
    Row s = Row{1} + times(repeat(0, k - 1) + Row{1}, n / k);
    b.add(2 * n / k, s, "k=" + std::to_string(k));
  }
}

void d_rows(Builder& b, int n) {
  b.add(2 * n - 2, repeat(1, n + 1), "k=1");
  if (n % 2 == 0) {
    Row line;
    for (int i = 0; i < n - 1; ++i) line.push_back(i % 2 == 0 ? 1 : 0);
    b.add(n, from_d_line(line, n), "k=2");
  }
  for (int k = 3; k <= n; ++k) {
    const std::string rule = "k=" + std::to_string(k);
    if (k % 2 == 0 && n % k == 0) {
      const int p = k / 2;
      Row line = repeat(0, p - 1) + Row{1} + times(repeat(0, k - 1) + Row{1}, n / k - 1) +
                 repeat(0, p - 1);
      b.add(2 * n / k, from_d_line(line, n), rule);
    } else if (k % 2 == 1 && (n - 1) % k == 0) {
      const int p = (k + 1) / 2;
      Row line = repeat(0, p - 1) + Row{1} +
                 times(repeat(0, k - 1) + Row{1}, (n - 1) / k - 1) + repeat(0, p - 1);
      b.add((2 * n - 2) / k, from_d_line(line, n), rule);
    }
  }
}

void twisted_d_rows(Builder& b, int n) {
  b.add(2 * (n + 1), repeat(1, n + 1), "k=1");
  if (n % 2 == 0) {
    Row s;
    for (int i = 0; i <= n; ++i) s.push_back(i % 2);
    b.add(n, s, "k=2");
  }
  for (int k = 3; k <= n + 1; ++k) {
    const std::string rule = "k=" + std::to_string(k);
    if (k % 2 == 0 && n % k == 0) {
      Row s = repeat(0, k / 2) + Row{1} + times(repeat(0, k - 1) + Row{1}, n / k - 1) +
              repeat(0, k / 2);
      b.add(2 * n / k, s, rule);
    } else if (k % 2 == 1 && (n + 1) % k == 0) {
      const int p = (k - 1) / 2;
      Row s = repeat(0, p) + Row{1} + times(repeat(0, k - 1) + Row{1}, (n + 1) / k - 1) +
              repeat(0, p);
      b.add(2 * (n + 1) / k, s, rule);
    }
  }
}

void twisted_even_a_rows(Builder& b, int n) {
  b.add(2 * (2 * n + 1), repeat(1, n + 1), "d=" + std::to_string(2 * n + 1));
  b.add(2, Row{1} + repeat(0, n), "d=1");
  for (int k = 1; k < n; ++k) {
    if ((2 * n + 1) % (2 * k + 1) == 0) {
      const int d = (2 * n + 1) / (2 * k + 1);
      Row s = Row{1} + times(repeat(0, 2 * k) + Row{1}, (d - 1) / 2) + repeat(0, k);
      b.add(2 * d, s, "d=" + std::to_string(d) + " via (2n+1)/(2k+1), k=" + std::to_string(k));
    }
    if (n % k == 0 && (n / k) % 2 == 1) {
      const int d = n / k;
      Row s = Row{1} + times(repeat(0, 2 * k - 1) + Row{1}, (d - 1) / 2) + repeat(0, k);
      b.add(2 * d, s, "d=" + std::to_string(d) + " via n/k, k=" + std::to_string(k));
    }
  }
}

void twisted_odd_a_rows(Builder& b, int n) {
  b.add(2 * (2 * n - 1), repeat(1, n + 1), "d=" + std::to_string(2 * n - 1));
  b.add(2, repeat(0, n) + Row{1}, "d=1");
  if (n % 2 == 1) {
    Row line;
    for (int i = 1; i <= n; ++i) line.push_back(i % 2);
    b.add(2 * n, from_fork_line(line), "d=" + std::to_string(n));
  }
  for (int k = 2; k < n; ++k) {
    if ((2 * n - 1) % (2 * k - 1) == 0) {
      const int d = (2 * n - 1) / (2 * k - 1);
      Row line = repeat(0, k - 1) + times(Row{1} + repeat(0, 2 * k - 2), (d - 1) / 2) + Row{1};
      b.add(2 * d, from_fork_line(line),
            "d=" + std::to_string(d) + " via (2n-1)/(2k-1), k=" + std::to_string(k));
    }
    if (n % k == 0 && (n / k) % 2 == 1) {
      const int d = n / k;
      Row line = repeat(0, k - 1) + times(Row{1} + repeat(0, 2 * k - 1), (d - 1) / 2) + Row{1};
      b.add(2 * d, from_fork_line(line),
            "d=" + std::to_string(d) + " via n/k, k=" + std::to_string(k));
    }
  }
}

std::vector<EllRegEntry> finish(const DiagramId& id, std::vector<EllRegEntry> rows) {
  const auto d = affine::build(id);
  std::set<std::pair<int, Row>> seen;
  std::vector<EllRegEntry> out;
  for (auto& r : rows) {
    if (static_cast<int>(r.kac.size()) != d.size())
      throw Error("ell-reg row of wrong length for " + d.spec() + ": " + r.provenance.rule);
    r.kac = kac::canonical_form(d, r.kac);
    if (seen.insert({r.order, r.kac}).second) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const EllRegEntry& a, const EllRegEntry& b) {
    return a.order != b.order ? a.order > b.order : a.kac < b.kac;
  });
  return out;
}

}  // namespace

std::string Provenance::to_string() const {
  return kind == Kind::Literal ? "literal" : "divisor " + rule;
}

std::vector<EllRegEntry> classical_table(const DiagramId& id) {
  affine::validate(id);
  Builder b{id, {}};
  const int r = id.base_rank;
  if (id.twist == 1) {
    switch (id.family) {
      case Family::A: b.add(r + 1, repeat(1, r + 1), "principal"); break;
      case Family::B: b_rows(b, r); break;
      case Family::C: c_rows(b, r); break;
      case Family::D: d_rows(b, r); break;
      default: throw InvalidInput(affine::to_spec(id) + " is not a classical diagram");
    }
  } else if (id.twist == 2 && id.family == Family::A) {
    if (r % 2 == 0)
      twisted_even_a_rows(b, r / 2);
    else
      twisted_odd_a_rows(b, (r + 1) / 2);
  } else if (id.twist == 2 && id.family == Family::D) {
    twisted_d_rows(b, r - 1);
  } else {
    throw InvalidInput(affine::to_spec(id) + " is not a classical diagram");
  }
  return finish(id, std::move(b.rows));
}

std::vector<EllRegEntry> exceptional_table(const DiagramId& id) {
  affine::validate(id);
  std::vector<std::pair<int, Row>> rows;
  if (id.twist == 1 && id.family == Family::E6) {
    rows = {{12, {1, 1, 1, 1, 1, 1, 1}}, {9, {1, 1, 1, 1, 0, 1, 1}},
            {6, {1, 1, 0, 0, 1, 0, 1}},  {3, {0, 0, 0, 0, 1, 0, 0}}};
  } else if (id.twist == 1 && id.family == Family::E7) {
    rows = {{18, {1, 1, 1, 1, 1, 1, 1, 1}}, {14, {1, 1, 1, 1, 0, 1, 1, 1}},
            {6, {1, 0, 0, 0, 1, 0, 0, 1}},  {2, {0, 0, 1, 0, 0, 0, 0, 0}}};
  } else if (id.twist == 1 && id.family == Family::E8) {
    rows = {{30, {1, 1, 1, 1, 1, 1, 1, 1, 1}}, {24, {1, 1, 1, 1, 0, 1, 1, 1, 1}},
            {20, {1, 1, 1, 1, 0, 1, 0, 1, 1}}, {15, {1, 1, 0, 0, 1, 0, 1, 0, 1}},
            {12, {1, 1, 0, 0, 1, 0, 0, 1, 0}}, {10, {1, 0, 0, 0, 1, 0, 0, 1, 0}},
            {8, {0, 0, 0, 0, 1, 0, 0, 0, 1}},  {6, {1, 0, 0, 0, 0, 1, 0, 0, 0}},
            {5, {0, 0, 0, 0, 0, 1, 0, 0, 0}},  {4, {0, 0, 0, 0, 0, 0, 1, 0, 0}},
            {3, {0, 0, 1, 0, 0, 0, 0, 0, 0}},  {2, {0, 1, 0, 0, 0, 0, 0, 0, 0}}};
  } else if (id.twist == 1 && id.family == Family::F4) {
    rows = {{12, {1, 1, 1, 1, 1}}, {8, {1, 1, 1, 0, 1}}, {6, {1, 0, 1, 0, 1}},
            {4, {1, 0, 1, 0, 0}},  {3, {0, 0, 1, 0, 0}}, {2, {0, 1, 0, 0, 0}}};
  } else if (id.twist == 1 && id.family == Family::G2) {
    rows = {{6, {1, 1, 1}}, {3, {1, 1, 0}}, {2, {0, 1, 0}}};
  } else if (id.twist == 2 && id.family == Family::E6) {
    rows = {{18, {1, 1, 1, 1, 1}}, {12, {1, 1, 0, 1, 1}}, {6, {1, 0, 0, 1, 0}},
            {4, {0, 0, 0, 1, 0}},  {2, {0, 0, 0, 0, 1}}};
  } else if (id.twist == 3) {
    // The m=3 row is 0,0,1; the reversed reading fails f = 0.
    rows = {{12, {1, 1, 1}}, {6, {1, 0, 1}}, {3, {0, 0, 1}}};
  } else {
    throw InvalidInput(affine::to_spec(id) + " is not an exceptional diagram");
  }
  std::vector<EllRegEntry> out;
  for (auto& [m, s] : rows) out.push_back({id, m, std::move(s), {Provenance::Kind::Literal, ""}});
  return finish(id, std::move(out));
}

std::vector<EllRegEntry> table(const DiagramId& id) {
  const bool classical =
      id.twist <= 2 && (id.family == Family::A || id.family == Family::B ||
                        id.family == Family::C || id.family == Family::D);
  return classical ? classical_table(id) : exceptional_table(id);
}

std::string validate_entry(const AffineDiagram& d, const EllRegEntry& e) {
  if (static_cast<int>(e.kac.size()) != d.size()) return "wrong number of entries";
  if (std::any_of(e.kac.begin(), e.kac.end(), [](int v) { return v != 0 && v != 1; }))
    return "entries must be 0 or 1";
  const kac::KacCoordinates k(d, e.kac);
  if (kac::order(k) != e.order)
    return "stated order " + std::to_string(e.order) + " but coordinates give " +
           std::to_string(kac::order(k));
  const long long f = thomae::f_value(d, kac::zero_set(k));
  if (f != 0) return "f = " + std::to_string(f) + " at the zero set";
  return {};
}

CrosscheckReport crosscheck(const AffineDiagram& d) {
  CrosscheckReport r;
  r.id = d.id();
  r.table = table(d.id());
  r.scan = thomae::equality_subsets(d);
  std::set<std::vector<int>> tab, locus;
  for (const auto& e : r.table) {
    tab.insert(e.kac);
    if (auto why = validate_entry(d, e); !why.empty())
      r.invalid_rows.push_back(kac::format_kac(e.kac) + ": " + why);
  }
  for (const auto& c : r.scan.equality_classes) locus.insert(c.kac);
  std::set_difference(tab.begin(), tab.end(), locus.begin(), locus.end(),
                      std::back_inserter(r.missing));
  std::set_difference(locus.begin(), locus.end(), tab.begin(), tab.end(),
                      std::back_inserter(r.extras));
  return r;
}

void write_tsv(std::ostream& out, const AffineDiagram& d, std::span<const EllRegEntry> entries) {
  out << "diagram\tm\tkac\tJ_type\tprovenance\n";
  for (const auto& e : entries) {
    const kac::KacCoordinates k(d, e.kac);
    out << d.spec() << '\t' << e.order << '\t' << kac::format_kac(e.kac) << '\t'
        << d.classify(kac::zero_set(k)).to_string() << '\t' << e.provenance.to_string() << '\n';
  }
}

}  // namespace kacscope::ellreg
