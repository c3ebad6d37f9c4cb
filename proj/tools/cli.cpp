#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kacscope/ellreg.hpp"
#include "kacscope/error.hpp"
#include "kacscope/kac.hpp"
#include "kacscope/thomae.hpp"

namespace kacscope::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kReportVersion = "1";

json fraction(const thomae::Fraction& f) { return json{{"num", f.num}, {"den", f.den}}; }

std::vector<affine::DiagramId> resolve(const RunConfig& c) {
  std::vector<affine::DiagramId> ids;
  if (c.specs.empty()) return affine::catalog(c.max_rank);
  for (const auto& s : c.specs) ids.push_back(affine::parse_spec(s));
  return ids;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers; results keep index order.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct VerifyRecord {
  affine::AffineDiagram diagram;
  ellreg::CrosscheckReport report;
};

json class_json(const thomae::EqualityClass& c) {
  return json{{"m", c.order},
              {"kac", kac::format_kac(c.kac)},
              {"fixed_type", c.type.to_string()},
              {"fixed_dim", c.fixed_dim}};
}

json verify_json(const VerifyRecord& r) {
  const auto& d = r.diagram;
  json classes = json::array();
  for (const auto& c : r.report.scan.equality_classes) classes.push_back(class_json(c));
  return json{{"spec", d.spec()},
              {"h_e", d.coxeter_number()},
              {"n_e", d.rank()},
              {"dim_g", d.dim_g()},
              {"classes_checked", r.report.scan.subsets_scanned},
              {"min_f", r.report.scan.min_f},
              {"equality_classes", classes},
              {"ellreg_match", r.report.match()}};
}

int do_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto ids = resolve(c);
  std::vector<std::optional<VerifyRecord>> records(ids.size());
  try {
    parallel_for(ids.size(), c.threads, [&](std::size_t i) {
      auto d = affine::build(ids[i]);
      auto rep = ellreg::crosscheck(d);
      records[i].emplace(VerifyRecord{std::move(d), std::move(rep)});
    });
  } catch (const VerificationFailure& f) {
    const auto d = affine::build(f.spec());
    const NodeSet j(f.zero_set());
    err << json{{"counterexample",
                 {{"spec", f.spec()},
                  {"J", j.elements()},
                  {"kac", kac::format_kac(kac::from_zero_set(d, j).values())},
                  {"f", f.f()}}}}
               .dump()
        << '\n';
    return kExitCounterexample;
  }

  bool all_match = true;
  for (const auto& r : records) all_match = all_match && r->report.match();

  if (c.format == Format::Json) {
    json diagrams = json::array();
    for (const auto& r : records) diagrams.push_back(verify_json(*r));
    out << json{{"version", kReportVersion}, {"diagrams", diagrams}}.dump(2) << '\n';
  } else if (c.format == Format::Tsv) {
    out << "spec\th_e\tn_e\tdim_g\tclasses_checked\tmin_f\tequality_classes\tellreg_match\n";
    for (const auto& r : records) {
      const auto& d = r->diagram;
      std::string orders;
      for (const auto& e : r->report.scan.equality_classes)
        orders += (orders.empty() ? "" : ",") + std::to_string(e.order);
      out << d.spec() << '\t' << d.coxeter_number() << '\t' << d.rank() << '\t' << d.dim_g() << '\t'
          << r->report.scan.subsets_scanned << '\t' << r->report.scan.min_f << '\t' << orders << '\t'
          << (r->report.match() ? "true" : "false") << '\n';
    }
  } else {
    for (const auto& r : records) {
      const auto& d = r->diagram;
      const auto& scan = r->report.scan;
      out << d.spec() << "  h_e=" << d.coxeter_number() << " n_e=" << d.rank()
          << " subsets=" << scan.subsets_scanned << " min_f=" << scan.min_f
          << " equality_classes=" << scan.equality_classes.size()
          << " ellreg=" << (r->report.match() ? "match" : "MISMATCH") << '\n';
      for (const auto& e : scan.equality_classes)
        out << "  m=" << e.order << "  " << render_kac(d, e.kac, c.unicode) << "  "
            << e.type.to_string() << " dim=" << e.fixed_dim << '\n';
      for (const auto& m : r->report.missing)
        out << "  tabulated but f>0: " << kac::format_kac(m) << '\n';
      for (const auto& m : r->report.extras)
        out << "  f=0 but not tabulated: " << kac::format_kac(m) << '\n';
      for (const auto& m : r->report.invalid_rows) out << "  invalid row: " << m << '\n';
    }
    out << (all_match ? "all diagrams pass" : "ell-reg mismatch found") << '\n';
  }
  if (!all_match) err << "ell-reg tables disagree with the equality locus\n";
  return all_match ? kExitPass : kExitCounterexample;
}

json report_json(const affine::AffineDiagram& d, const kac::KacCoordinates& k,
                 const thomae::TheoremReport& r) {
  (void)d;
  return json{{"kac", kac::format_kac(k.values())},
              {"m", r.order},
              {"fixed_type", r.fixed_type.to_string()},
              {"fixed_dim", r.fixed_dim},
              {"lhs", fraction(r.lhs)},
              {"rhs", fraction(r.rhs)},
              {"holds", r.holds},
              {"equality", r.equality}};
}

void report_text(std::ostream& out, const affine::AffineDiagram& d, const kac::KacCoordinates& k,
                 const thomae::TheoremReport& r, bool unicode) {
  out << render_kac(d, k.values(), unicode) << "  m=" << r.order << "  type="
      << r.fixed_type.to_string() << "  dim=" << r.fixed_dim << "  " << r.lhs.num << "/"
      << r.lhs.den << (r.equality ? " = " : r.holds ? " < " : " > ") << r.rhs.num << "/"
      << r.rhs.den << (r.equality ? "  ell-reg" : "") << '\n';
}

const char* kReportTsvHeader = "kac\tm\tfixed_type\tfixed_dim\tlhs\trhs\tholds\tequality\n";

void report_tsv(std::ostream& out, const kac::KacCoordinates& k, const thomae::TheoremReport& r) {
  out << kac::format_kac(k.values()) << '\t' << r.order << '\t' << r.fixed_type.to_string() << '\t'
      << r.fixed_dim << '\t' << r.lhs.num << '/' << r.lhs.den << '\t' << r.rhs.num << '/'
      << r.rhs.den << '\t' << (r.holds ? "true" : "false") << '\t'
      << (r.equality ? "true" : "false") << '\n';
}

int do_enumerate(const RunConfig& c, std::ostream& out) {
  const auto d = affine::build(c.specs.front());
  const auto classes = kac::enumerate_classes(d, *c.order);
  bool ok = true;
  json rows = json::array();
  if (c.format == Format::Tsv) out << kReportTsvHeader;
  for (const auto& k : classes) {
    const auto r = thomae::check_theorem(k);
    ok = ok && r.holds;
    if (c.format == Format::Json)
      rows.push_back(report_json(d, k, r));
    else if (c.format == Format::Tsv)
      report_tsv(out, k, r);
    else
      report_text(out, d, k, r, c.unicode);
  }
  if (c.format == Format::Json)
    out << json{{"version", kReportVersion}, {"spec", d.spec()}, {"order", *c.order}, {"classes", rows}}
               .dump(2)
        << '\n';
  else if (c.format == Format::Text)
    out << classes.size() << " classes of order " << *c.order << " on " << d.spec() << '\n';
  return ok ? kExitPass : kExitCounterexample;
}

int do_check(const RunConfig& c, std::ostream& out) {
  const auto d = affine::build(c.specs.front());
  const auto k = kac::parse_kac(d, *c.kac);
  const auto r = thomae::check_theorem(k);
  if (c.format == Format::Json) {
    json j = report_json(d, k, r);
    out << json{{"version", kReportVersion}, {"spec", d.spec()}, {"report", j}}.dump(2) << '\n';
  } else if (c.format == Format::Tsv) {
    out << kReportTsvHeader;
    report_tsv(out, k, r);
  } else {
    report_text(out, d, k, r, c.unicode);
  }
  return r.holds ? kExitPass : kExitCounterexample;
}

int do_ellreg(const RunConfig& c, std::ostream& out) {
  const auto ids = resolve(c);
  json tables = json::array();
  bool header = false;
  for (const auto& id : ids) {
    const auto d = affine::build(id);
    const auto rows = ellreg::table(id);
    if (c.format == Format::Tsv) {
      std::ostringstream buf;
      ellreg::write_tsv(buf, d, rows);
      std::string text = buf.str();
      if (header) text = text.substr(text.find('\n') + 1);
      header = true;
      out << text;
    } else if (c.format == Format::Json) {
      json entries = json::array();
      for (const auto& e : rows) {
        const kac::KacCoordinates k(d, e.kac);
        entries.push_back(json{{"m", e.order},
                               {"kac", kac::format_kac(e.kac)},
                               {"fixed_type", d.classify(kac::zero_set(k)).to_string()},
                               {"provenance", e.provenance.to_string()}});
      }
      tables.push_back(json{{"spec", d.spec()}, {"entries", entries}});
    } else {
      out << d.spec() << '\n';
      for (const auto& e : rows) {
        const kac::KacCoordinates k(d, e.kac);
        out << "  m=" << e.order << "  " << render_kac(d, e.kac, c.unicode) << "  "
            << d.classify(kac::zero_set(k)).to_string() << "  [" << e.provenance.to_string()
            << "]\n";
      }
    }
  }
  if (c.format == Format::Json)
    out << json{{"version", kReportVersion}, {"tables", tables}}.dump(2) << '\n';
  return kExitPass;
}

struct StepRanges {
  int m_first, m_last, r_first, r_last;
};

StepRanges step_ranges(const affine::DiagramId& id) {
  using dynkin::Family;
  if (id.twist == 1 && id.family == Family::E6) return {2, 5, 0, -1};
  if (id.twist == 1 && id.family == Family::E7) return {2, 6, 10, 10};
  if (id.twist == 1 && id.family == Family::E8) return {2, 7, 10, 22};
  throw InvalidInput("step tables exist for E6, E7 and E8 only, not " + affine::to_spec(id));
}

json step_json(const affine::AffineDiagram& d, const thomae::StepRow& r) {
  json achievers = json::array();
  for (const auto& t : r.achievers) achievers.push_back(t.to_string());
  json witness = nullptr;
  if (!r.witnesses.empty())
    witness = kac::format_kac(kac::from_zero_set(d, r.witnesses.front()).values());
  return json{{"key", r.key}, {"minimum", r.minimum}, {"achievers", achievers}, {"witness", witness}};
}

int do_steps(const RunConfig& c, std::ostream& out) {
  std::vector<affine::DiagramId> ids;
  if (c.specs.empty())
    for (const char* s : {"E6", "E7", "E8"}) ids.push_back(affine::parse_spec(s));
  else
    ids = resolve(c);
  json docs = json::array();
  if (c.format == Format::Tsv) out << "spec\tstep\tkey\tminimum\tachievers\twitness\n";
  for (const auto& id : ids) {
    const auto range = step_ranges(id);
    const auto d = affine::build(id);
    const auto s1 = thomae::step1_table(d, range.m_first, range.m_last);
    const auto s2 = thomae::step2_table(d, range.r_first, range.r_last);
    if (c.format == Format::Json) {
      json a = json::array(), b = json::array();
      for (const auto& r : s1) a.push_back(step_json(d, r));
      for (const auto& r : s2) b.push_back(step_json(d, r));
      docs.push_back(json{{"spec", d.spec()}, {"step1", a}, {"step2", b}});
      continue;
    }
    auto emit = [&](int step, const thomae::StepRow& r) {
      std::string types;
      for (const auto& t : r.achievers) types += (types.empty() ? "" : ",") + t.to_string();
      std::string witness = "none";
      if (!r.witnesses.empty())
        witness = kac::format_kac(kac::from_zero_set(d, r.witnesses.front()).values());
      if (c.format == Format::Tsv) {
        out << d.spec() << '\t' << step << '\t' << r.key << '\t' << r.minimum << '\t' << types << '\t'
            << witness << '\n';
      } else {
        out << "  " << (step == 1 ? "m=" : "r=") << r.key << (step == 1 ? "  r(m)=" : "  m(r)=")
            << r.minimum << "  achievers " << types << "  witness "
            << (r.witnesses.empty() ? "none" : render_kac(d, kac::from_zero_set(d, r.witnesses.front()).values(), c.unicode))
            << '\n';
      }
    };
    if (c.format == Format::Text) out << d.spec() << " step 1\n";
    for (const auto& r : s1) emit(1, r);
    if (c.format == Format::Text && !s2.empty()) out << d.spec() << " step 2\n";
    for (const auto& r : s2) emit(2, r);
  }
  if (c.format == Format::Json)
    out << json{{"version", kReportVersion}, {"tables", docs}}.dump(2) << '\n';
  return kExitPass;
}

int do_catalog(const RunConfig& c, std::ostream& out) {
  const auto ids = resolve(c);
  json diagrams = json::array();
  if (c.format == Format::Tsv) out << "spec\th_e\tn_e\tdim_g\tnodes\tlabels\n";
  for (const auto& id : ids) {
    const auto d = affine::build(id);
    std::vector<int> labels(d.labels().begin(), d.labels().end());
    if (c.format == Format::Json) {
      diagrams.push_back(json{{"spec", d.spec()},
                              {"h_e", d.coxeter_number()},
                              {"n_e", d.rank()},
                              {"dim_g", d.dim_g()},
                              {"labels", labels}});
    } else if (c.format == Format::Tsv) {
      out << d.spec() << '\t' << d.coxeter_number() << '\t' << d.rank() << '\t' << d.dim_g() << '\t'
          << d.size() << '\t' << kac::format_kac(labels) << '\n';
    } else {
      out << d.spec() << "  h_e=" << d.coxeter_number() << " n_e=" << d.rank()
          << " dim_g=" << d.dim_g() << "  labels " << render_kac(d, labels, c.unicode) << '\n';
    }
  }
  if (c.format == Format::Json)
    out << json{{"version", kReportVersion}, {"diagrams", diagrams}}.dump(2) << '\n';
  return kExitPass;
}

}  // namespace

unsigned thread_cap() {
  if (const char* env = std::getenv("KACSCOPE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const RunConfig& c) {
  if (c.max_rank < 1) throw InvalidInput("--max-rank must be positive");
  switch (c.command) {
    case Command::Enumerate:
      if (c.specs.size() != 1) throw InvalidInput("enumerate needs exactly one diagram spec");
      if (!c.order) throw InvalidInput("enumerate needs --order");
      if (*c.order < 1) throw InvalidInput("--order must be positive");
      break;
    case Command::Check:
      if (c.specs.size() != 1) throw InvalidInput("check needs exactly one diagram spec");
      if (!c.kac) throw InvalidInput("check needs --kac");
      break;
    default: break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    validate(config);
    for (const auto& s : config.specs) affine::parse_spec(s);
    if (config.out_path) {
      file.open(*config.out_path);
      if (!file) throw InvalidInput("cannot open output file " + *config.out_path);
      sink = &file;
    }
    switch (config.command) {
      case Command::Verify: return do_verify(config, *sink, err);
      case Command::Enumerate: return do_enumerate(config, *sink);
      case Command::Check: return do_check(config, *sink);
      case Command::EllReg: return do_ellreg(config, *sink);
      case Command::Steps: return do_steps(config, *sink);
      case Command::Catalog: return do_catalog(config, *sink);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "counterexample: " << e.what() << '\n';
    return kExitCounterexample;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of the Thomae-function inequality on affine Dynkin diagrams", "kacscope"};
  app.require_subcommand(1);
  RunConfig config;
  config.threads = thread_cap();
  std::string format = "text";

  auto common = [&](CLI::App* sub, bool specs_required) {
    auto* opt = sub->add_option("specs", config.specs, "Diagram specs such as E8, 2A8, 3D4");
    if (specs_required) opt->required();
    sub->add_option("--max-rank", config.max_rank, "Largest rank when no spec is given")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    sub->add_option("--out", config.out_path, "Write the report to a file");
    sub->add_flag("--unicode", config.unicode, "Draw arrows with Unicode symbols");
  };
  const std::map<std::string, Command> commands{
      {"verify", Command::Verify}, {"enumerate", Command::Enumerate}, {"check", Command::Check},
      {"ellreg", Command::EllReg}, {"steps", Command::Steps},         {"catalog", Command::Catalog}};
  std::map<CLI::App*, Command> lookup;
  auto* verify = app.add_subcommand("verify", "Scan every subset, assert f >= 0, compare with ell-reg tables");
  common(verify, false);
  auto* enumerate = app.add_subcommand("enumerate", "List classes of a given order with theorem reports");
  common(enumerate, true);
  enumerate->add_option("--order", config.order, "Order m")->required();
  auto* check = app.add_subcommand("check", "Evaluate the inequality for one set of Kac coordinates");
  common(check, true);
  check->add_option("--kac", config.kac, "Comma-separated coordinates in node order")->required();
  auto* ellreg_cmd = app.add_subcommand("ellreg", "Print ell-reg tables");
  common(ellreg_cmd, false);
  auto* steps = app.add_subcommand("steps", "Print the exceptional r(m) and m(r) tables");
  common(steps, false);
  auto* catalog = app.add_subcommand("catalog", "List supported diagrams");
  common(catalog, false);
  lookup = {{verify, Command::Verify}, {enumerate, Command::Enumerate}, {check, Command::Check},
            {ellreg_cmd, Command::EllReg}, {steps, Command::Steps},       {catalog, Command::Catalog}};

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    for (auto& ch : what)
      if (ch == '\n') ch = ' ';
    err << "error: " << what << '\n';
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) config.command = lookup.at(sub);
  config.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Text;
  return run(config, out, err);
}

}  // namespace kacscope::cli
