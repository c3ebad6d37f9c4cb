#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kacscope/affine.hpp"

namespace kacscope::cli {

enum class Command { Verify, Enumerate, Check, EllReg, Steps, Catalog };
enum class Format { Text, Json, Tsv };

struct RunConfig {
  Command command = Command::Verify;
  std::vector<std::string> specs;
  int max_rank = 12;
  std::optional<int> order;
  std::optional<std::string> kac;
  Format format = Format::Text;
  std::optional<std::string> out_path;
  bool unicode = false;
  unsigned threads = 1;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// Throws InvalidInput when a command-specific field is missing.
void validate(const RunConfig& config);

// Runs one command.  Reports go to `out` (or the --out file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker cap from KACSCOPE_THREADS, else the hardware concurrency.
unsigned thread_cap();

// One-line drawing of Kac coordinates: spine left to right, fork tips in
// parentheses after their branch node.
std::string render_kac(const affine::AffineDiagram& d, std::span<const int> s, bool unicode = false);

}  // namespace kacscope::cli
