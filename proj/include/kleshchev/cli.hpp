#pragma once

// Command-line front end.

#include "kleshchev/combinatorics.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kleshchev {

enum class Subcommand { crystal, canonical, decomp, branch, verify, paths };
enum class OutputFormat { json, dot, csv, table };

std::string to_string(Subcommand s);
std::string to_string(OutputFormat f);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_invocation for --help; what() is the help text.
class HelpRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  Subcommand subcommand = Subcommand::verify;
  int e = 2;
  std::vector<int> charge{0};  // reduced mod e
  int n_max = 3;
  std::optional<OutputFormat> format;  // subcommand default when unset
  ReadingDirection convention = ReadingDirection::bottom_up;
  std::optional<std::filesystem::path> cache_dir;
  std::size_t vertex_cap = 1'000'000;
  bool at_one = false;  // decomp: evaluate entries at v = 1
  int size_guard = 12;

  Multicharge multicharge() const { return Multicharge(e, charge, convention); }
  OutputFormat effective_format() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Arguments without the program name. Throws UsageError naming the
/// offending flag.
Invocation parse_invocation(const std::vector<std::string>& args);

/// Single-line provenance header: engine version, charge, convention, size.
std::string provenance(const Invocation& inv);

/// Runs the subcommand, writing the artifact to out and diagnostics to err.
/// Returns 0 when every check passes, 1 on violations and 2 on usage or
/// resource errors.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// parse_invocation + run with exit-code mapping for usage errors.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kleshchev
