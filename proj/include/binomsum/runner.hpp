#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "binomsum/report.hpp"

namespace binomsum {

enum class Command { Compute, Certify, ScanFloor, Bounds, Asymptote, PiSeries, Congruence, VerifyAll, Bench };

Command parse_command(std::string_view name);
std::string_view command_name(Command command);

inline constexpr std::uint64_t kComputeCeiling = 5000;
inline constexpr std::uint64_t kVerifyAllCeiling = 1000;

/// Environment variable naming a default cache directory.
inline constexpr const char* kCacheDirEnv = "BINOMSUM_CACHE_DIR";

struct RunConfig {
  Command command = Command::Compute;
  /// Named integer parameters: n, k, n_min, n_max, m_max, p_min, p_max, stride, a, b.
  std::map<std::string, std::uint64_t> ranges;
  /// compute: s_n | inner_sum | summand | t | super_catalan. congruence: mod8 | fermat_quotient | mod_p_squared.
  std::string kind;
  std::optional<std::string> output_path;
  Format format = Format::Json;
  std::optional<std::string> cache_path;
  unsigned parallelism = 1;
  bool unsafe_large = false;
  /// verify-all: checks to leave out.
  std::vector<std::string> skip;
  /// Test hook, see set_injected_fault().
  std::string inject_fault;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kFalsified = 2;
}  // namespace exit_code

/// Executes one command. The report goes to config.output_path, or `out` when unset;
/// warnings and errors go to `err`. Returns 0 when every check holds, 2 on a
/// falsification (a counterexample record is part of the report), 1 on usage or
/// internal errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The checks verify-all runs, in order.
std::vector<std::string> verify_all_check_names();

}  // namespace binomsum
