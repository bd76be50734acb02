// Command-line front end for the binomsum verifier.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "binomsum/runner.hpp"

namespace {

struct Subcommand {
  const char* name;
  const char* help;
  std::vector<std::string> params;
  const char* kind_help = nullptr;
};

std::string flag_for(const std::string& param) {
  std::string flag = "--";
  for (char c : param) flag += c == '_' ? '-' : c;
  return flag;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation and verification of the binomial sums s_n"};
  app.require_subcommand(1);

  const std::vector<Subcommand> subcommands = {
      {"compute", "Exact s_n, inner sums, summands A(n,k), quotients t(n,k), super Catalan numbers",
       {"n", "n_min", "n_max", "k", "a", "b"}, "s_n | inner_sum | summand | t | super_catalan"},
      {"certify", "Divisibility certificates for (2n-1) C(3n,n) | A(n,k)", {"n", "k", "n_min", "n_max"}},
      {"scan-floor", "Scan the floor-function inequality and classify its violations", {"m_max", "n_max"}},
      {"bounds", "Check 2C(6n,3n)/(2n-1) <= s_n <= (n+1)C(6n,3n)/(2n-1)", {"n", "n_min", "n_max"}},
      {"asymptote", "Sample log s_n, n-th roots and the bounds envelope", {"n", "n_max", "stride"}},
      {"pi-series", "Exact partial sum of the 1/pi series with a certified tail bound (--n is N)", {"n"}},
      {"congruence", "Check the cited congruences", {"n_min", "n_max", "p_min", "p_max"},
       "mod8 | fermat_quotient | mod_p_squared"},
      {"verify-all", "Run every check at desk scale", {"n_max"}},
      {"bench", "Factored engine vs naive factorial path for s_n", {"n", "n_min", "n_max", "stride"}},
  };

  binomsum::RunConfig config;
  std::map<std::string, std::uint64_t> values;
  std::string format = "json";
  std::string output;
  std::string cache;

  for (const auto& sub : subcommands) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    for (const auto& param : sub.params) {
      cmd->add_option(flag_for(param), values[std::string(sub.name) + ":" + param], param);
    }
    if (sub.kind_help) {
      cmd->add_option(std::string(sub.name) == "congruence" ? "--claim" : "--kind", config.kind, sub.kind_help);
    }
    cmd->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("-o,--out", output, "Write the report here instead of stdout");
    cmd->add_option("--cache", cache, std::string("Result cache file (default: $") + binomsum::kCacheDirEnv +
                                          "/binomsum-cache.json when set)");
    cmd->add_option("-j,--jobs", config.parallelism, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--unsafe-large", config.unsafe_large, "Allow ranges beyond the desk-scale ceilings");
    cmd->add_option("--inject-fault", config.inject_fault, "Test hook: corrupt the named check")
        ->group("");
    if (std::string(sub.name) == "verify-all") {
      cmd->add_option("--skip", config.skip, "Check to leave out (repeatable)");
    }
    cmd->callback([&, cmd, sub] {
      config.command = binomsum::parse_command(sub.name);
      for (const auto& param : sub.params) {
        if (cmd->count(flag_for(param)) > 0) {
          config.ranges[param] = values[std::string(sub.name) + ":" + param];
        }
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? binomsum::exit_code::kOk : binomsum::exit_code::kError;
  }

  config.format = binomsum::parse_format(format);
  if (!output.empty()) config.output_path = output;
  if (!cache.empty()) config.cache_path = cache;
  return binomsum::run(config, std::cout, std::cerr);
}
