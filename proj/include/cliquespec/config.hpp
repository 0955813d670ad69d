#pragma once

#include <stdexcept>
#include <string>

namespace cliquespec {

// Run-wide knobs shared by the CLI subcommands. Every field maps to a flag
// and a CLIQUESPEC_* environment variable.
struct RunConfig {
  double tolerance = 1e-12;   // eigensolver residual
  int exhaustive_cap = 16;    // max n for subset search
  int enum_cap = 14;          // max n for class enumeration
  std::string output_dir = "results";
  std::string format = "json";  // json | csv
  unsigned long long seed = 12345;  // randomized suites
  int jobs = 0;               // 0 = hardware concurrency

  void validate() const {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be > 0");
    if (exhaustive_cap < 3 || enum_cap < 3)
      throw std::invalid_argument("caps must be >= 3");
    if (format != "json" && format != "csv")
      throw std::invalid_argument("format must be json or csv");
  }
};

}  // namespace cliquespec
