#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rgp {

enum ExitCode : int { kExitOk = 0, kExitExpectation = 1, kExitUsage = 2, kExitCap = 3 };

/// Everything a subcommand reads. Caps fall back to RGPLANAR_* environment
/// variables, then to built-in defaults.
struct CommandConfig {
  std::string subcommand;
  std::string group_spec;
  int k = 1;
  std::vector<std::string> generators;
  std::string solid;       // catalog row picked by solid name
  std::string ring;        // "cyclic" or "dihedral"
  int ring_n = 0;
  std::string named_graph; // K4, K5, K33, petersen
  int max_size = 0;        // 0: derived bound
  int subject_cap = 100;
  std::int64_t node_budget = 200'000'000;
  std::int64_t minor_budget = 5'000'000;
  std::int64_t rotation_budget = 10'000'000;
  bool prefix_pruning = true;
  int family_cap = 8;
  std::vector<int> tamper_rows;  // verify-table: add one to these rows' edge counts
  bool strict = false;           // verify-table: every row must be planar
  int size_cap = 16;             // conjecture
  std::string format;            // dot | json | graphml | svg | faces
  std::string output_path;
  std::string embedding_path;
  std::uint64_t seed = 1;
  bool json = false;
};

/// Parses argv and runs one subcommand. Never calls exit().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run_command(const CommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rgp
