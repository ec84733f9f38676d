#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace blowup {
namespace cli {

struct FindOptions {
  std::string pattern = "k3";  // "k3", "kclique:<h>", or a pattern edge-list path
  std::optional<double> gamma;
  uint64_t seed = 0;
  std::string strategy = "pruning";  // pruning | regularity
  std::string mode = "heuristic";    // exact | heuristic
  std::string trace_path;
};

// Exit codes shared by all subcommands:
//   0 verified output, 1 parse failure, 2 not enough pattern copies,
//   3 degenerate / failed run without a certificate.
int cmd_gen(const std::string& kind, int n, double param, const std::vector<int>& part_sizes,
            uint64_t seed, const std::string& out_path, std::ostream& err);

int cmd_find(const std::string& in_path, const FindOptions& opt, std::ostream& out,
             std::ostream& err);

int cmd_verify(const std::string& in_path, const std::string& report_path, std::ostream& err);

struct SweepCell {
  int n = 0;
  double p = 0.5;
};

inline constexpr const char* kSweepHeader =
    "n,seed,gamma_labeled,pipeline,order_t,s_steps,kst_t,steps_completed,advisory_failures";

int cmd_sweep(const std::vector<SweepCell>& grid, const std::vector<uint64_t>& seeds,
              const std::string& out_csv, std::ostream& err);

int cmd_oracle(const std::string& in_path, const std::string& pattern, std::ostream& out,
               std::ostream& err);

}  // namespace cli
}  // namespace blowup
