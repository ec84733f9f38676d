#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blowup/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Find and certify large pattern blowups in dense graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a benchmark graph");
  std::string gen_kind = "gnp", gen_out;
  int gen_n = 100;
  double gen_param = 0.5;
  std::vector<int> gen_parts;
  uint64_t seed = 0;
  gen->add_option("kind", gen_kind, "gnp | multipartite | hard")->required();
  gen->add_option("out", gen_out, "output edge-list path")->required();
  gen->add_option("-n,--n", gen_n, "vertex count");
  gen->add_option("-p,--param", gen_param, "edge probability (gnp, multipartite) or gamma (hard)");
  gen->add_option("--parts", gen_parts, "part sizes (multipartite)");
  gen->add_option("--seed", seed, "random seed");

  // find
  auto* find = app.add_subcommand("find", "Find a blowup and print a JSON report");
  std::string find_in;
  blowup::cli::FindOptions opt;
  double gamma_flag = -1;
  find->add_option("input", find_in, "input edge-list path")->required();
  find->add_option("--pattern", opt.pattern, "k3 | kclique:<h> | pattern edge-list path");
  find->add_option("--gamma", gamma_flag, "pattern density (default: measured)");
  find->add_option("--seed", opt.seed, "random seed");
  find->add_option("--strategy", opt.strategy, "pruning | regularity")
      ->check(CLI::IsMember({"pruning", "regularity"}));
  find->add_option("--mode", opt.mode, "exact | heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  find->add_option("--trace", opt.trace_path, "write the full step trace to this path");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a report's certificate against a graph");
  std::string ver_in, ver_report;
  verify->add_option("input", ver_in, "input edge-list path")->required();
  verify->add_option("report", ver_report, "report JSON path")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a G(n,p) grid and write a CSV");
  std::vector<int> sweep_ns;
  double sweep_p = 0.5;
  std::vector<uint64_t> sweep_seeds;
  std::string sweep_out;
  sweep->add_option("out", sweep_out, "output CSV path")->required();
  sweep->add_option("--n", sweep_ns, "vertex counts")->required();
  sweep->add_option("-p,--p", sweep_p, "edge probability");
  sweep->add_option("--seeds", sweep_seeds, "seed list")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact small-scale maximum blowup");
  std::string or_in, or_pattern = "k3";
  oracle->add_option("input", or_in, "input edge-list path")->required();
  oracle->add_option("--pattern", or_pattern, "k3 | kclique:<h> | pattern edge-list path");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed())
    return blowup::cli::cmd_gen(gen_kind, gen_n, gen_param, gen_parts, seed, gen_out, std::cerr);
  if (find->parsed()) {
    if (gamma_flag >= 0) opt.gamma = gamma_flag;
    return blowup::cli::cmd_find(find_in, opt, std::cout, std::cerr);
  }
  if (verify->parsed()) return blowup::cli::cmd_verify(ver_in, ver_report, std::cerr);
  if (sweep->parsed()) {
    std::vector<blowup::cli::SweepCell> grid;
    for (int n : sweep_ns) grid.push_back({n, sweep_p});
    return blowup::cli::cmd_sweep(grid, sweep_seeds, sweep_out, std::cerr);
  }
  if (oracle->parsed()) return blowup::cli::cmd_oracle(or_in, or_pattern, std::cout, std::cerr);
  return 0;
}
