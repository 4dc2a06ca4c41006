#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "fvroe/solver_cli.hpp"
#include "fvroe/verification.hpp"

namespace {

void usage() {
  std::fprintf(stderr,
               "usage: fvroe run <config>\n"
               "       fvroe convergence <config> <J1,J2,...>\n"
               "       fvroe check [--seed N]\n");
}

int cmd_run(const std::string& path) {
  const fvroe::SolverConfig cfg = fvroe::load_config(path);
  const fvroe::RunResult r = fvroe::run(cfg);
  std::printf("%llu steps to t = %.6f, conservation defect %.3e\n",
              static_cast<unsigned long long>(r.steps), r.final_state.time,
              r.max_balance_residual);
  for (const std::string& f : r.files) std::printf("wrote %s\n", f.c_str());
  const auto fallbacks = fvroe::entropy_fix_fallback_count();
  if (fallbacks > 0)
    std::printf("note: entropy correction skipped on %llu faces (strong waves)\n",
                static_cast<unsigned long long>(fallbacks));
  return 0;
}

int cmd_convergence(const std::string& path, const std::string& grid_list) {
  const fvroe::SolverConfig cfg = fvroe::load_config(path);
  std::vector<int> grids;
  std::size_t pos = 0;
  while (pos < grid_list.size()) {
    std::size_t next = grid_list.find(',', pos);
    if (next == std::string::npos) next = grid_list.size();
    grids.push_back(std::atoi(grid_list.substr(pos, next - pos).c_str()));
    pos = next + 1;
  }
  if (grids.empty()) throw fvroe::ConfigError("empty grid list");
  const auto rows = fvroe::convergence(cfg, grids);
  std::printf("%8s %12s %14s %10s\n", "J", "dx", "L1 error", "order");
  for (const auto& row : rows) {
    if (row.observed_order != 0.0)
      std::printf("%8d %12.6e %14.8e %10.3f\n", row.cells, row.dx, row.l1_error,
                  row.observed_order);
    else
      std::printf("%8d %12.6e %14.8e %10s\n", row.cells, row.dx, row.l1_error, "-");
  }
  return 0;
}

int cmd_check(std::uint64_t seed) {
  const auto items = fvroe::run_check_suite(seed);
  bool all = true;
  for (const auto& it : items) {
    std::printf("[%s] %-48s max residual %.3e (tol %.1e)\n", it.pass ? "PASS" : "FAIL",
                it.name.c_str(), it.residual, it.tolerance);
    all = all && it.pass;
  }
  std::printf("%s\n", all ? "all properties hold" : "property failures detected");
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage();
    return 1;
  }
  const std::string cmd = argv[1];
  try {
    if (cmd == "run" && argc == 3) return cmd_run(argv[2]);
    if (cmd == "convergence" && argc == 4) return cmd_convergence(argv[2], argv[3]);
    if (cmd == "check") {
      std::uint64_t seed = 42;
      if (argc == 4 && std::strcmp(argv[2], "--seed") == 0)
        seed = std::strtoull(argv[3], nullptr, 10);
      else if (argc != 2) {
        usage();
        return 1;
      }
      return cmd_check(seed);
    }
    usage();
    return 1;
  } catch (const fvroe::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const fvroe::MalformedMesh& e) {
    std::fprintf(stderr, "mesh error: %s\n", e.what());
    return 1;
  } catch (const fvroe::InadmissibleState& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
