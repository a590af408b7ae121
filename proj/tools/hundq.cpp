// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <unistd.h>

int main(int argc, char** argv) {
  using namespace hundq;

  CLI::App app{"Ground states and qubit encodings of Hund-restricted molecular Hamiltonians"};
  app.require_subcommand(1);

  std::string selector = "hund";
  std::string method;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iter = 500;
  bool json = false;
  int jobs = 1;
  std::string output;

  auto add_solver_flags = [&](CLI::App* cmd) {
    cmd->add_option("--selector", selector, "basis selector: hund, pc or full")->capture_default_str();
    cmd->add_option("--method", method, "eigensolver: dense or lanczos (default: by size)");
    cmd->add_option("--seed", seed, "Lanczos start-vector seed")->capture_default_str();
    cmd->add_option("--tol", tol, "Lanczos energy tolerance (Hartree)")->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "Lanczos iteration limit")->capture_default_str();
  };

  Count m = 0, n = 0;
  auto* count = app.add_subcommand("count", "basis sizes and qubit requirements for M orbitals, N electrons");
  count->add_option("M", m, "spatial orbitals")->required();
  count->add_option("N", n, "electrons")->required();
  count->add_flag("--json", json, "machine-readable output");

  int m_max = 0;
  auto* grid = app.add_subcommand("compare-grid", "CSV of qubit savings over 1 <= M <= M_max, 0 <= N <= 2M");
  grid->add_option("M_max", m_max, "largest orbital count")->required();
  grid->add_option("--output", output, "write the CSV here instead of stdout");

  std::string path;
  auto* solve = app.add_subcommand("solve", "ground-state energy of an FCIDUMP Hamiltonian");
  solve->add_option("fcidump", path, "FCIDUMP file, '-' for stdin")->required();
  add_solver_flags(solve);
  solve->add_flag("--json", json, "machine-readable output with amplitudes");

  auto* pauli = app.add_subcommand("pauli", "export the restricted Hamiltonian as Pauli terms");
  pauli->add_option("fcidump", path, "FCIDUMP file, '-' for stdin")->required();
  pauli->add_option("--selector", selector, "basis selector: hund, pc or full")->capture_default_str();
  pauli->add_option("--output", output, "write the terms here (default: stdout)");
  pauli->add_flag("--json", json, "structured export instead of tab-separated text");

  auto* scan = app.add_subcommand("scan", "potential energy surface from a scan manifest");
  scan->add_option("manifest", path, "scan manifest (JSON)")->required();
  add_solver_flags(scan);
  scan->add_option("--jobs", jobs, "points solved concurrently")->capture_default_str();
  scan->add_option("--output", output, "write the per-point CSV here");
  scan->add_flag("--json", json, "JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::filesystem::path stdin_copy;
  try {
    if (path == "-") {
      stdin_copy = std::filesystem::temp_directory_path() / ("hundq-stdin-" + std::to_string(::getpid()) + ".fcidump");
      std::ofstream tmp(stdin_copy, std::ios::binary);
      tmp << std::cin.rdbuf();
      path = stdin_copy.string();
    }
    SolveOptions opts;
    opts.selector = parse_selector(selector);
    if (!method.empty()) opts.method = parse_method(method);
    opts.lanczos = {seed, tol, max_iter};

    std::string out;
    if (*count) {
      out = cmd_count(m, n, json);
    } else if (*grid) {
      out = cmd_compare_grid(m_max);
      if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw InputError("cannot write " + output);
        f << out;
        out.clear();
      }
    } else if (*solve) {
      out = cmd_solve(path, opts, json);
    } else if (*pauli) {
      out = cmd_pauli(path, opts.selector, output, json);
    } else if (*scan) {
      if (jobs < 1) throw UsageError("--jobs must be at least 1");
      out = cmd_scan(path, opts, jobs, output, json);
    }
    if (!stdin_copy.empty()) std::filesystem::remove(stdin_copy);
    std::cout << out;
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const std::exception& e) {
    if (!stdin_copy.empty()) std::filesystem::remove(stdin_copy);
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
