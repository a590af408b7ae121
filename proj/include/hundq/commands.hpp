// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <hundq/encode.hpp>
#include <hundq/fcidump.hpp>
#include <hundq/fock.hpp>
#include <hundq/hamiltonian.hpp>
#include <hundq/scan.hpp>
#include <hundq/spectra.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace hundq {

/// Exit codes of the hundq command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
  kExitConvergence = 4,
};

/// Thrown for argument values the parser accepts but the command rejects.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SolveOptions {
  Selector::Kind selector = Selector::Kind::Hund;
  /// Dense up to kDenseCap, Lanczos above, when unset.
  std::optional<SolveMethod> method;
  LanczosOptions lanczos;
};

Selector::Kind parse_selector(const std::string& name);
SolveMethod parse_method(const std::string& name);

struct Solution {
  SparseHamiltonian hamiltonian;
  GroundStateResult ground;
};

/// Basis for the table's electron count under `kind`.
SubspaceBasis select_basis(const IntegralTable& table, Selector::Kind kind);

Solution solve_table(const IntegralTable& table, const SolveOptions& opts);

std::string cmd_count(Count n_orbitals, Count n_electrons, bool json);
std::string cmd_compare_grid(int max_orbitals);
std::string cmd_solve(const std::filesystem::path& fcidump, const SolveOptions& opts, bool json);

/// Writes the Pauli export to `output` (stdout text returned when empty)
/// and returns the summary line.
std::string cmd_pauli(const std::filesystem::path& fcidump, Selector::Kind selector,
                      const std::filesystem::path& output, bool json);

/// CSV (or JSON) of the scan followed by the summary; the CSV goes to
/// `output` instead when it is non-empty.
std::string cmd_scan(const std::filesystem::path& manifest, const SolveOptions& opts, int jobs,
                     const std::filesystem::path& output, bool json);

}  // namespace hundq
