// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hundq {

struct ScanPoint {
  std::vector<double> geometry;
  std::filesystem::path path;
};

/// Two-tier protocol: a coarse pre-scan, then finer steps near its minimum.
struct Refinement {
  double lo = 0.5;
  double hi = 10.0;
  double coarse_step = 0.1;
  struct Tier {
    double within;
    double step;
  };
  /// Innermost first.
  std::vector<Tier> tiers{{0.15, 0.001}, {0.5, 0.05}};
  double default_step = 0.1;
};

struct ScanSpec {
  std::string name;
  std::vector<std::string> parameters;
  std::vector<ScanPoint> points;
  std::optional<Refinement> refinement;
};

/**
 * Reads a scan manifest:
 *
 *   {"name": ..., "parameters": ["bond_length"],
 *    "refinement": {"range": [lo, hi], "coarse_step": s,
 *                   "tiers": [{"within": w, "step": s}, ...], "default_step": s},
 *    "points": [{"geometry": [r], "path": "file.fcidump"}, ...]}
 *
 * "refinement" is optional. Relative paths resolve against `base_dir`.
 */
ScanSpec parse_scan_spec(std::string_view json, const std::filesystem::path& base_dir);
ScanSpec load_scan_spec(const std::filesystem::path& manifest);

struct ScanEvaluation {
  std::vector<double> geometry;
  double energy = 0.0;
};

struct ScanResult {
  /// Evaluated points in grid order.
  std::vector<ScanEvaluation> points;
  std::vector<double> argmin;
  double energy_min = 0.0;
  /// 1D scans only: the largest scanned point and E(r_max) - E(r_eq).
  std::optional<std::vector<double>> asymptote;
  std::optional<double> energy_asymptote;
  std::optional<double> dissociation_energy;
  /// Coarse-pass minimum when the refinement protocol ran.
  std::optional<double> coarse_argmin;
};

using PointEnergy = std::function<double(const ScanPoint&)>;

/// Evaluates the grid (or the refinement protocol) with up to `jobs` threads.
/// Throws InputError on incomplete grids or missing refinement points.
ScanResult run_scan(const ScanSpec& spec, const PointEnergy& energy, int jobs = 1);

}  // namespace hundq
