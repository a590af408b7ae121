// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <hundq/hamiltonian.hpp>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <string>

namespace hundq {

inline constexpr Eigen::Index kDenseCap = 4096;
inline constexpr double kDegeneracyWindow = 1e-9;

enum class SolveMethod { Dense, Lanczos };

std::string to_string(SolveMethod m);

struct GroundStateResult {
  double energy = 0.0;
  /// Unit norm; sign fixed so the largest-magnitude component is positive.
  Eigen::VectorXd amplitudes;
  int degeneracy_count = 1;
  SolveMethod method = SolveMethod::Dense;
  int iterations = 0;
  /// ||H v - E v||_2
  double residual = 0.0;
};

struct LanczosOptions {
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iter = 500;
};

/// Bound every returned eigenpair satisfies.
inline double residual_bound(double energy) { return 1e-8 * std::max(1.0, std::abs(energy)); }

GroundStateResult solve_dense(const Eigen::SparseMatrix<double>& h, Eigen::Index dense_cap = kDenseCap);
GroundStateResult solve_dense(const SparseHamiltonian& h, Eigen::Index dense_cap = kDenseCap);

/**
 * Lowest eigenpair by Lanczos with full reorthogonalization.
 *
 * Starts from a seeded pseudorandom vector and stops once successive lowest
 * Ritz values differ by less than `tol` and the Ritz residual is within
 * residual_bound(). Throws ConvergenceError after `max_iter` steps.
 */
GroundStateResult solve_lanczos(const Eigen::SparseMatrix<double>& h, const LanczosOptions& opts = {});
GroundStateResult solve_lanczos(const SparseHamiltonian& h, const LanczosOptions& opts = {});

/// Dense up to kDenseCap, Lanczos above.
GroundStateResult solve_auto(const SparseHamiltonian& h, const LanczosOptions& opts = {});

}  // namespace hundq
