// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <hundq/fcidump.hpp>
#include <hundq/fock.hpp>

#include <Eigen/SparseCore>

#include <memory>
#include <utility>
#include <vector>

namespace hundq {

inline constexpr double kAmplitudePrune = 1e-14;

/// H restricted to a SubspaceBasis, real symmetric, column-major sparse.
class SparseHamiltonian {
 public:
  SparseHamiltonian(std::shared_ptr<const SubspaceBasis> basis, Eigen::SparseMatrix<double> matrix);

  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const Eigen::SparseMatrix<double>& matrix() const noexcept { return matrix_; }
  const SubspaceBasis& basis() const noexcept { return *basis_; }
  std::shared_ptr<const SubspaceBasis> basis_ptr() const noexcept { return basis_; }

  /// Coordinate form sorted by (row, col).
  std::vector<Eigen::Triplet<double>> entries() const;

  /// Same basis, matrix shifted by c times the identity.
  SparseHamiltonian shifted(double c) const;

 private:
  std::shared_ptr<const SubspaceBasis> basis_;
  Eigen::SparseMatrix<double> matrix_;
};

/// H|d> as (determinant, amplitude) pairs sorted by determinant. The
/// diagonal entry is always present and carries the core energy.
std::vector<std::pair<Determinant, double>> apply_hamiltonian(const IntegralTable& table,
                                                              const Determinant& d);

/// <b_i|H|b_j> over the basis; contributions leaving the basis are dropped.
SparseHamiltonian restrict_hamiltonian(const IntegralTable& table,
                                       std::shared_ptr<const SubspaceBasis> basis);
SparseHamiltonian restrict_hamiltonian(const IntegralTable& table, SubspaceBasis basis);

/// Partition by (n_up, n_down), ordered by n_down.
std::vector<SubspaceBasis> sector_split(const SubspaceBasis& basis);

}  // namespace hundq
