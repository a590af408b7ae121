// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file encode.hpp
 * @brief Qubit encoding of a restricted Hamiltonian.
 *
 * The restricted matrix is zero-padded to the next power of two, permuted by
 * an encoding map and expanded in tensor products of {I, X, Y, Z}. In a
 * Pauli word the leftmost letter acts on the most significant bit of the
 * computational index.
 */

#pragma once

#include <hundq/error.hpp>
#include <hundq/hamiltonian.hpp>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <bit>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace hundq {

inline constexpr int kMaxDecomposeQubits = 14;
inline constexpr double kPauliPrune = 1e-12;

template <typename Scalar>
struct ExtendedHamiltonian {
  int n_qubits = 0;
  Eigen::Index original_dim = 0;
  /// 2^n x 2^n; rows and columns >= original_dim are zero.
  Eigen::SparseMatrix<Scalar> matrix;
};

/// Zero-pads to 2^ceil(log2 dim).
template <typename Scalar>
ExtendedHamiltonian<Scalar> minimal_extend(const Eigen::SparseMatrix<Scalar>& h) {
  if (h.rows() != h.cols()) throw DimensionError("Hamiltonian is not square");
  if (h.rows() < 1) throw DomainError("cannot extend an empty Hamiltonian");
  const auto k = static_cast<std::uint64_t>(h.rows());
  const int n = k <= 1 ? 0 : std::bit_width(k - 1);
  ExtendedHamiltonian<Scalar> out;
  out.n_qubits = n;
  out.original_dim = h.rows();
  out.matrix = h;
  out.matrix.conservativeResize(Eigen::Index{1} << n, Eigen::Index{1} << n);
  out.matrix.makeCompressed();
  return out;
}

ExtendedHamiltonian<double> minimal_extend(const SparseHamiltonian& h);

/// Permutation sending extended-space index i to computational index map[i].
class EncodingMap {
 public:
  static EncodingMap identity(int n_qubits);
  /// Throws DomainError unless `target` is a permutation of [0, size).
  static EncodingMap from_permutation(std::vector<Eigen::Index> target);

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(target_.size()); }
  Eigen::Index operator()(Eigen::Index i) const { return target_[static_cast<std::size_t>(i)]; }
  std::span<const Eigen::Index> targets() const noexcept { return target_; }
  bool is_identity() const noexcept;

 private:
  std::vector<Eigen::Index> target_;
};

/// E A E^dagger with E the permutation matrix of `map`.
template <typename Scalar>
ExtendedHamiltonian<Scalar> apply_encoding(const ExtendedHamiltonian<Scalar>& eh,
                                           const EncodingMap& map) {
  if (map.size() != eh.matrix.rows())
    throw DimensionError("encoding map has size " + std::to_string(map.size()) + ", register has " +
                         std::to_string(eh.matrix.rows()));
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(static_cast<std::size_t>(eh.matrix.nonZeros()));
  for (Eigen::Index c = 0; c < eh.matrix.outerSize(); ++c)
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(eh.matrix, c); it; ++it)
      triplets.emplace_back(map(it.row()), map(it.col()), it.value());
  ExtendedHamiltonian<Scalar> out = eh;
  out.matrix.setZero();
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

struct PauliTerm {
  double coefficient = 0.0;
  std::string word;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

namespace detail {

inline void check_decompose_size(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) throw DimensionError("matrix is not square");
  const auto dim = static_cast<std::uint64_t>(rows);
  if (dim == 0 || !std::has_single_bit(dim))
    throw DimensionError("matrix dimension " + std::to_string(rows) + " is not a power of two");
  if (std::bit_width(dim) - 1 > kMaxDecomposeQubits)
    throw CapacityError("Pauli decomposition is limited to " + std::to_string(kMaxDecomposeQubits) +
                        " qubits");
}

std::vector<PauliTerm> collect_terms(const Eigen::MatrixXd& transformed, int n_qubits,
                                     double prune);
std::vector<PauliTerm> collect_terms(const Eigen::MatrixXcd& transformed, int n_qubits,
                                     double prune);

}  // namespace detail

/**
 * Coefficients c_P = tr(P A) / 2^n of a Hermitian matrix.
 *
 * Works in place on a copy of A: for each qubit the 2x2 block pattern
 * (a00, a01, a10, a11) becomes (I, X, -iY, Z) components, O(n 4^n) overall.
 * Words whose coefficient has an imaginary part >= 1e-12 throw DomainError.
 * Terms with |c| <= prune are dropped; output is sorted by word.
 */
template <typename Derived>
std::vector<PauliTerm> pauli_decompose(const Eigen::MatrixBase<Derived>& a,
                                       double prune = kPauliPrune) {
  using Scalar = typename Derived::Scalar;
  detail::check_decompose_size(a.rows(), a.cols());
  const auto dim = a.rows();
  const int n = std::bit_width(static_cast<std::uint64_t>(dim)) - 1;

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = a;
  for (int q = 0; q < n; ++q) {
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (c & bit) continue;
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (r & bit) continue;
        const Scalar a00 = m(r, c), a01 = m(r, c | bit), a10 = m(r | bit, c), a11 = m(r | bit, c | bit);
        m(r, c) = (a00 + a11) / Scalar(2);              // I
        m(r, c | bit) = (a01 + a10) / Scalar(2);        // X
        m(r | bit, c) = (a01 - a10) / Scalar(2);        // Y, up to a factor i
        m(r | bit, c | bit) = (a00 - a11) / Scalar(2);  // Z
      }
    }
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    return detail::collect_terms(Eigen::MatrixXd(m), n, prune);
  } else {
    return detail::collect_terms(Eigen::MatrixXcd(m.template cast<std::complex<double>>()), n, prune);
  }
}

template <typename Scalar>
std::vector<PauliTerm> pauli_decompose(const ExtendedHamiltonian<Scalar>& eh,
                                       double prune = kPauliPrune) {
  if (eh.n_qubits > kMaxDecomposeQubits)
    throw CapacityError("Pauli decomposition is limited to " + std::to_string(kMaxDecomposeQubits) +
                        " qubits");
  return pauli_decompose(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>(eh.matrix), prune);
}

/// Sum of c_P P as a dense matrix.
Eigen::MatrixXcd pauli_to_matrix(std::span<const PauliTerm> terms, int n_qubits);

/// y = (sum c_P P) x without forming the matrix.
Eigen::VectorXcd pauli_apply(std::span<const PauliTerm> terms, const Eigen::VectorXcd& x);

enum class PauliFormat { Text, Json };

/// Text: "coefficient<TAB>word\n" per term. Json: {"n_qubits", "terms"}.
std::string export_pauli(std::span<const PauliTerm> terms, PauliFormat format = PauliFormat::Text);

/// Reads either export format back. Throws ParseError.
std::vector<PauliTerm> parse_pauli(std::string_view text);

}  // namespace hundq
