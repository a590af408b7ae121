// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Occupation-number determinants, subspace enumeration and the
 *        fermionic operator kernels.
 *
 * Spin orbitals are interleaved: mode 2p is spatial orbital p with spin up,
 * mode 2p+1 is spatial orbital p with spin down. A determinant is a single
 * 64-bit word, so at most 63 modes are supported.
 */

#pragma once

#include <hundq/error.hpp>

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hundq {

using Bits = std::uint64_t;
using Count = std::uint64_t;

inline constexpr int kMaxModes = 63;

/// Mask with bits [0, n) set.
constexpr Bits low_mask(int n) noexcept { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

/// Even positions (spin-up modes) among the low `n_modes` bits.
constexpr Bits up_mask(int n_modes) noexcept { return 0x5555555555555555ULL & low_mask(n_modes); }

class Determinant {
 public:
  constexpr Determinant() = default;

  /// Throws CapacityError for n_modes > 63, DomainError for stray high bits.
  Determinant(Bits bits, int n_modes);

  constexpr Bits bits() const noexcept { return bits_; }
  constexpr int n_modes() const noexcept { return n_modes_; }
  constexpr int n_orbitals() const noexcept { return n_modes_ / 2; }
  constexpr bool occupied(int mode) const noexcept { return (bits_ >> mode) & 1U; }
  constexpr int n_electrons() const noexcept { return std::popcount(bits_); }
  constexpr int n_up() const noexcept { return std::popcount(bits_ & up_mask(n_modes_)); }
  constexpr int n_down() const noexcept { return n_electrons() - n_up(); }

  /// Occupations as text, highest mode first.
  std::string to_string() const;

  friend constexpr auto operator<=>(const Determinant&, const Determinant&) = default;

 private:
  Bits bits_ = 0;
  int n_modes_ = 0;
};

/// Every orbital holding a spin-down electron also holds a spin-up one.
constexpr bool hund_satisfied(Bits bits) noexcept {
  const Bits down = (bits >> 1) & 0x5555555555555555ULL;
  return (down & ~bits) == 0;
}

inline bool hund_satisfied(const Determinant& d) noexcept { return hund_satisfied(d.bits()); }

struct Selector {
  enum class Kind { Hund, ParticleConserving, Full, Explicit };

  Kind kind = Kind::Full;
  int n_electrons = 0;

  static constexpr Selector hund(int n) noexcept { return {Kind::Hund, n}; }
  static constexpr Selector particle_conserving(int n) noexcept {
    return {Kind::ParticleConserving, n};
  }
  static constexpr Selector full() noexcept { return {Kind::Full, 0}; }

  friend constexpr bool operator==(const Selector&, const Selector&) = default;
};

std::string to_string(Selector::Kind kind);

/**
 * Ordered set of determinants spanning a subspace of the Fock space.
 *
 * Determinants are strictly increasing as unsigned integers; the position of
 * a determinant in that order is its index in every matrix built on the basis.
 */
class SubspaceBasis {
 public:
  SubspaceBasis() = default;

  /// Arbitrary determinant set; sorted and deduplicated on construction.
  static SubspaceBasis from_determinants(std::vector<Bits> dets, int n_modes);

  int n_modes() const noexcept { return n_modes_; }
  int n_orbitals() const noexcept { return n_modes_ / 2; }
  const Selector& selector() const noexcept { return selector_; }
  std::size_t size() const noexcept { return dets_.size(); }
  bool empty() const noexcept { return dets_.empty(); }

  std::span<const Bits> determinants() const noexcept { return dets_; }
  Determinant operator[](std::size_t i) const { return Determinant(dets_[i], n_modes_); }

  /// Index of `bits`, or nullopt when it is not a member.
  std::optional<std::size_t> find(Bits bits) const noexcept;

 private:
  friend SubspaceBasis enumerate_subspace(int n_modes, Selector selector);

  std::vector<Bits> dets_;
  int n_modes_ = 0;
  Selector selector_ = Selector::full();
};

/// Exhaustive sorted basis. Hund requires even n_modes.
SubspaceBasis enumerate_subspace(int n_modes, Selector selector);

/// Exact binomial coefficient; OverflowError when it does not fit 64 bits.
Count binomial(Count n, Count k);

/// Number of Hund determinants for M orbitals and N electrons.
Count hund_count(Count n_orbitals, Count n_electrons);

/// C(2M, N).
Count pc_count(Count n_orbitals, Count n_electrons);

/// Reduced fraction pc_count / hund_count.
struct Ratio {
  Count numerator = 0;
  Count denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  friend constexpr bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio basis_ratio(Count n_orbitals, Count n_electrons);

/// ceil(log2(basis_size)); 0 for a single state.
constexpr int qubit_requirement(Count basis_size) noexcept {
  return basis_size <= 1 ? 0 : std::bit_width(basis_size - 1);
}

struct FermionOp {
  enum class Type { Creation, Annihilation };

  Type type = Type::Creation;
  int mode = 0;

  static constexpr FermionOp create(int mode) noexcept { return {Type::Creation, mode}; }
  static constexpr FermionOp annihilate(int mode) noexcept { return {Type::Annihilation, mode}; }

  friend constexpr bool operator==(const FermionOp&, const FermionOp&) = default;
};

/// Result of a nonvanishing operator application: target and sign.
struct SignedBits {
  Bits bits = 0;
  int phase = 1;

  friend constexpr bool operator==(const SignedBits&, const SignedBits&) = default;
};

/// Applies one operator to a determinant word. The sign counts occupied
/// modes strictly below the acted mode.
constexpr std::optional<SignedBits> apply_op(FermionOp op, Bits bits) noexcept {
  const Bits flag = Bits{1} << op.mode;
  const bool occupied = bits & flag;
  if (occupied == (op.type == FermionOp::Type::Creation)) return std::nullopt;
  const int parity = std::popcount(bits & (flag - 1)) & 1;
  return SignedBits{bits ^ flag, parity ? -1 : 1};
}

/// Applies `ops` right to left; nullopt as soon as one step vanishes.
constexpr std::optional<SignedBits> apply_fermionic_string(std::span<const FermionOp> ops,
                                                           Bits bits) noexcept {
  SignedBits acc{bits, 1};
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const auto step = apply_op(*it, acc.bits);
    if (!step) return std::nullopt;
    acc.bits = step->bits;
    acc.phase *= step->phase;
  }
  return acc;
}

std::optional<std::pair<Determinant, int>> apply_fermionic_string(std::span<const FermionOp> ops,
                                                                  const Determinant& d);

/// One row of the vectorized operator kernel.
struct OperatorImage {
  std::size_t source = 0;
  Bits target = 0;
  int phase = 1;

  friend constexpr bool operator==(const OperatorImage&, const OperatorImage&) = default;
};

/// Applies `op` to every basis determinant; vanishing rows are skipped.
std::vector<OperatorImage> apply_fermionic_op(FermionOp op, const SubspaceBasis& basis);

}  // namespace hundq
