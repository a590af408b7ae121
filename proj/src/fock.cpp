// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/fock.hpp>

#include <algorithm>
#include <numeric>

namespace hundq {

namespace {

void check_modes(int n_modes) {
  if (n_modes < 0 || n_modes > kMaxModes)
    throw CapacityError("mode count " + std::to_string(n_modes) + " exceeds the limit of " +
                        std::to_string(kMaxModes) + " spin orbitals");
}

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("basis count overflows 64 bits");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("basis count overflows 64 bits");
  return r;
}

// Bases larger than this are not materialized.
constexpr Count kMaxEnumerated = Count{1} << 28;

// Orbital-by-orbital walk: each orbital is empty, up, or up+down.
void walk_hund(int orbital, int n_orbitals, int remaining, Bits bits, std::vector<Bits>& out) {
  if (remaining == 0) {
    out.push_back(bits);
    return;
  }
  if (orbital == n_orbitals || remaining > 2 * (n_orbitals - orbital)) return;
  const Bits up = Bits{1} << (2 * orbital);
  const Bits down = up << 1;
  walk_hund(orbital + 1, n_orbitals, remaining, bits, out);
  walk_hund(orbital + 1, n_orbitals, remaining - 1, bits | up, out);
  if (remaining >= 2) walk_hund(orbital + 1, n_orbitals, remaining - 2, bits | up | down, out);
}

// Next word with the same popcount (Gosper).
constexpr Bits next_combination(Bits x) noexcept {
  const Bits c = x & (~x + 1);
  const Bits r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

Determinant::Determinant(Bits bits, int n_modes) : bits_(bits), n_modes_(n_modes) {
  check_modes(n_modes);
  if (bits & ~low_mask(n_modes))
    throw DomainError("determinant has occupied modes beyond n_modes=" + std::to_string(n_modes));
}

std::string Determinant::to_string() const {
  std::string s(static_cast<std::size_t>(n_modes_), '0');
  for (int i = 0; i < n_modes_; ++i)
    if (occupied(i)) s[static_cast<std::size_t>(n_modes_ - 1 - i)] = '1';
  return s;
}

std::string to_string(Selector::Kind kind) {
  switch (kind) {
    case Selector::Kind::Hund: return "hund";
    case Selector::Kind::ParticleConserving: return "pc";
    case Selector::Kind::Full: return "full";
    case Selector::Kind::Explicit: return "explicit";
  }
  return "unknown";
}

SubspaceBasis SubspaceBasis::from_determinants(std::vector<Bits> dets, int n_modes) {
  check_modes(n_modes);
  for (Bits d : dets)
    if (d & ~low_mask(n_modes))
      throw DomainError("determinant has occupied modes beyond n_modes=" +
                        std::to_string(n_modes));
  std::sort(dets.begin(), dets.end());
  dets.erase(std::unique(dets.begin(), dets.end()), dets.end());
  SubspaceBasis b;
  b.dets_ = std::move(dets);
  b.n_modes_ = n_modes;
  b.selector_ = {Selector::Kind::Explicit, 0};
  return b;
}

std::optional<std::size_t> SubspaceBasis::find(Bits bits) const noexcept {
  const auto it = std::lower_bound(dets_.begin(), dets_.end(), bits);
  if (it == dets_.end() || *it != bits) return std::nullopt;
  return static_cast<std::size_t>(it - dets_.begin());
}

SubspaceBasis enumerate_subspace(int n_modes, Selector selector) {
  check_modes(n_modes);
  const int n = selector.n_electrons;
  if (selector.kind != Selector::Kind::Full && (n < 0 || n > n_modes))
    throw DomainError("electron count " + std::to_string(n) + " outside [0, " +
                      std::to_string(n_modes) + "]");

  SubspaceBasis b;
  b.n_modes_ = n_modes;
  b.selector_ = selector;
  switch (selector.kind) {
    case Selector::Kind::Hund: {
      if (n_modes % 2) throw DomainError("Hund selector needs an even number of modes");
      const auto count = hund_count(static_cast<Count>(n_modes / 2), static_cast<Count>(n));
      if (count > kMaxEnumerated) throw CapacityError("Hund basis too large to enumerate");
      b.dets_.reserve(count);
      walk_hund(0, n_modes / 2, n, 0, b.dets_);
      std::sort(b.dets_.begin(), b.dets_.end());
      break;
    }
    case Selector::Kind::ParticleConserving: {
      const auto count = binomial(static_cast<Count>(n_modes), static_cast<Count>(n));
      if (count > kMaxEnumerated) throw CapacityError("particle-conserving basis too large");
      b.dets_.reserve(count);
      if (n == 0) {
        b.dets_.push_back(0);
        break;
      }
      Bits x = low_mask(n);
      for (Count i = 0; i < count; ++i, x = next_combination(x)) b.dets_.push_back(x);
      break;
    }
    case Selector::Kind::Full: {
      if (n_modes >= 29) throw CapacityError("full Fock space too large to enumerate");
      b.dets_.resize(Count{1} << n_modes);
      std::iota(b.dets_.begin(), b.dets_.end(), Bits{0});
      break;
    }
    case Selector::Kind::Explicit:
      throw DomainError("explicit bases are built with SubspaceBasis::from_determinants");
  }
  return b;
}

Count binomial(Count n, Count k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (Count i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~Count{0}) throw OverflowError("binomial coefficient overflows 64 bits");
  }
  return static_cast<Count>(r);
}

Count hund_count(Count n_orbitals, Count n_electrons) {
  if (n_electrons > 2 * n_orbitals) throw DomainError("more electrons than spin orbitals");
  Count total = 0;
  for (Count k = 0; k <= n_electrons / 2; ++k) {
    const Count up = n_electrons - k;
    total = checked_add(total, checked_mul(binomial(n_orbitals, up), binomial(up, k)));
  }
  return total;
}

Count pc_count(Count n_orbitals, Count n_electrons) {
  if (n_electrons > 2 * n_orbitals) throw DomainError("more electrons than spin orbitals");
  return binomial(2 * n_orbitals, n_electrons);
}

Ratio basis_ratio(Count n_orbitals, Count n_electrons) {
  const Count pc = pc_count(n_orbitals, n_electrons);
  const Count hund = hund_count(n_orbitals, n_electrons);
  const Count g = std::gcd(pc, hund);
  return {pc / g, hund / g};
}

std::optional<std::pair<Determinant, int>> apply_fermionic_string(std::span<const FermionOp> ops,
                                                                  const Determinant& d) {
  for (const auto& op : ops)
    if (op.mode < 0 || op.mode >= d.n_modes())
      throw DimensionError("operator mode " + std::to_string(op.mode) + " outside the register");
  const auto r = apply_fermionic_string(ops, d.bits());
  if (!r) return std::nullopt;
  return std::pair{Determinant(r->bits, d.n_modes()), r->phase};
}

std::vector<OperatorImage> apply_fermionic_op(FermionOp op, const SubspaceBasis& basis) {
  if (op.mode < 0 || op.mode >= basis.n_modes())
    throw DimensionError("operator mode " + std::to_string(op.mode) + " outside the register");
  const auto dets = basis.determinants();
  const Bits flag = Bits{1} << op.mode;
  const Bits below = flag - 1;
  const bool want_occupied = op.type == FermionOp::Type::Annihilation;

  // Column j of the occupation table decides which rows survive; the parity
  // vector is the table times the indicator of modes below j.
  std::vector<OperatorImage> out;
  out.reserve(dets.size());
  for (std::size_t i = 0; i < dets.size(); ++i) {
    const Bits b = dets[i];
    if (static_cast<bool>(b & flag) != want_occupied) continue;
    out.push_back({i, b ^ flag, (std::popcount(b & below) & 1) ? -1 : 1});
  }
  return out;
}

}  // namespace hundq
