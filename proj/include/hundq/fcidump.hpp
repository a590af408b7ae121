// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hundq {

/**
 * Molecular integrals over M real spatial orbitals.
 *
 * Two-electron integrals use chemist notation (pq|rs) and are stored once per
 * 8-fold symmetry class; every index image reads the same slot.
 */
class IntegralTable {
 public:
  IntegralTable() = default;
  IntegralTable(int n_orbitals, int n_electrons, int ms2 = 0);

  int n_orbitals() const noexcept { return n_orbitals_; }
  int n_electrons() const noexcept { return n_electrons_; }
  int ms2() const noexcept { return ms2_; }
  int n_modes() const noexcept { return 2 * n_orbitals_; }

  double core_energy() const noexcept { return core_energy_; }
  void set_core_energy(double e) noexcept { core_energy_ = e; }

  double one_body(int p, int q) const { return one_body_(p, q); }
  /// Sets h[p][q] and h[q][p].
  void set_one_body(int p, int q, double v);
  const Eigen::MatrixXd& one_body_matrix() const noexcept { return one_body_; }

  double two_body(int p, int q, int r, int s) const { return two_body_[slot(p, q, r, s)]; }
  /// Sets (pq|rs) and all of its symmetry images.
  void set_two_body(int p, int q, int r, int s, double v) { two_body_[slot(p, q, r, s)] = v; }

  /// Canonical slot of (pq|rs): p>=q, r>=s, pair(pq)>=pair(rs).
  static std::size_t slot(int p, int q, int r, int s) noexcept {
    const std::size_t pq = pair(p, q);
    const std::size_t rs = pair(r, s);
    return pq >= rs ? pq * (pq + 1) / 2 + rs : rs * (rs + 1) / 2 + pq;
  }

  /// Multiplies every integral and the core energy by `factor`.
  void scale(double factor);

  friend bool operator==(const IntegralTable&, const IntegralTable&) = default;

 private:
  static std::size_t pair(int p, int q) noexcept {
    const auto a = static_cast<std::size_t>(p > q ? p : q);
    const auto b = static_cast<std::size_t>(p > q ? q : p);
    return a * (a + 1) / 2 + b;
  }

  int n_orbitals_ = 0;
  int n_electrons_ = 0;
  int ms2_ = 0;
  double core_energy_ = 0.0;
  Eigen::MatrixXd one_body_;
  std::vector<double> two_body_;
};

/// Parses FCIDUMP text. Throws ParseError with the offending line number.
IntegralTable parse_fcidump(std::istream& in);
IntegralTable parse_fcidump(std::string_view text);
IntegralTable read_fcidump(const std::filesystem::path& path);

/// Canonical FCIDUMP: header, two-body, one-body, core energy record.
/// Zero integrals are omitted; values round-trip exactly.
std::string write_fcidump(const IntegralTable& table);

/// Shortest "%.17g" rendering with a trailing ".0" for integral values.
std::string format_real(double v);

}  // namespace hundq
