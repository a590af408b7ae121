// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference implementations. Nothing here calls into the operator
// or Hamiltonian kernels of the library.

#pragma once

#include <hundq/fcidump.hpp>

#include <json.hpp>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace hundq::testing {

inline std::filesystem::path fixture_dir() { return HUNDQ_FIXTURES; }

inline std::filesystem::path molecule_path(const std::string& name) {
  return fixture_dir() / "molecules" / (name + ".fcidump");
}

inline nlohmann::json sidecar(const std::string& name) {
  std::ifstream in(fixture_dir() / "molecules" / (name + ".json"));
  return nlohmann::json::parse(in);
}

inline const std::vector<std::string>& all_molecules() {
  static const std::vector<std::string> names{"heh+", "h2",  "lih", "hf", "h2o", "beh2", "nh3", "bh3",
                                              "ch4",  "o2",  "no",  "n2", "co",  "h2o2", "h2co"};
  return names;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

using SpMat = Eigen::SparseMatrix<double>;

inline SpMat kron(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index i = 0; i < a.outerSize(); ++i)
    for (SpMat::InnerIterator x(a, i); x; ++x)
      for (Eigen::Index j = 0; j < b.outerSize(); ++j)
        for (SpMat::InnerIterator y(b, j); y; ++y)
          t.emplace_back(x.row() * b.rows() + y.row(), x.col() * b.cols() + y.col(), x.value() * y.value());
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

inline SpMat small(std::initializer_list<double> v) {
  Eigen::Matrix2d m;
  auto it = v.begin();
  m << it[0], it[1], it[2], it[3];
  return m.sparseView();
}

/// Jordan-Wigner annihilator of `mode` on n modes as a Kronecker product;
/// the highest mode is the leftmost factor, so the row index equals the bitstring.
inline SpMat jw_annihilator(int n_modes, int mode) {
  const SpMat id = small({1, 0, 0, 1});
  const SpMat z = small({1, 0, 0, -1});
  const SpMat lower = small({0, 1, 0, 0});
  SpMat out(1, 1);
  out.insert(0, 0) = 1.0;
  for (int k = n_modes - 1; k >= 0; --k) out = kron(out, k > mode ? id : k == mode ? lower : z);
  return out;
}

inline SpMat jw_creator(int n_modes, int mode) { return SpMat(jw_annihilator(n_modes, mode).transpose()); }

/// Second-quantized Hamiltonian on the full Fock space, assembled from
/// Kronecker-product operators.
inline Eigen::MatrixXd jw_hamiltonian(const IntegralTable& t) {
  const int n = t.n_modes();
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<SpMat> c, a;
  for (int j = 0; j < n; ++j) {
    a.push_back(jw_annihilator(n, j));
    c.push_back(jw_creator(n, j));
  }
  SpMat h(dim, dim);
  h.setIdentity();
  h *= t.core_energy();
  const int m = t.n_orbitals();
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int s = 0; s < 2; ++s)
        if (t.one_body(p, q) != 0.0) h += t.one_body(p, q) * (c[2 * p + s] * a[2 * q + s]);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double v = t.two_body(p, q, r, s);
          if (v == 0.0) continue;
          for (int sig = 0; sig < 2; ++sig)
            for (int tau = 0; tau < 2; ++tau)
              h += (0.5 * v) * SpMat(c[2 * p + sig] * c[2 * r + tau] * a[2 * s + tau] * a[2 * q + sig]);
        }
  return Eigen::MatrixXd(h);
}

/// Antisymmetrized spin-orbital integral <pq||rs>.
inline double antisym(const IntegralTable& t, int p, int q, int r, int s) {
  auto coulomb = [&](int i, int j, int k, int l) {
    if ((i & 1) != (k & 1) || (j & 1) != (l & 1)) return 0.0;
    return t.two_body(i / 2, k / 2, j / 2, l / 2);
  };
  return coulomb(p, q, r, s) - coulomb(p, q, s, r);
}

inline double one_body_spin(const IntegralTable& t, int p, int q) {
  return (p & 1) == (q & 1) ? t.one_body(p / 2, q / 2) : 0.0;
}

/// <bra|H|ket> by the Slater-Condon rules in maximum coincidence.
inline double slater_condon(const IntegralTable& t, std::uint64_t bra, std::uint64_t ket) {
  auto occupied = [](std::uint64_t b) {
    std::vector<int> v;
    for (int i = 0; i < 64; ++i)
      if ((b >> i) & 1) v.push_back(i);
    return v;
  };
  if (std::popcount(bra) != std::popcount(ket)) return 0.0;
  const auto occ = occupied(ket);
  const auto holes = occupied(ket & ~bra);
  const auto parts = occupied(bra & ~ket);
  if (holes.size() > 2) return 0.0;

  if (holes.empty()) {
    double e = t.core_energy();
    for (int i : occ) e += one_body_spin(t, i, i);
    for (int i : occ)
      for (int j : occ) e += 0.5 * antisym(t, i, j, i, j);
    return e;
  }
  // Put each particle where its hole was, then count inversions to sort.
  std::vector<int> aligned = occ;
  for (std::size_t k = 0; k < holes.size(); ++k)
    *std::find(aligned.begin(), aligned.end(), holes[k]) = parts[k];
  int inversions = 0;
  for (std::size_t x = 0; x < aligned.size(); ++x)
    for (std::size_t y = x + 1; y < aligned.size(); ++y)
      if (aligned[x] > aligned[y]) ++inversions;
  const double sign = inversions % 2 ? -1.0 : 1.0;

  if (holes.size() == 1) {
    const int i = holes[0], a = parts[0];
    double e = one_body_spin(t, a, i);
    for (int k : occ) e += antisym(t, a, k, i, k);
    return sign * e;
  }
  return sign * antisym(t, parts[0], parts[1], holes[0], holes[1]);
}

/// Integral table with random real values that respect the 8-fold symmetry.
inline IntegralTable random_table(int n_orbitals, int n_electrons, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  IntegralTable t(n_orbitals, n_electrons);
  t.set_core_energy(u(rng));
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q <= p; ++q) t.set_one_body(p, q, u(rng));
  for (int p = 0; p < n_orbitals; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n_orbitals; ++r)
        for (int s = 0; s <= r; ++s) t.set_two_body(p, q, r, s, 0.5 * u(rng));
  return t;
}

/// Symbolic Pauli algebra: words of length n, leftmost letter on qubit n-1.
class PauliSum {
 public:
  using Complex = std::complex<double>;

  explicit PauliSum(int n) : n_(n) {}

  static PauliSum identity(int n, Complex c = 1.0) {
    PauliSum s(n);
    s.terms_[std::string(static_cast<std::size_t>(n), 'I')] = c;
    return s;
  }
  static PauliSum single(int n, int qubit, char letter, Complex c = 1.0) {
    PauliSum s(n);
    std::string w(static_cast<std::size_t>(n), 'I');
    w[static_cast<std::size_t>(n - 1 - qubit)] = letter;
    s.terms_[w] = c;
    return s;
  }

  /// (X + iY)/2 on `mode` behind a string of Z on the lower modes.
  static PauliSum annihilator(int n, int mode) {
    PauliSum s = single(n, mode, 'X', 0.5) + single(n, mode, 'Y', Complex(0, 0.5));
    for (int k = 0; k < mode; ++k) s = single(n, k, 'Z') * s;
    return s;
  }
  static PauliSum creator(int n, int mode) {
    PauliSum s = single(n, mode, 'X', 0.5) + single(n, mode, 'Y', Complex(0, -0.5));
    for (int k = 0; k < mode; ++k) s = single(n, k, 'Z') * s;
    return s;
  }

  friend PauliSum operator+(PauliSum a, const PauliSum& b) {
    for (const auto& [w, c] : b.terms_) a.terms_[w] += c;
    return a;
  }
  friend PauliSum operator*(Complex k, PauliSum a) {
    for (auto& [w, c] : a.terms_) c *= k;
    return a;
  }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    PauliSum out(a.n_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) {
        Complex phase = ca * cb;
        std::string w(wa.size(), 'I');
        for (std::size_t k = 0; k < wa.size(); ++k) {
          const auto [letter, f] = letter_product(wa[k], wb[k]);
          w[k] = letter;
          phase *= f;
        }
        out.terms_[w] += phase;
      }
    return out;
  }

  const std::map<std::string, Complex>& terms() const { return terms_; }

 private:
  static std::pair<char, Complex> letter_product(char a, char b) {
    const Complex i(0, 1);
    if (a == 'I') return {b, 1.0};
    if (b == 'I') return {a, 1.0};
    if (a == b) return {'I', 1.0};
    if (a == 'X' && b == 'Y') return {'Z', i};
    if (a == 'Y' && b == 'X') return {'Z', -i};
    if (a == 'Y' && b == 'Z') return {'X', i};
    if (a == 'Z' && b == 'Y') return {'X', -i};
    if (a == 'Z' && b == 'X') return {'Y', i};
    return {'Y', -i};  // X Z
  }

  int n_;
  std::map<std::string, Complex> terms_;
};

inline PauliSum jw_pauli_hamiltonian(const IntegralTable& t) {
  const int n = t.n_modes();
  const int m = t.n_orbitals();
  std::vector<PauliSum> c, a;
  for (int j = 0; j < n; ++j) {
    c.push_back(PauliSum::creator(n, j));
    a.push_back(PauliSum::annihilator(n, j));
  }
  PauliSum h = PauliSum::identity(n, t.core_energy());
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int s = 0; s < 2; ++s)
        if (t.one_body(p, q) != 0.0) h = h + t.one_body(p, q) * (c[2 * p + s] * a[2 * q + s]);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double v = t.two_body(p, q, r, s);
          if (v == 0.0) continue;
          for (int sig = 0; sig < 2; ++sig)
            for (int tau = 0; tau < 2; ++tau)
              h = h + (0.5 * v) * (c[2 * p + sig] * c[2 * r + tau] * a[2 * s + tau] * a[2 * q + sig]);
        }
  return h;
}

}  // namespace hundq::testing
