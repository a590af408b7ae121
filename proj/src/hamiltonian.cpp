// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/hamiltonian.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

namespace hundq {

SparseHamiltonian::SparseHamiltonian(std::shared_ptr<const SubspaceBasis> basis,
                                     Eigen::SparseMatrix<double> matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (!basis_) throw DomainError("Hamiltonian needs a basis");
  if (matrix_.rows() != matrix_.cols() ||
      matrix_.rows() != static_cast<Eigen::Index>(basis_->size()))
    throw DimensionError("matrix shape does not match the basis size");
  matrix_.makeCompressed();
}

std::vector<Eigen::Triplet<double>> SparseHamiltonian::entries() const {
  std::vector<Eigen::Triplet<double>> out;
  out.reserve(static_cast<std::size_t>(matrix_.nonZeros()));
  for (Eigen::Index c = 0; c < matrix_.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(matrix_, c); it; ++it)
      out.emplace_back(it.row(), it.col(), it.value());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::pair(a.row(), a.col()) < std::pair(b.row(), b.col());
  });
  return out;
}

SparseHamiltonian SparseHamiltonian::shifted(double c) const {
  Eigen::SparseMatrix<double> id(dim(), dim());
  id.setIdentity();
  return SparseHamiltonian(basis_, matrix_ + c * id);
}

namespace {

// Nonzero integrals regrouped by the orbitals that are annihilated.
class TermTable {
 public:
  struct OneBody {
    int p;
    double h;
  };
  struct TwoBody {
    int p, r;
    double half_eri;
  };

  explicit TermTable(const IntegralTable& t) : m_(t.n_orbitals()), core_(t.core_energy()) {
    one_.resize(static_cast<std::size_t>(m_));
    two_.resize(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_));
    for (int q = 0; q < m_; ++q)
      for (int p = 0; p < m_; ++p)
        if (const double h = t.one_body(p, q); h != 0.0) one_[q].push_back({p, h});
    for (int q = 0; q < m_; ++q)
      for (int s = 0; s < m_; ++s)
        for (int p = 0; p < m_; ++p)
          for (int r = 0; r < m_; ++r)
            if (const double v = t.two_body(p, q, r, s); v != 0.0)
              two_[index(q, s)].push_back({p, r, 0.5 * v});
  }

  // Calls emit(target_bits, amplitude) for every term of H acting on `bits`:
  //   E_core + sum h_pq a+_{p s} a_{q s}
  //          + 1/2 sum (pq|rs) a+_{p s} a+_{r t} a_{r' t} a_{q s}
  template <typename Emit>
  void visit(Bits bits, Emit&& emit) const {
    emit(bits, core_);
    const int n_modes = 2 * m_;
    for (int qm = 0; qm < n_modes; ++qm) {
      if (!((bits >> qm) & 1U)) continue;
      const int spin_q = qm & 1;
      for (const auto& [p, h] : one_[qm >> 1]) {
        const std::array ops{FermionOp::create(2 * p + spin_q), FermionOp::annihilate(qm)};
        if (const auto r = apply_fermionic_string(ops, bits)) emit(r->bits, h * r->phase);
      }
    }
    for (int qm = 0; qm < n_modes; ++qm) {
      if (!((bits >> qm) & 1U)) continue;
      const int spin_q = qm & 1;
      for (int sm = 0; sm < n_modes; ++sm) {
        if (sm == qm || !((bits >> sm) & 1U)) continue;
        const int spin_s = sm & 1;
        const std::array removal{FermionOp::annihilate(sm), FermionOp::annihilate(qm)};
        const auto hole = apply_fermionic_string(removal, bits);
        if (!hole) continue;
        for (const auto& [p, r, v] : two_[index(qm >> 1, sm >> 1)]) {
          const std::array fill{FermionOp::create(2 * p + spin_q), FermionOp::create(2 * r + spin_s)};
          if (const auto t = apply_fermionic_string(fill, hole->bits))
            emit(t->bits, v * hole->phase * t->phase);
        }
      }
    }
  }

 private:
  std::size_t index(int q, int s) const noexcept {
    return static_cast<std::size_t>(q) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(s);
  }

  int m_;
  double core_;
  std::vector<std::vector<OneBody>> one_;
  std::vector<std::vector<TwoBody>> two_;
};

}  // namespace

std::vector<std::pair<Determinant, double>> apply_hamiltonian(const IntegralTable& table,
                                                              const Determinant& d) {
  if (d.n_modes() != table.n_modes())
    throw DimensionError("determinant has " + std::to_string(d.n_modes()) +
                         " modes, integrals describe " + std::to_string(table.n_modes()));
  std::map<Bits, double> acc;
  TermTable(table).visit(d.bits(), [&](Bits b, double a) { acc[b] += a; });
  std::vector<std::pair<Determinant, double>> out;
  out.reserve(acc.size());
  for (const auto& [b, a] : acc)
    if (b == d.bits() || std::abs(a) >= kAmplitudePrune) out.emplace_back(Determinant(b, d.n_modes()), a);
  return out;
}

SparseHamiltonian restrict_hamiltonian(const IntegralTable& table,
                                       std::shared_ptr<const SubspaceBasis> basis) {
  if (!basis || basis->empty()) throw DomainError("cannot restrict to an empty basis");
  if (basis->n_modes() != table.n_modes())
    throw DimensionError("basis has " + std::to_string(basis->n_modes()) +
                         " modes, integrals describe " + std::to_string(table.n_modes()));

  const TermTable terms(table);
  const auto dets = basis->determinants();
  const auto dim = static_cast<Eigen::Index>(dets.size());
  const bool hund_only = basis->selector().kind == Selector::Kind::Hund;

  // Column-at-a-time sparse accumulator.
  std::vector<double> acc(dets.size(), 0.0);
  std::vector<std::uint8_t> seen(dets.size(), 0);
  std::vector<Eigen::Index> touched;

  Eigen::SparseMatrix<double> m(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    touched.clear();
    terms.visit(dets[static_cast<std::size_t>(j)], [&](Bits b, double a) {
      if (hund_only && !hund_satisfied(b)) return;
      const auto i = basis->find(b);
      if (!i) return;
      if (!seen[*i]) {
        seen[*i] = 1;
        touched.push_back(static_cast<Eigen::Index>(*i));
      }
      acc[*i] += a;
    });
    std::sort(touched.begin(), touched.end());
    m.startVec(j);
    for (const auto i : touched) {
      const auto k = static_cast<std::size_t>(i);
      if (std::abs(acc[k]) >= kAmplitudePrune) m.insertBack(i, j) = acc[k];
      acc[k] = 0.0;
      seen[k] = 0;
    }
  }
  m.finalize();

  // Exact symmetry; the two triangles differ only by summation order.
  Eigen::SparseMatrix<double> t = m.transpose();
  Eigen::SparseMatrix<double> sym = 0.5 * (m + t);
  sym.prune(kAmplitudePrune, 1.0);
  return SparseHamiltonian(std::move(basis), std::move(sym));
}

SparseHamiltonian restrict_hamiltonian(const IntegralTable& table, SubspaceBasis basis) {
  return restrict_hamiltonian(table, std::make_shared<const SubspaceBasis>(std::move(basis)));
}

std::vector<SubspaceBasis> sector_split(const SubspaceBasis& basis) {
  std::map<std::pair<int, int>, std::vector<Bits>> parts;
  const Bits up = up_mask(basis.n_modes());
  for (const Bits b : basis.determinants()) {
    const int n_up = std::popcount(b & up);
    const int n_down = std::popcount(b) - n_up;
    parts[{n_down, n_up}].push_back(b);
  }
  std::vector<SubspaceBasis> out;
  out.reserve(parts.size());
  for (auto& [key, dets] : parts)
    out.push_back(SubspaceBasis::from_determinants(std::move(dets), basis.n_modes()));
  return out;
}

}  // namespace hundq
