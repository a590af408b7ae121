// Copyright 2026 The hundq Authors
// SPDX-License-Identifier: Apache-2.0

#include <hundq/spectra.hpp>

#include <hundq/error.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <vector>

namespace hundq {

std::string to_string(SolveMethod m) { return m == SolveMethod::Dense ? "dense" : "lanczos"; }

namespace {

void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  if (v(at) < 0) v = -v;
}

double residual_of(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXd& v, double e) {
  return (h * v - e * v).norm();
}

// Solves (T - shift) x = b for symmetric tridiagonal T by Gaussian elimination
// with partial pivoting; zero pivots are nudged so inverse iteration can proceed.
Eigen::VectorXd tridiagonal_solve(const Eigen::VectorXd& diag, const Eigen::VectorXd& sub, double shift,
                                  Eigen::VectorXd b, double scale) {
  const Eigen::Index n = diag.size();
  const double tiny = 1e-15 * scale;
  Eigen::VectorXd d = diag.array() - shift;
  Eigen::VectorXd dl = sub, du = sub;
  Eigen::VectorXd du2 = Eigen::VectorXd::Zero(n);
  std::vector<char> swapped(static_cast<std::size_t>(n), 0);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (std::abs(d(i)) >= std::abs(dl(i))) {
      if (d(i) == 0.0) d(i) = tiny;
      const double f = dl(i) / d(i);
      dl(i) = f;
      d(i + 1) -= f * du(i);
    } else {
      const double f = d(i) / dl(i);
      d(i) = dl(i);
      dl(i) = f;
      const double t = du(i);
      du(i) = d(i + 1);
      d(i + 1) = t - f * d(i + 1);
      if (i + 2 < n) {
        du2(i) = du(i + 1);
        du(i + 1) = -f * du(i + 1);
      }
      swapped[static_cast<std::size_t>(i)] = 1;
    }
  }
  if (d(n - 1) == 0.0) d(n - 1) = tiny;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (swapped[static_cast<std::size_t>(i)]) std::swap(b(i), b(i + 1));
    b(i + 1) -= dl(i) * b(i);
  }
  b(n - 1) /= d(n - 1);
  b(n - 2) = (b(n - 2) - du(n - 2) * b(n - 1)) / d(n - 2);
  for (Eigen::Index i = n - 3; i >= 0; --i) b(i) = (b(i) - du(i) * b(i + 1) - du2(i) * b(i + 2)) / d(i);
  return b;
}

int count_within(const Eigen::VectorXd& sorted_values, double window) {
  int n = 0;
  for (Eigen::Index i = 0; i < sorted_values.size(); ++i)
    if (sorted_values(i) - sorted_values(0) <= window) ++n;
  return n;
}

}  // namespace

GroundStateResult solve_dense(const Eigen::SparseMatrix<double>& h, Eigen::Index dense_cap) {
  if (h.rows() != h.cols()) throw DimensionError("Hamiltonian is not square");
  if (h.rows() == 0) throw DomainError("empty Hamiltonian");
  if (h.rows() > dense_cap)
    throw CapacityError("dimension " + std::to_string(h.rows()) + " exceeds the dense cap of " +
                        std::to_string(dense_cap) + "; use the Lanczos solver");
  const Eigen::MatrixXd dense = Eigen::MatrixXd(h);
  GroundStateResult r;
  r.method = SolveMethod::Dense;
  if (dense.rows() == 1) {
    r.energy = dense(0, 0);
    r.amplitudes = Eigen::VectorXd::Ones(1);
    return r;
  }
  // Only the lowest vector is needed, so skip the O(n^3) eigenvector accumulation.
  const Eigen::Tridiagonalization<Eigen::MatrixXd> tri(dense);
  const Eigen::VectorXd diag = tri.diagonal();
  const Eigen::VectorXd sub = tri.subDiagonal();
  // Same scaling the full-matrix solver applies before its QR sweeps.
  const double scale = std::max({1.0, diag.cwiseAbs().maxCoeff(), sub.cwiseAbs().maxCoeff()});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag / scale, sub / scale, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed", 0.0);
  const Eigen::VectorXd values = es.eigenvalues() * scale;

  r.energy = values(0);
  r.degeneracy_count = count_within(values, kDegeneracyWindow);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(dense.rows());
  for (int it = 0; it < 3; ++it) {
    x = tridiagonal_solve(diag, sub, r.energy, x, scale);
    x.normalize();
  }
  r.amplitudes = tri.matrixQ() * x;
  r.amplitudes.normalize();
  fix_sign(r.amplitudes);
  r.residual = residual_of(h, r.amplitudes, r.energy);
  return r;
}

GroundStateResult solve_dense(const SparseHamiltonian& h, Eigen::Index dense_cap) {
  return solve_dense(h.matrix(), dense_cap);
}

GroundStateResult solve_lanczos(const Eigen::SparseMatrix<double>& h, const LanczosOptions& opts) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw DimensionError("Hamiltonian is not square");
  if (n < 2) throw DomainError("Lanczos needs dimension >= 2");
  if (!(opts.tol > 0)) throw DomainError("Lanczos tolerance must be positive");
  if (opts.max_iter < 1) throw DomainError("Lanczos needs max_iter >= 1");

  const Eigen::Index m_max = std::min<Eigen::Index>(opts.max_iter, n);
  Eigen::MatrixXd basis(n, m_max);
  Eigen::VectorXd alpha(m_max);
  Eigen::VectorXd beta(m_max);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(rng);
  v.normalize();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz;
  double previous = std::numeric_limits<double>::infinity();
  double best = previous;
  Eigen::VectorXd w(n);

  for (Eigen::Index j = 0; j < m_max; ++j) {
    basis.col(j) = v;
    w.noalias() = h * v;
    alpha(j) = v.dot(w);
    w -= alpha(j) * v;
    if (j > 0) w -= beta(j - 1) * basis.col(j - 1);
    // Two passes of classical Gram-Schmidt against every Lanczos vector.
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXd overlaps = basis.leftCols(j + 1).transpose() * w;
      w.noalias() -= basis.leftCols(j + 1) * overlaps;
    }
    beta(j) = w.norm();

    ritz.computeFromTridiagonal(alpha.head(j + 1), beta.head(j), Eigen::ComputeEigenvectors);
    const double theta = ritz.eigenvalues()(0);
    best = theta;
    const double estimate = beta(j) * std::abs(ritz.eigenvectors()(j, 0));
    const bool exhausted = j + 1 == n || beta(j) <= 1e-13 * std::max(1.0, std::abs(theta));
    const bool settled = std::abs(theta - previous) < opts.tol && estimate <= 0.5 * residual_bound(theta);

    if (exhausted || settled) {
      GroundStateResult r;
      r.method = SolveMethod::Lanczos;
      r.iterations = static_cast<int>(j + 1);
      r.energy = theta;
      r.amplitudes = basis.leftCols(j + 1) * ritz.eigenvectors().col(0);
      r.amplitudes.normalize();
      fix_sign(r.amplitudes);
      r.residual = residual_of(h, r.amplitudes, r.energy);
      r.degeneracy_count = count_within(ritz.eigenvalues(), kDegeneracyWindow);
      if (exhausted || r.residual <= residual_bound(r.energy)) return r;
    }
    previous = theta;
    if (j + 1 < m_max) v = w / beta(j);
  }
  throw ConvergenceError("Lanczos did not converge in " + std::to_string(m_max) +
                             " iterations (best Ritz value " + std::to_string(best) + ")",
                         best);
}

GroundStateResult solve_lanczos(const SparseHamiltonian& h, const LanczosOptions& opts) {
  return solve_lanczos(h.matrix(), opts);
}

GroundStateResult solve_auto(const SparseHamiltonian& h, const LanczosOptions& opts) {
  if (h.dim() <= kDenseCap) return solve_dense(h);
  return solve_lanczos(h, opts);
}

}  // namespace hundq
