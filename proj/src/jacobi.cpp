// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace gdft {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p) {
    for (Eigen::Index q = 0; q < a.cols(); ++q) {
      if (p != q) sum += std::norm(a(p, q));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eigen(const Matrix& a, double tol, int max_sweeps) {
  if (a.rows() != a.cols()) throw invalid_input("hermitian_eigen: matrix must be square");
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  if ((a - a.adjoint()).norm() > 1e-12 * std::max(1.0, scale)) {
    throw invalid_input("hermitian_eigen: matrix is not Hermitian");
  }

  Matrix work = a;
  Matrix vecs = Matrix::Identity(n, n);
  const double target = tol * std::max(scale, 1e-300);

  int sweep = 0;
  for (; sweep < max_sweeps && off_diagonal_norm(work) > target; ++sweep) {
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cx apq = work(p, q);
        const double mag = std::abs(apq);
        if (mag <= target / (static_cast<double>(n) + 1.0)) continue;

        const cx phase = apq / mag;
        const double tau = (std::real(work(q, q)) - std::real(work(p, p))) / (2.0 * mag);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        const cx se = s * phase;

        // work <- U^H work U with U = [[c, s*phase], [-s*conj(phase), c]]
        for (Eigen::Index r = 0; r < n; ++r) {
          const cx xp = work(r, p);
          const cx xq = work(r, q);
          work(r, p) = c * xp - std::conj(se) * xq;
          work(r, q) = se * xp + c * xq;
        }
        for (Eigen::Index col = 0; col < n; ++col) {
          const cx xp = work(p, col);
          const cx xq = work(q, col);
          work(p, col) = c * xp - se * xq;
          work(q, col) = std::conj(se) * xp + c * xq;
        }
        work(p, q) = 0.0;
        work(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          const cx xp = vecs(r, p);
          const cx xq = vecs(r, q);
          vecs(r, p) = c * xp - std::conj(se) * xq;
          vecs(r, q) = se * xp + c * xq;
        }
      }
    }
  }

  const double residual_off = off_diagonal_norm(work);
  if (residual_off > target) {
    std::ostringstream msg;
    msg << "hermitian_eigen: no convergence after " << sweep
        << " sweeps, off-diagonal norm " << residual_off;
    throw numerical_error(msg.str());
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::real(work(i, i)) < std::real(work(j, j));
  });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sys.values(k) = std::real(work(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]));
    sys.vectors.col(k) = vecs.col(order[static_cast<size_t>(k)]);
  }
  return sys;
}

void fix_phase(Vector& psi) {
  Eigen::Index arg = 0;
  const double top = psi.cwiseAbs().maxCoeff(&arg);
  if (top <= 0.0) return;
  psi *= std::conj(psi(arg)) / std::abs(psi(arg));
}

}  // namespace gdft
