// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/operators.hpp"

#include <cmath>

namespace gdft {

OneBodyHamiltonian OneBodyHamiltonian::make(Matrix h) {
  if (h.rows() != h.cols()) throw invalid_input("one-body Hamiltonian must be square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw invalid_input("one-body Hamiltonian is not Hermitian");
  }
  return OneBodyHamiltonian{std::move(h)};
}

OneBodyHamiltonian OneBodyHamiltonian::from_graph(const Graph& g) {
  return OneBodyHamiltonian{(-graph_laplacian(g)).cast<cx>()};
}

TwoBodyInteraction TwoBodyInteraction::make(RMatrix w) {
  if (w.rows() != w.cols()) throw invalid_input("interaction matrix must be square");
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw invalid_input("interaction matrix must be symmetric (diagonal-form pair weights)");
  }
  if (w.diagonal().cwiseAbs().maxCoeff() > 1e-12) {
    throw invalid_input("interaction matrix must have zero diagonal");
  }
  return TwoBodyInteraction{std::move(w)};
}

ManyBodyOperator make_operator(std::shared_ptr<const FockBasis> basis, Matrix mat) {
  if (!basis) throw invalid_input("operator needs a basis");
  if (mat.rows() != basis->size() || mat.cols() != basis->size()) {
    throw invalid_input("operator dimension does not match basis size");
  }
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, mat.cwiseAbs().maxCoeff())) {
    throw invalid_input("many-body operator is not Hermitian");
  }
  return ManyBodyOperator{std::move(basis), std::move(mat)};
}

ManyBodyOperator assemble(const OneBodyHamiltonian& h, const TwoBodyInteraction& w,
                          const Potential& v, std::shared_ptr<const FockBasis> basis) {
  if (!basis) throw invalid_input("assemble needs a basis");
  const int m = basis->m();
  if (h.mat.rows() != m) throw invalid_input("one-body dimension does not match basis");
  if (w.w.rows() != m) throw invalid_input("interaction dimension does not match basis");
  if (v.v.size() != m) throw invalid_input("potential length does not match basis");

  const int dim = basis->size();
  Matrix out = Matrix::Zero(dim, dim);

  for (int col = 0; col < dim; ++col) {
    const MultiIndex idx = basis->index(col);
    const auto verts = vertices_of(idx);

    cx diag = 0.0;
    for (size_t a = 0; a < verts.size(); ++a) {
      const int i = verts[a];
      diag += h.mat(i, i) + v.v(i);
      for (size_t b = a + 1; b < verts.size(); ++b) diag += w.w(i, verts[b]);
    }
    out(col, col) += diag;

    // Hopping: a^dagger_i a_j for i != j moves one particle.
    for (int j : verts) {
      const auto down = annihilate(j, idx);
      for (int i = 0; i < m; ++i) {
        if (i == j || h.mat(i, j) == cx(0.0)) continue;
        const auto up = create(i, down->second);
        if (!up) continue;
        const int row = basis->rank(up->second);
        out(row, col) += static_cast<double>(down->first * up->first) * h.mat(i, j);
      }
    }
  }
  return ManyBodyOperator{std::move(basis), std::move(out)};
}

ManyBodyOperator number_operator_matrix(int vertex, std::shared_ptr<const FockBasis> basis) {
  if (!basis) throw invalid_input("number operator needs a basis");
  if (vertex < 0 || vertex >= basis->m()) throw invalid_input("vertex out of range");
  const int dim = basis->size();
  Matrix out = Matrix::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (basis->index(r).contains(vertex)) out(r, r) = 1.0;
  }
  return ManyBodyOperator{std::move(basis), std::move(out)};
}

RVector occupation_profile(const FockBasis& basis, const RVector& u) {
  if (u.size() != basis.m()) throw invalid_input("occupation_profile: length mismatch");
  RVector d(basis.size());
  for (int r = 0; r < basis.size(); ++r) {
    double sum = 0.0;
    for (int v : vertices_of(basis.index(r))) sum += u(v);
    d(r) = sum;
  }
  return d;
}

ManyBodyOperator add_potential(const ManyBodyOperator& op, const RVector& v) {
  if (!op.basis) throw invalid_input("add_potential: operator without a basis");
  ManyBodyOperator out{op.basis, op.mat};
  out.mat.diagonal() += occupation_profile(*op.basis, v).cast<cx>();
  return out;
}

}  // namespace gdft
