// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "graphdft/fock.hpp"
#include "graphdft/graph.hpp"

namespace gdft {

/// Scalar potential, one real value per vertex (0-based index).
struct Potential {
  RVector v;
  static Potential zero(int m) { return Potential{RVector::Zero(m)}; }
};

/// One-particle Hamiltonian matrix. Validated Hermitian within 1e-12.
struct OneBodyHamiltonian {
  Matrix mat;
  static OneBodyHamiltonian make(Matrix h);
  /// Kinetic part on a graph: minus the graph laplacian.
  static OneBodyHamiltonian from_graph(const Graph& g);
};

/// Pair interaction in diagonal form, w_ij = strength between vertices i, j.
/// Only this diagonal form is representable: the matrix must be real symmetric
/// with zero diagonal (within 1e-12), anything else is rejected at
/// construction. The induced many-body term is sum_{i<j} w_ij n_i n_j.
struct TwoBodyInteraction {
  RMatrix w;
  static TwoBodyInteraction make(RMatrix w);
  static TwoBodyInteraction zero(int m) { return TwoBodyInteraction{RMatrix::Zero(m, m)}; }
};

/// Dense many-body operator on a Fock basis. Validated Hermitian within 1e-12.
struct ManyBodyOperator {
  std::shared_ptr<const FockBasis> basis;
  Matrix mat;
};

ManyBodyOperator make_operator(std::shared_ptr<const FockBasis> basis, Matrix mat);

/// Second-quantized H = sum_ij h_ij a^dagger_i a_j + sum_{i<j} w_ij n_i n_j
/// + sum_i v_i n_i on the given basis. All dimensions must match the basis.
ManyBodyOperator assemble(const OneBodyHamiltonian& h, const TwoBodyInteraction& w,
                          const Potential& v, std::shared_ptr<const FockBasis> basis);

/// Occupation-number operator of one vertex: diagonal with entries 0/1.
ManyBodyOperator number_operator_matrix(int vertex, std::shared_ptr<const FockBasis> basis);

/// Diagonal of sum_i u_i n_i over the basis enumeration: entry I is the sum
/// of u over the vertices occupied in I.
RVector occupation_profile(const FockBasis& basis, const RVector& u);

/// op plus the external potential sum_i v_i n_i.
ManyBodyOperator add_potential(const ManyBodyOperator& op, const RVector& v);

}  // namespace gdft
