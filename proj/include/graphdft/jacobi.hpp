// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "graphdft/common.hpp"

namespace gdft {

/// Eigendecomposition of a Hermitian matrix: ascending eigenvalues and a
/// unitary matrix whose columns are the matching eigenvectors.
struct EigenSystem {
  RVector values;
  Matrix vectors;
};

/// Cyclic complex Jacobi diagonalization. Sweeps rotate every off-diagonal
/// pair until the off-diagonal Frobenius mass drops below tol times the
/// matrix norm; throws numerical_error if max_sweeps does not get there.
EigenSystem hermitian_eigen(const Matrix& a, double tol = 1e-14, int max_sweeps = 64);

/// Rotates the global phase of psi so its largest-magnitude entry becomes
/// real and positive. Ties pick the lowest index.
void fix_phase(Vector& psi);

}  // namespace gdft
