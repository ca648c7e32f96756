// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "graphdft/fock.hpp"
#include "graphdft/jacobi.hpp"
#include "graphdft/operators.hpp"

namespace gdft {

/// Full spectrum of a many-body operator. Eigenvalues ascend and every
/// eigenvector column is phase fixed.
struct Spectrum {
  std::shared_ptr<const FockBasis> basis;
  RVector eigenvalues;
  Matrix vectors;
};

Spectrum eigendecompose(const ManyBodyOperator& op);

/// Ground level of an operator: the eigenstates whose energy lies within
/// tol * max(1, |E0|) of the bottom eigenvalue E0. gap is the distance from
/// E0 to the first excluded level (+inf if nothing is excluded), and
/// ambiguous warns that the gap is within a factor 10 of the collection
/// threshold, so the reported degeneracy depends delicately on tol.
struct GroundManifold {
  double energy = 0.0;
  int degeneracy = 0;
  std::vector<WaveFunction> states;
  double gap = 0.0;
  bool ambiguous = false;
};

GroundManifold ground_manifold(const ManyBodyOperator& op, double degeneracy_tol = 1e-8);

/// Vertex occupation numbers of a state; always inside the hypersimplex.
struct Density {
  RVector rho;
};

Density density_of(const WaveFunction& psi);

/// Statistical mixture of normalized states with convex weights.
struct EnsembleState {
  std::vector<double> weights;
  std::vector<WaveFunction> states;
};

Density density_of_ensemble(const EnsembleState& ensemble);

}  // namespace gdft
