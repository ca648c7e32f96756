// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "graphdft/fock.hpp"
#include "graphdft/operators.hpp"

namespace gdft {

/// Largest number of occupation patterns whose 0/1 occupancy vectors still
/// fail to span all of R^m. A state supported on more patterns than this is
/// automatically the unique ground state of its potential.
int odlyzko_number(int m, int n);

/// Ranks of the basis multi-indices carrying weight above zero_tol, ascending.
std::vector<int> support(const WaveFunction& psi, double zero_tol = 1e-10);

/// 0/1 occupancy matrix of the support: one row per supported multi-index,
/// one column per vertex.
RMatrix upsilon_matrix(const WaveFunction& psi, double zero_tol = 1e-10);

int matrix_rank(const RMatrix& a, double pivot_tol = 1e-10);

/// Basis of the right kernel. Each vector has unit max-norm and its first
/// nonzero entry positive.
std::vector<RVector> kernel_basis(const RMatrix& a, double pivot_tol = 1e-10);

/// Potential directions that leave psi an exact eigenstate when added to the
/// Hamiltonian: the kernel of the occupancy matrix.
std::vector<RVector> nonuv_subspace(const WaveFunction& psi, double zero_tol = 1e-10);

enum class UvStatus {
  certified_uv_by_count,
  certified_uv_by_rank,
  non_uv_with_witness,
  undetermined,
};

std::string to_string(UvStatus status);

/// Grid for scanning how far along a kernel direction the state stays a
/// ground state. log places `points` geometric samples per sign between
/// t_min and t_max; linear places `points` uniform samples per sign up to
/// t_max.
struct TScanSpec {
  enum class Grid { log, linear };
  Grid grid = Grid::log;
  double t_min = 1e-3;
  double t_max = 1e3;
  int points = 64;
};

/// Scan outcome for one kernel direction: the reach is the furthest sampled
/// t (per sign, contiguous from zero) where the state is still a ground
/// state; unbounded_* reports persistence through the entire scan range.
struct PersistenceWitness {
  RVector direction;
  double reach_minus = 0.0;
  double reach_plus = 0.0;
  bool unbounded_minus = false;
  bool unbounded_plus = false;
};

struct UvVerdict {
  UvStatus status = UvStatus::undetermined;
  int support_size = 0;
  int odlyzko_bound = 0;
  int upsilon_rank = 0;
  std::vector<PersistenceWitness> witnesses;
};

/// Decides whether the ground state psi of op determines its potential
/// uniquely. Throws invalid_input when psi is not a ground state of op.
UvVerdict certify(const ManyBodyOperator& op, const WaveFunction& psi,
                  const TScanSpec& scan = {}, double ground_tol = 1e-8);

/// Builds a pure state with real nonnegative coefficients whose density is
/// rho; works on every point of the hypersimplex, boundary included.
WaveFunction state_from_density(std::shared_ptr<const FockBasis> basis, const RVector& rho);

/// min |a x - b| over x >= 0 (Lawson-Hanson active set).
RVector nonnegative_least_squares(const RMatrix& a, const RVector& b);

}  // namespace gdft
