// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "graphdft/operators.hpp"
#include "graphdft/repr.hpp"
#include "graphdft/spectra.hpp"

namespace gdft {

/// One sweep axis: a direction inside the sum-zero gauge plane, scanned over
/// [lo, hi] with `steps` evenly spaced samples (both endpoints included;
/// steps == 1 pins the axis at lo).
struct AxisSpec {
  RVector direction;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;
};

/// Grid of potentials base + sum_k coord_k * axes[k].direction. No axes
/// means the single cell at the base potential.
struct PotentialGridSpec {
  RVector base;
  std::vector<AxisSpec> axes;
};

/// Classification record for one grid potential. With a degenerate ground
/// level the density belongs to the phase-fixed first eigenvector, which is
/// one arbitrary member of the level; the degeneracy count is the warning.
struct AtlasCell {
  std::vector<double> coords;
  Potential v;
  double ground_energy = 0.0;
  int degeneracy = 0;
  double gap = 0.0;
  UvStatus uv_status = UvStatus::undetermined;
  Density density;
};

/// Evaluates every grid potential on top of the potential-free operator:
/// ground level, degeneracy, spectral gap, the uv certificate of the first
/// ground state, and its density. Cells come back in row-major order with
/// the first axis slowest. Work is split over `jobs` threads (jobs <= 0
/// picks the default); the output ordering does not depend on jobs.
std::vector<AtlasCell> sweep(const PotentialGridSpec& spec,
                             const ManyBodyOperator& free_op,
                             const TScanSpec& scan = {}, int jobs = 0,
                             double degeneracy_tol = 1e-8);

/// Projected density point of one cell, for external plotting.
struct ImagePoint {
  RVector coords;
  int degeneracy = 0;
  UvStatus uv_status = UvStatus::undetermined;
};

/// coords = projector * density per cell. Projector rows must be orthonormal
/// within 1e-10.
std::vector<ImagePoint> density_image(const std::vector<AtlasCell>& cells,
                                      const RMatrix& projector);

/// Densities reachable from a ground level: `samples` random unit vectors of
/// the level plus, for every pair of canonical eigenstates, a grid of
/// two-point ensemble mixtures (so the canonical densities themselves are
/// included as the grid endpoints). Degeneracy 1 returns the one density.
std::vector<Density> degenerate_manifold_density_hull(const GroundManifold& gm,
                                                      int samples,
                                                      std::uint64_t seed = 0);

}  // namespace gdft
