// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/atlas.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace gdft {

std::vector<AtlasCell> sweep(const PotentialGridSpec& spec,
                             const ManyBodyOperator& free_op, const TScanSpec& scan,
                             int jobs, double degeneracy_tol) {
  if (!free_op.basis) throw invalid_input("sweep: operator has no basis");
  const int m = free_op.basis->m();
  if (spec.base.size() != m)
    throw invalid_input("sweep: base potential has wrong length");
  long long total = 1;
  for (const auto& axis : spec.axes) {
    if (axis.direction.size() != m)
      throw invalid_input("sweep: axis direction has wrong length");
    if (std::abs(axis.direction.sum()) > 1e-9)
      throw invalid_input("sweep: axis direction must lie in the sum-zero gauge plane");
    if (axis.steps < 1) throw invalid_input("sweep: axis needs at least one step");
    if (!(axis.lo <= axis.hi)) throw invalid_input("sweep: axis range is inverted");
    total *= axis.steps;
    if (total > 4000000) throw invalid_input("sweep: grid has too many cells");
  }

  const int axes = static_cast<int>(spec.axes.size());
  std::vector<AtlasCell> cells(static_cast<size_t>(total));
  parallel_for(static_cast<int>(total), jobs <= 0 ? default_jobs() : jobs,
               [&](int cell_index) {
                 std::vector<double> coords(static_cast<size_t>(axes));
                 int rem = cell_index;
                 for (int a = axes - 1; a >= 0; --a) {
                   const auto& axis = spec.axes[static_cast<size_t>(a)];
                   const int i = rem % axis.steps;
                   rem /= axis.steps;
                   coords[static_cast<size_t>(a)] =
                       axis.steps == 1
                           ? axis.lo
                           : axis.lo + i * (axis.hi - axis.lo) / (axis.steps - 1);
                 }
                 RVector v = spec.base;
                 for (int a = 0; a < axes; ++a)
                   v += coords[static_cast<size_t>(a)] *
                        spec.axes[static_cast<size_t>(a)].direction;

                 const ManyBodyOperator op = add_potential(free_op, v);
                 const GroundManifold gm = ground_manifold(op, degeneracy_tol);
                 AtlasCell& cell = cells[static_cast<size_t>(cell_index)];
                 cell.coords = std::move(coords);
                 cell.v = Potential{v};
                 cell.ground_energy = gm.energy;
                 cell.degeneracy = gm.degeneracy;
                 cell.gap = gm.gap;
                 cell.density = density_of(gm.states[0]);
                 cell.uv_status = certify(op, gm.states[0], scan, degeneracy_tol).status;
               });
  return cells;
}

std::vector<ImagePoint> density_image(const std::vector<AtlasCell>& cells,
                                      const RMatrix& projector) {
  std::vector<ImagePoint> out;
  if (cells.empty()) return out;
  const Eigen::Index m = cells.front().density.rho.size();
  if (projector.cols() != m)
    throw invalid_input("density_image: projector has wrong column count");
  if (projector.rows() < 1 || projector.rows() > m)
    throw invalid_input("density_image: projector needs between 1 and m rows");
  const RMatrix gram = projector * projector.transpose();
  if ((gram - RMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-10)
    throw invalid_input("density_image: projector rows must be orthonormal");
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    ImagePoint point;
    point.coords = projector * cell.density.rho;
    point.degeneracy = cell.degeneracy;
    point.uv_status = cell.uv_status;
    out.push_back(std::move(point));
  }
  return out;
}

std::vector<Density> degenerate_manifold_density_hull(const GroundManifold& gm,
                                                      int samples,
                                                      std::uint64_t seed) {
  if (gm.states.empty())
    throw invalid_input("degenerate_manifold_density_hull: empty ground manifold");
  if (samples < 0)
    throw invalid_input("degenerate_manifold_density_hull: negative sample count");
  if (gm.degeneracy == 1) return {density_of(gm.states[0])};

  const auto basis = gm.states[0].basis;
  std::vector<Density> out;
  const int mixture_grid = 33;
  const int pairs = gm.degeneracy * (gm.degeneracy - 1) / 2;
  out.reserve(static_cast<size_t>(samples + pairs * mixture_grid));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    Vector mix = Vector::Zero(gm.states[0].coeff.size());
    for (const auto& state : gm.states) mix += cx(gauss(rng), gauss(rng)) * state.coeff;
    const double norm = mix.norm();
    if (norm <= 1e-12) continue;
    mix /= norm;
    out.push_back(density_of(WaveFunction{basis, std::move(mix)}));
  }

  std::vector<RVector> canonical;
  canonical.reserve(static_cast<size_t>(gm.degeneracy));
  for (const auto& state : gm.states) canonical.push_back(density_of(state).rho);
  for (size_t i = 0; i < canonical.size(); ++i) {
    for (size_t j = i + 1; j < canonical.size(); ++j) {
      for (int g = 0; g < mixture_grid; ++g) {
        const double lambda = static_cast<double>(g) / (mixture_grid - 1);
        out.push_back(Density{(1.0 - lambda) * canonical[i] + lambda * canonical[j]});
      }
    }
  }
  return out;
}

}  // namespace gdft
