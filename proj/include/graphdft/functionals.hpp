// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>

#include "graphdft/fock.hpp"
#include "graphdft/operators.hpp"
#include "graphdft/spectra.hpp"

namespace gdft {

/// Bottom eigenvalue of a many-body operator.
double ground_energy(const ManyBodyOperator& op);

struct LiebOptions {
  int max_iterations = 10000;
  /// Stop when the density sits this close to the hull of ground densities.
  double gradient_tol = 1e-10;
  /// Stop when the ascent step shrinks below this.
  double step_tol = 1e-9;
  /// Random states drawn from a degenerate ground level when fitting the hull.
  int manifold_samples = 128;
  std::uint64_t seed = 0;
};

/// Result of maximizing E(v) - v . rho over gauge-fixed potentials. value is
/// the best (largest) evaluation seen, so it is always a valid lower bound on
/// the functional; certificate_gap is the distance from rho to the sampled
/// ground-density hull at the maximizer (zero means the value is exact).
struct LiebEvaluation {
  double value = 0.0;
  RVector maximizer;
  int iterations = 0;
  double certificate_gap = 0.0;
};

/// Ensemble constrained-search functional via its dual characterization.
/// free_op is the potential-free Hamiltonian. rho must lie strictly inside
/// the hypersimplex; on the boundary the maximizing potential runs away to
/// infinity and the evaluation is refused.
LiebEvaluation lieb_f(const ManyBodyOperator& free_op, const RVector& rho,
                      const LiebOptions& options = {});

struct PureOptions {
  int restarts = 32;
  int max_iterations = 2000;
  double residual_tol = 1e-7;
  std::uint64_t seed = 0;
};

struct PureEvaluation {
  double value = 0.0;
  WaveFunction minimizer;
  double constraint_residual = 0.0;
  int restarts_used = 0;
  bool converged = false;
};

/// Pure-state constrained search: minimizes <psi, free_op psi> over
/// normalized states with density rho. Defined on the whole hypersimplex,
/// boundary included. Quadratic-penalty descent with an exact density repair
/// at the end; the reported value is an upper bound on the true minimum.
PureEvaluation pure_f(const ManyBodyOperator& free_op, const RVector& rho,
                      const PureOptions& options = {});

/// Classification of a two-particle triangle density: the central disc of
/// radius 1/sqrt(6) around the uniform density, or one of the three spikes
/// reaching into the corners (spike k has vertex k+1 depleted in the
/// 1-2-3 labeling order (1,0,1), (0,1,1), (1,1,0)).
enum class TriangleRegion { central, spike1, spike2, spike3 };

TriangleRegion triangle_region(const RVector& rho);

/// Closed-form pure-state functional for two particles on the triangle.
double triangle_f_analytic(const RVector& rho);

struct FunctionalMinimum {
  RVector rho;
  double functional_value = 0.0;
  double energy = 0.0;
};

/// Minimizes functional(rho) + v . rho over the hypersimplex of the basis:
/// the variational route to the ground energy that never touches the
/// many-body spectrum. Multistart projected descent with a Newton polish.
FunctionalMinimum minimize_energy_via_functional(
    const std::function<double(const RVector&)>& functional,
    std::shared_ptr<const FockBasis> basis, const RVector& v, int restarts = 8,
    std::uint64_t seed = 0);

/// 1-norm radius within which the maximizer of the dual problem for rho is
/// guaranteed to lie (strictly interior densities only).
double potential_ball_radius(const ManyBodyOperator& free_op, const RVector& rho);

}  // namespace gdft
