// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/spectra.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace gdft {

Spectrum eigendecompose(const ManyBodyOperator& op) {
  auto sys = hermitian_eigen(op.mat);
  for (Eigen::Index k = 0; k < sys.vectors.cols(); ++k) {
    Vector col = sys.vectors.col(k);
    fix_phase(col);
    sys.vectors.col(k) = col;
  }

  const double scale = std::max(1.0, op.mat.norm());
  const double residual =
      (op.mat * sys.vectors -
       sys.vectors * sys.values.asDiagonal().toDenseMatrix().cast<cx>()).norm();
  if (residual > 1e-9 * scale) {
    std::ostringstream msg;
    msg << "eigendecompose: eigenpair residual " << residual << " exceeds tolerance";
    throw numerical_error(msg.str());
  }
  return Spectrum{op.basis, std::move(sys.values), std::move(sys.vectors)};
}

GroundManifold ground_manifold(const ManyBodyOperator& op, double degeneracy_tol) {
  const Spectrum spec = eigendecompose(op);
  const Eigen::Index l = spec.eigenvalues.size();

  GroundManifold gm;
  gm.energy = spec.eigenvalues(0);
  const double window = degeneracy_tol * std::max(1.0, std::abs(gm.energy));

  Eigen::Index count = 1;
  while (count < l && spec.eigenvalues(count) - gm.energy <= window) ++count;
  gm.degeneracy = static_cast<int>(count);
  gm.gap = count < l ? spec.eigenvalues(count) - gm.energy
                     : std::numeric_limits<double>::infinity();
  gm.ambiguous = gm.gap < 10.0 * window;
  for (Eigen::Index k = 0; k < count; ++k) {
    gm.states.push_back(make_state(op.basis, spec.vectors.col(k)));
  }
  return gm;
}

Density density_of(const WaveFunction& psi) {
  const FockBasis& basis = *psi.basis;
  RVector rho = RVector::Zero(basis.m());
  for (Eigen::Index r = 0; r < psi.coeff.size(); ++r) {
    const double weight = std::norm(psi.coeff(r));
    if (weight == 0.0) continue;
    for (int v : vertices_of(basis.index(static_cast<int>(r)))) rho(v) += weight;
  }
  return Density{std::move(rho)};
}

Density density_of_ensemble(const EnsembleState& ensemble) {
  if (ensemble.weights.size() != ensemble.states.size() || ensemble.states.empty()) {
    throw invalid_input("density_of_ensemble: weights and states must pair up");
  }
  double total = 0.0;
  for (double w : ensemble.weights) {
    if (w < -1e-12) throw invalid_input("density_of_ensemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw invalid_input("density_of_ensemble: weights must sum to one");
  }
  const FockBasis* basis = ensemble.states.front().basis.get();
  RVector rho = RVector::Zero(basis->m());
  for (size_t k = 0; k < ensemble.states.size(); ++k) {
    if (ensemble.states[k].basis.get() != basis &&
        (ensemble.states[k].basis->m() != basis->m() ||
         ensemble.states[k].basis->n() != basis->n())) {
      throw invalid_input("density_of_ensemble: states live on different bases");
    }
    rho += ensemble.weights[k] * density_of(ensemble.states[k]).rho;
  }
  return Density{std::move(rho)};
}

}  // namespace gdft
