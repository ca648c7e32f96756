// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "graphdft/jacobi.hpp"
#include "graphdft/repr.hpp"

namespace gdft {

namespace {

// Orthonormal basis of the sum-zero hyperplane: the trailing m-1 columns of
// a QR factorization whose leading column spans the constant vector.
RMatrix plane_basis(int m) {
  RMatrix seed = RMatrix::Zero(m, m);
  seed.col(0).setOnes();
  for (int j = 1; j < m; ++j) seed(j - 1, j) = 1.0;
  Eigen::HouseholderQR<RMatrix> qr(seed);
  RMatrix q = qr.householderQ();
  return q.rightCols(m - 1);
}

RVector project_plane(const RVector& x) {
  return (x.array() - x.mean()).matrix();
}

// Euclidean projection onto the closed 1-norm ball of radius r.
RVector project_l1_ball(const RVector& x, double r) {
  if (x.cwiseAbs().sum() <= r) return x;
  std::vector<double> mag(static_cast<size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) mag[static_cast<size_t>(i)] = std::abs(x(i));
  std::sort(mag.begin(), mag.end(), std::greater<double>());
  double cum = 0.0;
  double threshold = 0.0;
  for (size_t k = 0; k < mag.size(); ++k) {
    cum += mag[k];
    const double t = (cum - r) / static_cast<double>(k + 1);
    if (k + 1 == mag.size() || t >= mag[k + 1]) {
      threshold = t;
      break;
    }
  }
  RVector out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double shrunk = std::max(std::abs(x(i)) - threshold, 0.0);
    out(i) = x(i) >= 0.0 ? shrunk : -shrunk;
  }
  return out;
}

// Dykstra projection onto (sum-zero plane) intersect (1-norm ball), ending
// with a plane step so the gauge condition holds exactly.
RVector project_ball_plane(const RVector& x, double r) {
  RVector quick = project_plane(x);
  if (quick.cwiseAbs().sum() <= r) return quick;
  RVector y = x;
  RVector correction = RVector::Zero(x.size());
  for (int round = 0; round < 128; ++round) {
    const RVector u = project_plane(y);
    const RVector z = project_l1_ball(u + correction, r);
    correction = u + correction - z;
    y = z;
  }
  return project_plane(y);
}

struct HullFit {
  RVector fit;
  double gap = 0.0;
};

// Distance from rho to the convex hull of the candidate densities, through a
// nonnegative least-squares fit with a stiff normalization row.
HullFit fit_convex_hull(const std::vector<RVector>& candidates, const RVector& rho) {
  const int m = static_cast<int>(rho.size());
  const int k = static_cast<int>(candidates.size());
  const double kappa = 64.0;
  RMatrix a(m + 1, k);
  for (int c = 0; c < k; ++c) {
    a.col(c).head(m) = candidates[static_cast<size_t>(c)];
    a(m, c) = kappa;
  }
  RVector b(m + 1);
  b.head(m) = rho;
  b(m) = kappa;
  RVector weights = nonnegative_least_squares(a, b);
  const double total = weights.sum();
  HullFit out;
  if (total <= 1e-12) {
    out.fit = candidates.front();
  } else {
    weights /= total;
    out.fit = RVector::Zero(m);
    for (int c = 0; c < k; ++c) out.fit += weights(c) * candidates[static_cast<size_t>(c)];
  }
  out.gap = (out.fit - rho).norm();
  return out;
}

struct DualPoint {
  double energy = 0.0;
  double value = 0.0;
  double gap = 0.0;
  RVector fit;
  int degeneracy = 0;
};

// Evaluates E(v) - v . rho together with the distance from rho to the hull
// of ground densities at v. A degenerate level is sampled by the canonical
// eigenstates, their projector average, and random complex mixtures.
DualPoint evaluate_dual(const ManyBodyOperator& free_op, const RVector& v,
                        const RVector& rho, int manifold_samples,
                        std::mt19937_64& rng) {
  const auto gm = ground_manifold(add_potential(free_op, v));
  DualPoint out;
  out.energy = gm.energy;
  out.value = gm.energy - v.dot(rho);
  out.degeneracy = gm.degeneracy;
  if (gm.degeneracy == 1) {
    out.fit = density_of(gm.states[0]).rho;
    out.gap = (out.fit - rho).norm();
    return out;
  }
  std::vector<RVector> candidates;
  candidates.reserve(static_cast<size_t>(gm.degeneracy + 1 + manifold_samples));
  RVector average = RVector::Zero(rho.size());
  for (const auto& state : gm.states) {
    candidates.push_back(density_of(state).rho);
    average += candidates.back();
  }
  candidates.push_back(average / gm.degeneracy);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < manifold_samples; ++s) {
    Vector mix = Vector::Zero(gm.states[0].coeff.size());
    for (const auto& state : gm.states) mix += cx(gauss(rng), gauss(rng)) * state.coeff;
    const double norm = mix.norm();
    if (norm <= 1e-12) continue;
    mix /= norm;
    candidates.push_back(density_of(WaveFunction{free_op.basis, mix}).rho);
  }
  const HullFit fit = fit_convex_hull(candidates, rho);
  out.fit = fit.fit;
  out.gap = fit.gap;
  return out;
}

std::optional<RVector> unique_ground_density(const ManyBodyOperator& free_op,
                                             const RVector& v) {
  const auto gm = ground_manifold(add_potential(free_op, v));
  if (gm.degeneracy != 1 || gm.ambiguous) return std::nullopt;
  return density_of(gm.states[0]).rho;
}

// Newton refinement of the dual maximizer: solves density(v) = rho in plane
// coordinates as long as the ground state stays unique. Returns the refined
// potential, or nothing when the solve never moved.
std::optional<RVector> polish_maximizer(const ManyBodyOperator& free_op,
                                        const RVector& rho,
                                        const RMatrix& plane, const RVector& v0) {
  const Eigen::Index k = plane.cols();
  const auto residual = [&](const RVector& y) -> std::optional<RVector> {
    const auto d = unique_ground_density(free_op, plane * y);
    if (!d) return std::nullopt;
    return RVector(plane.transpose() * (*d - rho));
  };
  RVector y = plane.transpose() * v0;
  auto r = residual(y);
  if (!r) return std::nullopt;
  double damping = 1e-12;
  bool moved = false;
  for (int iter = 0; iter < 60 && r->norm() > 1e-12; ++iter) {
    const double h = 1e-6 * std::max(1.0, (plane * y).cwiseAbs().maxCoeff());
    RMatrix jac(k, k);
    bool have_jacobian = true;
    for (Eigen::Index j = 0; j < k; ++j) {
      RVector probe = y;
      probe(j) += h;
      const auto rp = residual(probe);
      if (!rp) {
        have_jacobian = false;
        break;
      }
      jac.col(j) = (*rp - *r) / h;
    }
    if (!have_jacobian) break;
    const RMatrix gram = jac.transpose() * jac;
    const RVector rhs = -jac.transpose() * *r;
    bool accepted = false;
    for (int retry = 0; retry < 8; ++retry) {
      RMatrix damped = gram;
      damped.diagonal().array() += damping;
      const RVector delta = damped.ldlt().solve(rhs);
      const RVector candidate = y + delta;
      const auto rc = residual(candidate);
      if (rc && rc->norm() < r->norm()) {
        y = candidate;
        r = rc;
        damping = std::max(damping / 4.0, 1e-14);
        accepted = true;
        moved = true;
        break;
      }
      damping *= 10.0;
    }
    if (!accepted) break;
  }
  if (!moved) return std::nullopt;
  return RVector(plane * y);
}

RMatrix occupancy_matrix(const FockBasis& basis) {
  RMatrix a = RMatrix::Zero(basis.m(), basis.size());
  for (int r = 0; r < basis.size(); ++r)
    for (int vtx : vertices_of(basis.index(r))) a(vtx, r) = 1.0;
  return a;
}

RVector state_density(const RMatrix& occupancy, const Vector& psi) {
  return occupancy * psi.cwiseAbs2();
}

double rayleigh(const Matrix& h, const Vector& psi) {
  return std::real(psi.dot(h * psi));
}

// One quadratic-penalty descent sweep at fixed multipliers and stiffness:
// Riemannian gradient steps on the unit sphere with a backtracking line
// search and a normalization retraction.
void descend(const Matrix& h, const RMatrix& occupancy, const FockBasis& basis,
             const RVector& rho, const RVector& multipliers, double mu,
             int max_iter, Vector& psi) {
  const auto merit = [&](const Vector& s, const RVector& d) {
    return rayleigh(h, s) + multipliers.dot(d) + mu * d.squaredNorm();
  };
  RVector d = state_density(occupancy, psi) - rho;
  double value = merit(psi, d);
  double eta = 0.1;
  for (int iter = 0; iter < max_iter; ++iter) {
    const RVector weights = multipliers + 2.0 * mu * d;
    const RVector profile = occupation_profile(basis, weights);
    Vector grad = h * psi + profile.cast<cx>().cwiseProduct(psi);
    grad -= psi.dot(grad) * psi;
    const double gnorm = grad.norm();
    if (gnorm <= 1e-10 * std::max(1.0, std::abs(value))) break;
    bool accepted = false;
    double alpha = eta;
    for (int probe = 0; probe < 30; ++probe) {
      Vector candidate = psi - alpha * grad;
      candidate /= candidate.norm();
      const RVector dc = state_density(occupancy, candidate) - rho;
      const double vc = merit(candidate, dc);
      if (vc <= value - 1e-4 * alpha * gnorm * gnorm) {
        psi = candidate;
        d = dc;
        value = vc;
        eta = probe == 0 ? alpha * 1.5 : alpha;
        accepted = true;
        break;
      }
      alpha *= 0.5;
      if (alpha < 1e-14) break;
    }
    if (!accepted) break;
  }
}

// Dykstra projection of a weight vector onto {p >= 0, occupancy p = rho}.
// Only the orthant needs a correction term; the affine set is exact.
RVector project_probabilities(const RMatrix& occupancy,
                              const Eigen::LDLT<RMatrix>& gram,
                              const RVector& rho, RVector p) {
  RVector correction = RVector::Zero(p.size());
  RVector x = std::move(p);
  for (int round = 0; round < 600; ++round) {
    const RVector affine = x - occupancy.transpose() * gram.solve(occupancy * x - rho);
    const RVector shifted = affine + correction;
    const RVector clipped = shifted.cwiseMax(0.0);
    correction = shifted - clipped;
    x = clipped;
  }
  const RVector affine = x - occupancy.transpose() * gram.solve(occupancy * x - rho);
  return affine.cwiseMax(0.0);
}

// Euclidean projection onto {0 <= rho <= 1, sum rho = n} by bisection on the
// shift of the clamped coordinates.
RVector project_hypersimplex(const RVector& y, int n) {
  double lo = y.minCoeff() - 1.0;
  double hi = y.maxCoeff();
  for (int iter = 0; iter < 200; ++iter) {
    const double tau = 0.5 * (lo + hi);
    const double total = (y.array() - tau).max(0.0).min(1.0).sum();
    if (total > n) {
      lo = tau;
    } else {
      hi = tau;
    }
  }
  const double tau = 0.5 * (lo + hi);
  return ((y.array() - tau).max(0.0).min(1.0)).matrix();
}

RVector checked_triangle_density(const RVector& rho, const char* where) {
  if (rho.size() != 3)
    throw invalid_input(std::string(where) + ": need a 3-vertex density");
  if (rho.minCoeff() < -1e-9 || rho.maxCoeff() > 1.0 + 1e-9)
    throw invalid_input(std::string(where) + ": density outside [0, 1]");
  // Loose enough to accept densities quoted to a few decimal places.
  if (std::abs(rho.sum() - 2.0) > 1e-3)
    throw invalid_input(std::string(where) + ": density must sum to 2");
  return rho.cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace

double ground_energy(const ManyBodyOperator& op) {
  if (op.mat.rows() == 0) throw invalid_input("ground_energy: empty operator");
  return hermitian_eigen(op.mat).values(0);
}

LiebEvaluation lieb_f(const ManyBodyOperator& free_op, const RVector& rho,
                      const LiebOptions& options) {
  if (!free_op.basis) throw invalid_input("lieb_f: operator has no basis");
  const int m = free_op.basis->m();
  const int n = free_op.basis->n();
  if (rho.size() != m) throw invalid_input("lieb_f: density has wrong length");
  if (std::abs(rho.sum() - n) > 1e-8)
    throw invalid_input("lieb_f: density does not sum to the particle number");
  if (rho.minCoeff() <= 1e-12 || rho.maxCoeff() >= 1.0 - 1e-12)
    throw invalid_input(
        "lieb_f: density touches the hypersimplex boundary, where the dual "
        "maximizer runs away to infinity");

  const double radius = potential_ball_radius(free_op, rho);
  const RMatrix plane = plane_basis(m);
  std::mt19937_64 rng(options.seed);
  const auto evaluate = [&](const RVector& v) {
    return evaluate_dual(free_op, v, rho, options.manifold_samples, rng);
  };

  RVector v = RVector::Zero(m);
  DualPoint current = evaluate(v);
  RVector best_v = v;
  DualPoint best = current;
  int iterations = 0;
  double step = 1.0;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    iterations = iter;
    if (current.gap <= options.gradient_tol) break;
    const RVector ascent = current.fit - rho;
    double alpha = step;
    bool improved = false;
    for (int probe = 0; probe < 60 && alpha >= options.step_tol; ++probe) {
      const RVector candidate_v = project_ball_plane(v + alpha * ascent, radius);
      const DualPoint candidate = evaluate(candidate_v);
      if (candidate.value >
          current.value + 1e-15 * std::max(1.0, std::abs(current.value))) {
        v = candidate_v;
        current = candidate;
        step = probe == 0 ? alpha * 2.0 : alpha;
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (current.value > best.value) {
      best_v = v;
      best = current;
    }
    if (!improved) break;
  }

  if (best.gap > options.gradient_tol) {
    const auto polished = polish_maximizer(free_op, rho, plane, best_v);
    if (polished) {
      const DualPoint refined = evaluate(*polished);
      const bool higher = refined.value > best.value;
      const bool tighter =
          refined.gap < best.gap &&
          refined.value >= best.value - 1e-12 * std::max(1.0, std::abs(best.value));
      if (higher || tighter) {
        best_v = *polished;
        best = refined;
      }
    }
  }

  LiebEvaluation out;
  out.value = best.value;
  out.maximizer = best_v;
  out.iterations = iterations;
  out.certificate_gap = best.gap;
  return out;
}

PureEvaluation pure_f(const ManyBodyOperator& free_op, const RVector& rho,
                      const PureOptions& options) {
  if (!free_op.basis) throw invalid_input("pure_f: operator has no basis");
  const auto& basis = *free_op.basis;
  const int m = basis.m();
  if (rho.size() != m) throw invalid_input("pure_f: density has wrong length");
  if (options.restarts < 1) throw invalid_input("pure_f: need at least one restart");
  // Validates hypersimplex membership and provides a start with the exact
  // target density, so the search is feasible from the first step.
  const WaveFunction seed_state = state_from_density(free_op.basis, rho);

  const RMatrix occupancy = occupancy_matrix(basis);
  const Eigen::LDLT<RMatrix> gram(RMatrix(occupancy * occupancy.transpose()));
  if (gram.info() != Eigen::Success)
    throw numerical_error("pure_f: occupancy normal matrix is not factorizable");

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const int stage_iters = std::max(options.max_iterations / 4, 50);
  const int round_iters = std::max(options.max_iterations / 8, 25);
  const double noise = 0.05 / std::sqrt(static_cast<double>(basis.size()));

  bool any_converged = false;
  bool have_best = false;
  double best_value = std::numeric_limits<double>::infinity();
  double best_residual = std::numeric_limits<double>::infinity();
  Vector best_psi;

  for (int rs = 0; rs < options.restarts; ++rs) {
    Vector psi = seed_state.coeff;
    if (rs > 0) {
      for (Eigen::Index i = 0; i < psi.size(); ++i) {
        psi(i) *= std::polar(1.0, angle(rng));
        psi(i) += noise * cx(gauss(rng), gauss(rng));
      }
      psi /= psi.norm();
    }
    RVector multipliers = RVector::Zero(m);
    for (const double mu : {10.0, 100.0, 1000.0, 10000.0})
      descend(free_op.mat, occupancy, basis, rho, multipliers, mu, stage_iters, psi);
    const double mu = 10000.0;
    for (int round = 0; round < 30; ++round) {
      const RVector d = state_density(occupancy, psi) - rho;
      if (d.cwiseAbs().maxCoeff() <= options.residual_tol / 4.0) break;
      multipliers += 2.0 * mu * d;
      descend(free_op.mat, occupancy, basis, rho, multipliers, mu, round_iters, psi);
    }

    // Exact repair: keep the phases, project the weights onto the density
    // fiber, and measure what actually came out.
    const RVector p = project_probabilities(occupancy, gram, rho, psi.cwiseAbs2());
    Vector repaired(psi.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
      const double mag = std::abs(psi(i));
      const cx phase = mag > 1e-300 ? psi(i) / mag : cx(1.0, 0.0);
      repaired(i) = phase * std::sqrt(std::max(p(i), 0.0));
    }
    const double norm = repaired.norm();
    if (norm <= 1e-12) continue;
    repaired /= norm;
    const double residual =
        (state_density(occupancy, repaired) - rho).cwiseAbs().maxCoeff();
    const double value = rayleigh(free_op.mat, repaired);

    const bool eligible = residual <= options.residual_tol;
    bool take = false;
    if (eligible) {
      take = !any_converged || value < best_value;
    } else {
      take = !any_converged && (!have_best || residual < best_residual);
    }
    if (take) {
      best_value = value;
      best_residual = residual;
      best_psi = repaired;
      have_best = true;
    }
    if (eligible) any_converged = true;
  }

  if (!have_best) throw numerical_error("pure_f: every restart collapsed");
  PureEvaluation out;
  out.value = best_value;
  out.minimizer = make_state(free_op.basis, best_psi);
  out.constraint_residual = best_residual;
  out.restarts_used = options.restarts;
  out.converged = any_converged;
  return out;
}

TriangleRegion triangle_region(const RVector& rho) {
  const RVector r = checked_triangle_density(rho, "triangle_region");
  const RVector centered = (r.array() - 2.0 / 3.0).matrix();
  if (centered.norm() <= 1.0 / std::sqrt(6.0) + 1e-12) return TriangleRegion::central;
  int depleted = 0;
  for (int i = 1; i < 3; ++i)
    if (r(i) < r(depleted)) depleted = i;
  switch (depleted) {
    case 0:
      return TriangleRegion::spike2;
    case 1:
      return TriangleRegion::spike1;
    default:
      return TriangleRegion::spike3;
  }
}

double triangle_f_analytic(const RVector& rho) {
  const RVector r = checked_triangle_density(rho, "triangle_f_analytic");
  if (triangle_region(r) == TriangleRegion::central) return 3.0;
  const double u1 = std::max(1.0 - r(0), 0.0);
  const double u2 = std::max(1.0 - r(1), 0.0);
  const double u3 = std::max(1.0 - r(2), 0.0);
  const double a1 = std::sqrt(u1 * u3);
  const double a2 = std::sqrt(u1 * u2);
  const double a3 = std::sqrt(u2 * u3);
  double positive = 0.0;
  switch (triangle_region(r)) {
    case TriangleRegion::spike1:
      positive = a1;
      break;
    case TriangleRegion::spike2:
      positive = a3;
      break;
    default:
      positive = a2;
      break;
  }
  return 4.0 + 2.0 * (2.0 * positive - a1 - a2 - a3);
}

FunctionalMinimum minimize_energy_via_functional(
    const std::function<double(const RVector&)>& functional,
    std::shared_ptr<const FockBasis> basis, const RVector& v, int restarts,
    std::uint64_t seed) {
  if (!basis) throw invalid_input("minimize_energy_via_functional: null basis");
  const int m = basis->m();
  const int n = basis->n();
  if (v.size() != m)
    throw invalid_input("minimize_energy_via_functional: potential has wrong length");
  if (restarts < 1)
    throw invalid_input("minimize_energy_via_functional: need at least one start");

  const RMatrix plane = plane_basis(m);
  const Eigen::Index k = plane.cols();
  const auto objective = [&](const RVector& rho) { return functional(rho) + v.dot(rho); };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  RVector best_rho;
  double best_f = std::numeric_limits<double>::infinity();

  for (int start = 0; start < restarts; ++start) {
    RVector rho;
    if (start == 0) {
      rho = RVector::Constant(m, static_cast<double>(n) / m);
    } else {
      RVector raw(m);
      for (int i = 0; i < m; ++i) raw(i) = unit(rng);
      rho = project_hypersimplex(raw, n);
    }
    double f = objective(rho);

    double eta = 0.25;
    for (int iter = 0; iter < 400; ++iter) {
      const double h = 1e-6;
      RVector grad(k);
      for (Eigen::Index j = 0; j < k; ++j) {
        const RVector plus = project_hypersimplex(rho + h * plane.col(j), n);
        const RVector minus = project_hypersimplex(rho - h * plane.col(j), n);
        grad(j) = (objective(plus) - objective(minus)) / (2.0 * h);
      }
      if (grad.norm() <= 1e-9) break;
      const RVector dir = -(plane * grad);
      bool accepted = false;
      double alpha = eta;
      for (int probe = 0; probe < 40; ++probe) {
        const RVector candidate = project_hypersimplex(rho + alpha * dir, n);
        const double fc = objective(candidate);
        if (fc <= f - 1e-4 * alpha * grad.squaredNorm()) {
          rho = candidate;
          f = fc;
          eta = probe == 0 ? alpha * 1.5 : alpha;
          accepted = true;
          break;
        }
        alpha *= 0.5;
        if (alpha < 1e-12) break;
      }
      if (!accepted) break;
    }

    // Newton polish in plane coordinates while safely interior; finite
    // difference probes must stay inside the box validation margin.
    double damping = 1e-10;
    for (int iter = 0; iter < 60; ++iter) {
      if (rho.minCoeff() <= 5e-4 || rho.maxCoeff() >= 1.0 - 5e-4) break;
      const double hg = 1e-6;
      RVector grad(k);
      for (Eigen::Index j = 0; j < k; ++j) {
        grad(j) = (objective(rho + hg * plane.col(j)) -
                   objective(rho - hg * plane.col(j))) /
                  (2.0 * hg);
      }
      if (grad.norm() <= 1e-10) break;
      const double hh = 1e-4;
      RMatrix hess(k, k);
      for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index l = 0; l <= j; ++l) {
          const RVector ej = plane.col(j);
          const RVector el = plane.col(l);
          const double val =
              (objective(rho + hh * ej + hh * el) - objective(rho + hh * ej - hh * el) -
               objective(rho - hh * ej + hh * el) + objective(rho - hh * ej - hh * el)) /
              (4.0 * hh * hh);
          hess(j, l) = val;
          hess(l, j) = val;
        }
      }
      bool accepted = false;
      for (int retry = 0; retry < 8; ++retry) {
        RMatrix damped = hess;
        damped.diagonal().array() += damping;
        const RVector delta = damped.ldlt().solve(-grad);
        const RVector candidate = rho + plane * delta;
        if (candidate.minCoeff() > 1e-6 && candidate.maxCoeff() < 1.0 - 1e-6) {
          const double fc = objective(candidate);
          if (fc < f) {
            rho = candidate;
            f = fc;
            damping = std::max(damping / 4.0, 1e-12);
            accepted = true;
            break;
          }
        }
        damping *= 8.0;
      }
      if (!accepted) break;
    }

    if (f < best_f) {
      best_f = f;
      best_rho = rho;
    }
  }

  FunctionalMinimum out;
  out.rho = best_rho;
  out.functional_value = functional(best_rho);
  out.energy = best_f;
  return out;
}

double potential_ball_radius(const ManyBodyOperator& free_op, const RVector& rho) {
  if (!free_op.basis)
    throw invalid_input("potential_ball_radius: operator has no basis");
  const int m = free_op.basis->m();
  const int n = free_op.basis->n();
  if (rho.size() != m)
    throw invalid_input("potential_ball_radius: density has wrong length");
  if (std::abs(rho.sum() - n) > 1e-8)
    throw invalid_input(
        "potential_ball_radius: density does not sum to the particle number");
  const double lo = rho.minCoeff();
  const double hi = rho.maxCoeff();
  if (lo <= 1e-12 || hi >= 1.0 - 1e-12)
    throw invalid_input("potential_ball_radius: density must be strictly interior");
  const EigenSystem spec = hermitian_eigen(free_op.mat);
  const double spectral_norm =
      std::max(std::abs(spec.values(0)), std::abs(spec.values(spec.values.size() - 1)));
  const double q0 = 1.0 / hi;
  const double c = std::max(3.0, (3.0 + q0) / (q0 - 1.0));
  return c * spectral_norm / lo;
}

}  // namespace gdft
