// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/repr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "graphdft/jacobi.hpp"
#include "graphdft/spectra.hpp"

namespace gdft {

namespace {

long long binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  unsigned long long out = 1;
  for (int i = 1; i <= k; ++i) {
    out = static_cast<unsigned long long>(
        static_cast<unsigned __int128>(out) * static_cast<unsigned long long>(m - k + i) /
        static_cast<unsigned long long>(i));
  }
  return static_cast<long long>(out);
}

// Reduced row echelon form in place; returns the pivot column per row.
std::vector<Eigen::Index> reduce(RMatrix& a, double pivot_tol) {
  const double scale = std::max(1.0, a.size() > 0 ? a.cwiseAbs().maxCoeff() : 0.0);
  const double threshold = pivot_tol * scale;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index best = row;
    for (Eigen::Index r = row + 1; r < a.rows(); ++r) {
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    }
    if (std::abs(a(best, col)) <= threshold) continue;
    a.row(row).swap(a.row(best));
    a.row(row) /= a(row, col);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != row && a(r, col) != 0.0) a.row(r) -= a(r, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void normalize_direction(RVector& u) {
  const double top = u.cwiseAbs().maxCoeff();
  u /= top;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (std::abs(u(i)) > 1e-12) {
      if (u(i) < 0.0) u = -u;
      break;
    }
  }
}

std::vector<double> scan_grid(const TScanSpec& scan) {
  if (scan.points < 1 || scan.t_max <= 0.0 ||
      (scan.grid == TScanSpec::Grid::log && (scan.t_min <= 0.0 || scan.t_min > scan.t_max))) {
    throw invalid_input("certify: malformed scan grid");
  }
  std::vector<double> ts;
  ts.reserve(static_cast<size_t>(scan.points));
  for (int k = 0; k < scan.points; ++k) {
    if (scan.grid == TScanSpec::Grid::log) {
      const double frac = scan.points == 1 ? 1.0 : static_cast<double>(k) / (scan.points - 1);
      ts.push_back(scan.t_min * std::pow(scan.t_max / scan.t_min, frac));
    } else {
      ts.push_back(scan.t_max * static_cast<double>(k + 1) / scan.points);
    }
  }
  return ts;
}


}  // namespace

int odlyzko_number(int m, int n) {
  if (n < 1 || n >= m || m > 63) throw invalid_input("odlyzko_number: need 1 <= n < m <= 63");
  long long g = 0;
  if (m == 2 * n) {
    // The two-anchor family that makes this case larger needs a third vertex
    // to exist; on two vertices the bound falls back to the one-anchor count.
    g = m > 2 ? 2 * binomial(m - 2, n - 1) : 1;
  } else if (m > 2 * n) {
    g = binomial(m - 1, n);
  } else {
    g = binomial(m - 1, n - 1);
  }
  if (g > std::numeric_limits<int>::max()) {
    throw invalid_input("odlyzko_number: count does not fit an int");
  }
  return static_cast<int>(g);
}

RVector nonnegative_least_squares(const RMatrix& a, const RVector& b) {
  const Eigen::Index cols = a.cols();
  RVector x = RVector::Zero(cols);
  std::vector<bool> active(static_cast<size_t>(cols), false);
  const double tol = 1e-12 * std::max(1.0, b.cwiseAbs().maxCoeff());

  for (int outer = 0; outer < 4 * static_cast<int>(cols) + 16; ++outer) {
    const RVector w = a.transpose() * (b - a * x);
    Eigen::Index best = -1;
    double best_w = tol;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (!active[static_cast<size_t>(j)] && w(j) > best_w) {
        best_w = w(j);
        best = j;
      }
    }
    if (best < 0) break;
    active[static_cast<size_t>(best)] = true;

    while (true) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (active[static_cast<size_t>(j)]) idx.push_back(j);
      }
      RMatrix sub(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (size_t k = 0; k < idx.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
      const RVector s = sub.colPivHouseholderQr().solve(b);
      double min_s = 1.0;
      for (Eigen::Index k = 0; k < s.size(); ++k) min_s = std::min(min_s, s(k));
      if (min_s > 0.0) {
        x.setZero();
        for (size_t k = 0; k < idx.size(); ++k) x(idx[k]) = s(static_cast<Eigen::Index>(k));
        break;
      }
      double step = 1.0;
      for (size_t k = 0; k < idx.size(); ++k) {
        const double sk = s(static_cast<Eigen::Index>(k));
        const double xk = x(idx[k]);
        if (sk <= 0.0 && xk - sk > 0.0) step = std::min(step, xk / (xk - sk));
      }
      for (size_t k = 0; k < idx.size(); ++k) {
        const double sk = s(static_cast<Eigen::Index>(k));
        x(idx[k]) += step * (sk - x(idx[k]));
        if (x(idx[k]) <= tol || sk <= 0.0) {
          if (x(idx[k]) <= tol) {
            x(idx[k]) = 0.0;
            active[static_cast<size_t>(idx[k])] = false;
          }
        }
      }
    }
  }
  return x;
}

std::vector<int> support(const WaveFunction& psi, double zero_tol) {
  std::vector<int> out;
  for (Eigen::Index r = 0; r < psi.coeff.size(); ++r) {
    if (std::abs(psi.coeff(r)) > zero_tol) out.push_back(static_cast<int>(r));
  }
  return out;
}

RMatrix upsilon_matrix(const WaveFunction& psi, double zero_tol) {
  const auto supp = support(psi, zero_tol);
  const FockBasis& basis = *psi.basis;
  RMatrix up = RMatrix::Zero(static_cast<Eigen::Index>(supp.size()), basis.m());
  for (size_t r = 0; r < supp.size(); ++r) {
    for (int v : vertices_of(basis.index(supp[r]))) up(static_cast<Eigen::Index>(r), v) = 1.0;
  }
  return up;
}

int matrix_rank(const RMatrix& a, double pivot_tol) {
  RMatrix work = a;
  return static_cast<int>(reduce(work, pivot_tol).size());
}

std::vector<RVector> kernel_basis(const RMatrix& a, double pivot_tol) {
  RMatrix work = a;
  const auto pivots = reduce(work, pivot_tol);
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (Eigen::Index c : pivots) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<RVector> kernel;
  for (Eigen::Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    RVector u = RVector::Zero(a.cols());
    u(free) = 1.0;
    for (size_t row = 0; row < pivots.size(); ++row) {
      u(pivots[row]) = -work(static_cast<Eigen::Index>(row), free);
    }
    normalize_direction(u);
    kernel.push_back(std::move(u));
  }
  return kernel;
}

std::vector<RVector> nonuv_subspace(const WaveFunction& psi, double zero_tol) {
  return kernel_basis(upsilon_matrix(psi, zero_tol));
}

std::string to_string(UvStatus status) {
  switch (status) {
    case UvStatus::certified_uv_by_count:
      return "certified_uv_by_count";
    case UvStatus::certified_uv_by_rank:
      return "certified_uv_by_rank";
    case UvStatus::non_uv_with_witness:
      return "non_uv_with_witness";
    case UvStatus::undetermined:
      return "undetermined";
  }
  throw invalid_input("to_string: unknown uv status");
}

UvVerdict certify(const ManyBodyOperator& op, const WaveFunction& psi, const TScanSpec& scan,
                  double ground_tol) {
  const FockBasis& basis = *op.basis;
  if (psi.basis->m() != basis.m() || psi.basis->n() != basis.n()) {
    throw invalid_input("certify: state and operator use different bases");
  }
  const double energy = std::real(psi.coeff.dot(op.mat * psi.coeff));
  const double op_scale = std::max(1.0, op.mat.norm());
  if ((op.mat * psi.coeff - energy * psi.coeff).norm() > ground_tol * op_scale) {
    throw invalid_input("certify: state is not an eigenstate of the operator");
  }
  const double e0 = hermitian_eigen(op.mat).values(0);
  if (energy > e0 + ground_tol * std::max(1.0, std::abs(e0))) {
    throw invalid_input("certify: state is an excited eigenstate, not a ground state");
  }

  UvVerdict verdict;
  const auto supp = support(psi);
  verdict.support_size = static_cast<int>(supp.size());
  verdict.odlyzko_bound = odlyzko_number(basis.m(), basis.n());
  const RMatrix up = upsilon_matrix(psi);
  verdict.upsilon_rank = matrix_rank(up);

  if (verdict.support_size > verdict.odlyzko_bound) {
    verdict.status = UvStatus::certified_uv_by_count;
    return verdict;
  }
  if (verdict.upsilon_rank == basis.m()) {
    verdict.status = UvStatus::certified_uv_by_rank;
    return verdict;
  }

  const auto grid = scan_grid(scan);
  const double window = ground_tol * std::max(1.0, std::abs(energy));
  bool any_reach = false;
  for (const auto& u : kernel_basis(up)) {
    const RVector profile = occupation_profile(basis, u);
    const double annihilation = (profile.cwiseProduct(psi.coeff.cwiseAbs2())).cwiseAbs().sum();
    if ((profile.cast<cx>().cwiseProduct(psi.coeff)).norm() > 1e-10 ||
        annihilation > 1e-10) {
      std::ostringstream msg;
      msg << "certify: kernel direction fails to annihilate the state";
      throw numerical_error(msg.str());
    }

    PersistenceWitness w;
    w.direction = u;
    for (int sign : {+1, -1}) {
      double reach = 0.0;
      bool full = true;
      for (double t : grid) {
        Matrix shifted = op.mat;
        shifted.diagonal() += (sign * t) * profile.cast<cx>();
        const double ground = hermitian_eigen(shifted).values(0);
        if (ground < energy - window) {
          full = false;
          break;
        }
        reach = sign * t;
      }
      if (sign > 0) {
        w.reach_plus = reach;
        w.unbounded_plus = full;
      } else {
        w.reach_minus = reach;
        w.unbounded_minus = full;
      }
    }
    if (w.reach_plus > 0.0 || w.reach_minus < 0.0) any_reach = true;
    verdict.witnesses.push_back(std::move(w));
  }
  verdict.status = any_reach ? UvStatus::non_uv_with_witness : UvStatus::undetermined;
  return verdict;
}

WaveFunction state_from_density(std::shared_ptr<const FockBasis> basis, const RVector& rho) {
  if (!basis) throw invalid_input("state_from_density: null basis");
  const int m = basis->m();
  const int n = basis->n();
  if (rho.size() != m) throw invalid_input("state_from_density: density length mismatch");
  if (rho.minCoeff() < -1e-9 || rho.maxCoeff() > 1.0 + 1e-9) {
    throw invalid_input("state_from_density: density leaves [0, 1]");
  }
  if (std::abs(rho.sum() - n) > 1e-8) {
    throw invalid_input("state_from_density: density does not sum to the particle number");
  }

  RVector r = rho.cwiseMax(0.0).cwiseMin(1.0);
  r *= static_cast<double>(n) / r.sum();

  const Eigen::Index L = basis->size();
  RVector p = RVector::Zero(L);
  std::vector<int> order(static_cast<size_t>(m));
  for (int iter = 0; iter < static_cast<int>(L) + 2 * m + 16; ++iter) {
    const double height = r.sum() / n;
    if (height <= 1e-12 && r.cwiseAbs().maxCoeff() <= 1e-12) break;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (r(a) != r(b)) return r(a) > r(b);
      return a < b;
    });
    std::vector<int> occ(order.begin(), order.begin() + n);
    std::sort(occ.begin(), occ.end());
    double weight = height;
    for (int i : occ) weight = std::min(weight, r(i));
    for (size_t k = static_cast<size_t>(n); k < order.size(); ++k) {
      weight = std::min(weight, height - r(order[k]));
    }
    if (weight <= 0.0) break;
    p(basis->rank(multi_index_from(occ))) += weight;
    for (int i : occ) r(i) -= weight;
  }

  RVector achieved = RVector::Zero(m);
  for (Eigen::Index i = 0; i < L; ++i) {
    if (p(i) == 0.0) continue;
    for (int v : vertices_of(basis->index(static_cast<int>(i)))) achieved(v) += p(i);
  }
  if ((achieved - rho).cwiseAbs().maxCoeff() > 1e-10) {
    RMatrix occupancy = RMatrix::Zero(m, L);
    for (Eigen::Index i = 0; i < L; ++i) {
      for (int v : vertices_of(basis->index(static_cast<int>(i)))) occupancy(v, i) = 1.0;
    }
    p = nonnegative_least_squares(occupancy, rho);
    if ((occupancy * p - rho).cwiseAbs().maxCoeff() > 1e-10) {
      throw numerical_error("state_from_density: could not decompose the density");
    }
  }

  Vector coeff = p.cwiseMax(0.0).cwiseSqrt().cast<cx>();
  coeff /= coeff.norm();
  return make_state(std::move(basis), std::move(coeff));
}

}  // namespace gdft
