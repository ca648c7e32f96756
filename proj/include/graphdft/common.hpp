// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace gdft {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Thrown when a caller hands in data that violates a documented precondition
/// (malformed graph, non-Hermitian matrix, density outside its polytope, ...).
/// The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an iterative routine fails to meet its residual contract.
/// The CLI maps this to exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Number of worker threads to use when a caller does not say otherwise:
/// the GRAPHDFT_JOBS environment variable if set and positive, else 1.
int default_jobs();

/// Runs fn(i) for i in [0, n). With jobs <= 1 this is a plain loop; otherwise
/// indices are dealt round-robin to `jobs` threads. fn must be safe to call
/// concurrently for distinct i. Exceptions from workers are rethrown (first one
/// wins by index order).
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace gdft
