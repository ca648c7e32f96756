// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "graphdft/atlas.hpp"
#include "graphdft/common.hpp"
#include "graphdft/repr.hpp"

namespace gdft {

/// Spectrum as a JSON list of {"eigenvalue", "degeneracy"} clusters.
/// Ascending eigenvalues join a cluster while they stay within cluster_tol *
/// max(1, |anchor|) of the cluster's first member; the reported eigenvalue
/// is the cluster mean.
std::string format_spectrum_json(const RVector& eigenvalues,
                                 double cluster_tol = 1e-8);

/// Density as CSV with a "vertex,density" header and one row per vertex,
/// vertices labelled from 1. Values carry full double precision.
std::string format_density_csv(const RVector& rho);

/// Reads a density back from CSV. Accepts the format_density_csv table
/// (header optional, one "label,value" row per vertex) or a single row of
/// comma separated values.
RVector parse_density_csv(const std::string& text);

/// Complex matrix as CSV, row-major, real and imaginary parts interleaved:
/// re,im,re,im,... per row. Full double precision, so parse_matrix_csv
/// recovers the exact matrix.
std::string format_matrix_csv(const Matrix& mat);
Matrix parse_matrix_csv(const std::string& text);

/// Uniqueness certificate as JSON: the verdict, the counting data behind it
/// and, per kernel direction, the persistence interval endpoints together
/// with flags marking persistence through the whole scanned range.
std::string format_verdict_json(const UvVerdict& verdict);

/// Table of values over densities as CSV. Each row lists one density
/// (columns rho_1..rho_m) followed by one value per named column; columns[k]
/// holds the k-th value for every density.
std::string format_surface_csv(const std::vector<RVector>& densities,
                               const std::vector<std::string>& column_names,
                               const std::vector<RVector>& columns);

/// Atlas sweep as CSV: one row per cell with the axis coordinates, ground
/// energy, degeneracy, spectral gap, uv status and ground density.
std::string format_atlas_csv(const std::vector<AtlasCell>& cells);

/// Companion manifest for an atlas CSV: the grid, the kernel scan and the
/// degeneracy tolerance that produced it, as JSON.
std::string format_atlas_manifest(const PotentialGridSpec& spec,
                                  const TScanSpec& scan, double degeneracy_tol);

}  // namespace gdft
