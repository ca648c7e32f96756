// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <bit>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphdft/common.hpp"

namespace gdft {

/// Occupation bitmask over vertices 0..M-1 (bit v set means vertex v occupied).
/// M is capped at 63 so masks fit one word.
struct MultiIndex {
  std::uint64_t bits = 0;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  int popcount() const { return std::popcount(bits); }
  bool contains(int v) const { return (bits >> v) & 1u; }
};

/// Occupied vertices of a mask, 0-based ascending.
std::vector<int> vertices_of(MultiIndex idx);

/// Mask from a list of distinct 0-based vertices.
MultiIndex multi_index_from(const std::vector<int>& vertices);

/// All N-particle occupation states on M vertices, ordered lexicographically
/// by their ascending vertex lists, with O(1) rank lookup. Immutable; shared
/// between the states built on it.
class FockBasis {
 public:
  /// Requires 1 <= n < m <= 63.
  static std::shared_ptr<const FockBasis> build(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(indices_.size()); }
  MultiIndex index(int rank) const { return indices_[static_cast<size_t>(rank)]; }
  const std::vector<MultiIndex>& index_list() const { return indices_; }

  /// Position of idx in the enumeration; throws invalid_input for masks that
  /// do not belong to this basis.
  int rank(MultiIndex idx) const;

 private:
  FockBasis(int m, int n) : m_(m), n_(n) {}
  int m_ = 0;
  int n_ = 0;
  std::vector<MultiIndex> indices_;
  std::unordered_map<std::uint64_t, int> rank_;
};

/// a_v applied to a basis state: empty if vertex v is unoccupied, otherwise
/// the sign (-1)^(occupied vertices below v) and the reduced mask.
std::optional<std::pair<int, MultiIndex>> annihilate(int v, MultiIndex idx);

/// a^dagger_v applied to a basis state: empty if v is already occupied,
/// otherwise the same sign rule and the enlarged mask.
std::optional<std::pair<int, MultiIndex>> create(int v, MultiIndex idx);

/// Normalized N-particle state over a shared basis.
struct WaveFunction {
  std::shared_ptr<const FockBasis> basis;
  Vector coeff;
};

/// Validating constructor: coefficient length must match the basis and the
/// 2-norm must be 1 within 1e-10.
WaveFunction make_state(std::shared_ptr<const FockBasis> basis, Vector coeff);

/// Antisymmetrized product of N orbitals: coefficient at I is the determinant
/// of the N x N submatrix of orbital values on the vertices of I. Orbitals
/// must be pairwise orthonormal within 1e-8 (the result is then normalized).
WaveFunction slater_determinant(const std::vector<Vector>& orbitals,
                                std::shared_ptr<const FockBasis> basis);

/// JSON form: {"m": M, "n": N, "coefficients": [[re, im], ...]} in basis order.
std::string format_state_json(const WaveFunction& psi);
WaveFunction parse_state_json(const std::string& text);

}  // namespace gdft
