// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/fock.hpp"

#include <cmath>

#include <Eigen/LU>
#include <json.hpp>

namespace gdft {

std::vector<int> vertices_of(MultiIndex idx) {
  std::vector<int> out;
  std::uint64_t bits = idx.bits;
  while (bits) {
    out.push_back(std::countr_zero(bits));
    bits &= bits - 1;
  }
  return out;
}

MultiIndex multi_index_from(const std::vector<int>& vertices) {
  MultiIndex idx{};
  for (int v : vertices) {
    if (v < 0 || v > 62) throw invalid_input("vertex out of range for multi-index");
    if (idx.contains(v)) throw invalid_input("repeated vertex in multi-index");
    idx.bits |= (1ull << v);
  }
  return idx;
}

std::shared_ptr<const FockBasis> FockBasis::build(int m, int n) {
  if (m < 2 || m > 63 || n < 1 || n >= m) {
    throw invalid_input("basis needs 1 <= n < m <= 63, got m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
  }
  auto basis = std::shared_ptr<FockBasis>(new FockBasis(m, n));
  std::vector<int> idx(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) idx[static_cast<size_t>(k)] = k;
  while (true) {
    basis->indices_.push_back(multi_index_from(idx));
    int k = n - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == m - n + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int j = k + 1; j < n; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  basis->rank_.reserve(basis->indices_.size());
  for (size_t r = 0; r < basis->indices_.size(); ++r) {
    basis->rank_[basis->indices_[r].bits] = static_cast<int>(r);
  }
  return basis;
}

int FockBasis::rank(MultiIndex idx) const {
  const auto it = rank_.find(idx.bits);
  if (it == rank_.end()) throw invalid_input("multi-index does not belong to this basis");
  return it->second;
}

namespace {

inline int sign_below(int v, MultiIndex idx) {
  const std::uint64_t below = idx.bits & ((1ull << v) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

}  // namespace

std::optional<std::pair<int, MultiIndex>> annihilate(int v, MultiIndex idx) {
  if (!idx.contains(v)) return std::nullopt;
  return std::make_pair(sign_below(v, idx), MultiIndex{idx.bits & ~(1ull << v)});
}

std::optional<std::pair<int, MultiIndex>> create(int v, MultiIndex idx) {
  if (idx.contains(v)) return std::nullopt;
  return std::make_pair(sign_below(v, idx), MultiIndex{idx.bits | (1ull << v)});
}

WaveFunction make_state(std::shared_ptr<const FockBasis> basis, Vector coeff) {
  if (!basis) throw invalid_input("state needs a basis");
  if (coeff.size() != basis->size()) {
    throw invalid_input("coefficient length " + std::to_string(coeff.size()) +
                        " does not match basis size " + std::to_string(basis->size()));
  }
  if (std::abs(coeff.norm() - 1.0) > 1e-10) {
    throw invalid_input("state is not normalized (norm " + std::to_string(coeff.norm()) + ")");
  }
  return WaveFunction{std::move(basis), std::move(coeff)};
}

WaveFunction slater_determinant(const std::vector<Vector>& orbitals,
                                std::shared_ptr<const FockBasis> basis) {
  if (!basis) throw invalid_input("slater_determinant needs a basis");
  const int m = basis->m();
  const int n = basis->n();
  if (static_cast<int>(orbitals.size()) != n) {
    throw invalid_input("expected " + std::to_string(n) + " orbitals, got " +
                        std::to_string(orbitals.size()));
  }
  for (const auto& phi : orbitals) {
    if (phi.size() != m) throw invalid_input("orbital length does not match vertex count");
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      const cx g = orbitals[static_cast<size_t>(k)].dot(orbitals[static_cast<size_t>(l)]);
      const double want = (k == l) ? 1.0 : 0.0;
      if (std::abs(g - want) > 1e-8) {
        throw invalid_input("orbitals are not orthonormal (gram deviation " +
                            std::to_string(std::abs(g - want)) + ")");
      }
    }
  }

  Vector coeff(basis->size());
  Matrix block(n, n);
  for (int r = 0; r < basis->size(); ++r) {
    const auto verts = vertices_of(basis->index(r));
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        block(k, l) = orbitals[static_cast<size_t>(l)](verts[static_cast<size_t>(k)]);
      }
    }
    coeff(r) = block.determinant();
  }
  coeff /= coeff.norm();
  return WaveFunction{std::move(basis), std::move(coeff)};
}

std::string format_state_json(const WaveFunction& psi) {
  nlohmann::json j;
  j["m"] = psi.basis->m();
  j["n"] = psi.basis->n();
  auto& coeff = j["coefficients"] = nlohmann::json::array();
  for (int r = 0; r < psi.coeff.size(); ++r) {
    coeff.push_back({psi.coeff(r).real(), psi.coeff(r).imag()});
  }
  return j.dump(2) + "\n";
}

WaveFunction parse_state_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("bad state JSON: ") + e.what());
  }
  if (!j.contains("m") || !j.contains("n") || !j.contains("coefficients")) {
    throw invalid_input("state JSON needs \"m\", \"n\" and \"coefficients\"");
  }
  const auto basis = FockBasis::build(j["m"].get<int>(), j["n"].get<int>());
  const auto& raw = j["coefficients"];
  if (static_cast<int>(raw.size()) != basis->size()) {
    throw invalid_input("state JSON has wrong coefficient count");
  }
  Vector coeff(basis->size());
  for (int r = 0; r < basis->size(); ++r) {
    const auto& pair = raw[static_cast<size_t>(r)];
    if (!pair.is_array() || pair.size() != 2) {
      throw invalid_input("state JSON coefficients must be [re, im] pairs");
    }
    coeff(r) = cx(pair[0].get<double>(), pair[1].get<double>());
  }
  return make_state(basis, std::move(coeff));
}

}  // namespace gdft
