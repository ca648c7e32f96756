// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphdft/common.hpp"

namespace gdft {

/// Finite simple graph: vertex set {1..M} at the API/file boundary, stored
/// 0-based internally. Edges are kept sorted as (a, b) with a < b, no
/// self-loops, no duplicates.
class Graph {
 public:
  /// Builds a graph from 1-based edge labels, the same convention the file
  /// formats use. Rejects vertex_count < 1, labels outside [1, vertex_count],
  /// and self-loops. Duplicate edges collapse.
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges_1based);

  int vertex_count() const { return m_; }

  /// Sorted unique edges with 0-based endpoints, first < second.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int a, int b) const;  // 0-based
  int degree(int v) const;            // 0-based

 private:
  Graph(int m, std::vector<std::pair<int, int>> edges) : m_(m), edges_(std::move(edges)) {}
  int m_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Breadth-first connectivity. A single vertex counts as connected.
bool is_connected(const Graph& g);

/// Graph laplacian: diagonal -degree, off-diagonal 1 on edges. Row sums are
/// exactly zero and -laplacian is positive semi-definite.
RMatrix graph_laplacian(const Graph& g);

/// Graph of a Hermitian matrix: vertices 1..dim, an edge wherever an
/// off-diagonal entry has magnitude above zero_tol. Rejects matrices whose
/// Hermiticity violation exceeds zero_tol.
Graph graph_of_matrix(const Matrix& a, double zero_tol = 1e-12);

/// Named graphs understood by the CLI and tests: "triangle", "square",
/// "chain-K", "complete-K", "cuboctahedron".
Graph builtin_graph(const std::string& name);

/// JSON form: {"vertices": M, "edges": [[i, j], ...]} with 1-based labels.
std::string format_graph_json(const Graph& g);
Graph parse_graph_json(const std::string& text);

/// Plain text form: first line M, then one "i j" line per edge, 1-based.
std::string format_graph_text(const Graph& g);
Graph parse_graph_text(const std::string& text);

/// Reads a graph file, dispatching on content (leading '{' means JSON).
Graph read_graph_file(const std::string& path);

}  // namespace gdft
