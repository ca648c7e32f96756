// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#include "graphdft/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gdft {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges_1based) {
  if (vertex_count < 1) throw invalid_input("graph needs at least one vertex");
  std::set<std::pair<int, int>> clean;
  for (const auto& [i, j] : edges_1based) {
    if (i < 1 || i > vertex_count || j < 1 || j > vertex_count) {
      throw invalid_input("edge endpoint out of range: (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
    }
    if (i == j) throw invalid_input("self-loop at vertex " + std::to_string(i));
    clean.insert({std::min(i, j) - 1, std::max(i, j) - 1});
  }
  return Graph(vertex_count, {clean.begin(), clean.end()});
}

bool Graph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

bool is_connected(const Graph& g) {
  const int m = g.vertex_count();
  std::vector<std::vector<int>> adj(m);
  for (const auto& [a, b] : g.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(m, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == m;
}

RMatrix graph_laplacian(const Graph& g) {
  const int m = g.vertex_count();
  RMatrix lap = RMatrix::Zero(m, m);
  for (const auto& [a, b] : g.edges()) {
    lap(a, b) = 1.0;
    lap(b, a) = 1.0;
    lap(a, a) -= 1.0;
    lap(b, b) -= 1.0;
  }
  return lap;
}

Graph graph_of_matrix(const Matrix& a, double zero_tol) {
  if (a.rows() != a.cols()) throw invalid_input("graph_of_matrix needs a square matrix");
  const int m = static_cast<int>(a.rows());
  const double herm = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (herm > zero_tol * std::max(1.0, a.cwiseAbs().maxCoeff())) {
    throw invalid_input("graph_of_matrix: matrix is not Hermitian (violation " +
                        std::to_string(herm) + ")");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (std::abs(a(i, j)) > zero_tol) edges.push_back({i + 1, j + 1});
    }
  }
  return Graph::from_edges(m, edges);
}

namespace {

Graph make_chain(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < k; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(k, e);
}

Graph make_complete(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) e.push_back({i, j});
  }
  return Graph::from_edges(k, e);
}

// Cuboctahedron with vertices 1..4 on the bottom square, 5..8 on the top
// square and 9..12 on the middle square; every vertex has degree 4.
Graph make_cuboctahedron() {
  return Graph::from_edges(12, {{1, 2},  {2, 3},  {3, 4},  {1, 4},   {5, 6},  {6, 7},
                                {7, 8},  {5, 8},  {1, 9},  {2, 9},   {5, 9},  {6, 9},
                                {2, 10}, {3, 10}, {6, 10}, {7, 10},  {3, 11}, {4, 11},
                                {7, 11}, {8, 11}, {1, 12}, {4, 12},  {5, 12}, {8, 12}});
}

}  // namespace

Graph builtin_graph(const std::string& name) {
  if (name == "triangle") return make_complete(3);
  if (name == "square") return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  if (name == "cuboctahedron") return make_cuboctahedron();
  const auto dash = name.find('-');
  if (dash != std::string::npos) {
    const std::string kind = name.substr(0, dash);
    int k = 0;
    try {
      k = std::stoi(name.substr(dash + 1));
    } catch (const std::exception&) {
      throw invalid_input("unknown graph name: " + name);
    }
    if (k < 1) throw invalid_input("graph size must be positive in: " + name);
    if (kind == "chain") return make_chain(k);
    if (kind == "complete") return make_complete(k);
  }
  throw invalid_input("unknown graph name: " + name);
}

std::string format_graph_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return j.dump(2) + "\n";
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("edges")) {
    throw invalid_input("graph JSON needs \"vertices\" and \"edges\"");
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw invalid_input("graph JSON edge must be a pair");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph::from_edges(j["vertices"].get<int>(), edges);
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << "\n";
  for (const auto& [a, b] : g.edges()) out << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  int m = 0;
  if (!(in >> m)) throw invalid_input("graph text must start with the vertex count");
  std::vector<std::pair<int, int>> edges;
  int a = 0, b = 0;
  while (in >> a >> b) edges.push_back({a, b});
  if (!in.eof()) throw invalid_input("trailing junk in graph text");
  return Graph::from_edges(m, edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

}  // namespace gdft
