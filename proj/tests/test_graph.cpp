// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "graphdft/graph.hpp"
#include "support/oracles.hpp"

using gdft::Graph;

TEST_CASE("triangle laplacian matches the hand value") {
  const Graph g = gdft::builtin_graph("triangle");
  Eigen::MatrixXd want(3, 3);
  want << -2, 1, 1, 1, -2, 1, 1, 1, -2;
  CHECK((gdft::graph_laplacian(g) - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("square laplacian has no diagonal coupling") {
  const Graph g = gdft::builtin_graph("square");
  const Eigen::MatrixXd lap = gdft::graph_laplacian(g);
  for (int i = 0; i < 4; ++i) CHECK(lap(i, i) == -2.0);
  CHECK(lap(0, 2) == 0.0);
  CHECK(lap(2, 0) == 0.0);
  CHECK(lap(1, 3) == 0.0);
  CHECK(lap(3, 1) == 0.0);
  CHECK(lap(0, 1) == 1.0);
}

TEST_CASE("laplacian row sums vanish exactly and -laplacian is psd") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> mdist(2, 9);
    const int m = mdist(rng);
    const Graph g = Graph::from_edges(m, oracle::random_connected_edges(m, rng));
    const Eigen::MatrixXd lap = gdft::graph_laplacian(g);
    for (int i = 0; i < m; ++i) CHECK(lap.row(i).sum() == 0.0);

    // Quadratic form identity: -<psi, lap psi> = 1/2 sum_{i~j} |psi_i - psi_j|^2.
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd psi(m);
    for (int i = 0; i < m; ++i) psi(i) = gdft::cx(gauss(rng), gauss(rng));
    const double quad = -std::real(psi.dot(lap * psi));
    double pairs = 0.0;
    for (const auto& [a, b] : g.edges()) pairs += std::norm(psi(a) - psi(b));
    CHECK(std::abs(quad - pairs) <= 1e-12 * std::max(1.0, pairs));
    CHECK(quad >= -1e-12);
  }
}

TEST_CASE("graph of laplacian recovers the graph") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> mdist(2, 9);
    const int m = mdist(rng);
    const auto edges = oracle::random_connected_edges(m, rng);
    const Graph g = Graph::from_edges(m, edges);
    const Graph back = gdft::graph_of_matrix(gdft::graph_laplacian(g).cast<gdft::cx>());
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("graph of the two-particle triangle hamiltonian is complete") {
  // Two fermions on the triangle at zero potential, written in the pair basis.
  Eigen::MatrixXcd h(3, 3);
  h << 4, -1, 1, -1, 4, -1, 1, -1, 4;
  const Graph g = gdft::graph_of_matrix(h);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 3);
  CHECK(gdft::is_connected(g));
}

TEST_CASE("graph of matrix ignores entries below the zero tolerance") {
  Eigen::MatrixXcd h(2, 2);
  h << 1.0, gdft::cx(1e-13, 0), gdft::cx(1e-13, 0), 2.0;
  CHECK(gdft::graph_of_matrix(h).edges().empty());
  h(0, 1) = h(1, 0) = 0.5;
  CHECK(gdft::graph_of_matrix(h).edges().size() == 1);
}

TEST_CASE("graph of matrix rejects non hermitian input") {
  Eigen::MatrixXcd h(2, 2);
  h << 1.0, 2.0, 3.0, 4.0;
  CHECK_THROWS_AS((void)gdft::graph_of_matrix(h), gdft::invalid_input);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(gdft::is_connected(Graph::from_edges(2, {})));
  CHECK(gdft::is_connected(Graph::from_edges(1, {})));
  CHECK(gdft::is_connected(Graph::from_edges(3, {{1, 2}, {2, 3}})));
  CHECK_FALSE(gdft::is_connected(Graph::from_edges(4, {{1, 2}, {3, 4}})));
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), gdft::invalid_input);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 2}}), gdft::invalid_input);
  CHECK_THROWS_AS(Graph::from_edges(3, {{2, 4}}), gdft::invalid_input);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), gdft::invalid_input);
}

TEST_CASE("named graphs") {
  CHECK(gdft::builtin_graph("triangle").edges().size() == 3);
  CHECK(gdft::builtin_graph("square").edges().size() == 4);
  CHECK(gdft::builtin_graph("chain-5").vertex_count() == 5);
  CHECK(gdft::builtin_graph("chain-5").edges().size() == 4);
  CHECK(gdft::builtin_graph("complete-6").edges().size() == 15);
  CHECK_THROWS_AS(gdft::builtin_graph("dodecahedron"), gdft::invalid_input);

  const Graph cubo = gdft::builtin_graph("cuboctahedron");
  CHECK(cubo.vertex_count() == 12);
  CHECK(cubo.edges().size() == 24);
  CHECK(gdft::is_connected(cubo));
  const Eigen::MatrixXd lap = gdft::graph_laplacian(cubo);
  for (int i = 0; i < 12; ++i) CHECK(lap(i, i) == -4.0);

  // The three printed one-particle excited modes must be exact eigenvectors of
  // -laplacian with eigenvalue 2; this pins the vertex labeling.
  Eigen::MatrixXd modes(12, 3);
  modes.col(0) << -1, -1, -1, -1, 1, 1, 1, 1, 0, 0, 0, 0;
  modes.col(1) << 1, -1, -1, 1, 1, -1, -1, 1, 0, -2, 0, 2;
  modes.col(2) << -1, -1, 1, 1, -1, -1, 1, 1, -2, 0, 2, 0;
  for (int k = 0; k < 3; ++k) {
    const Eigen::VectorXd r = -lap * modes.col(k) - 2.0 * modes.col(k);
    CHECK(r.cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("graph json and text round trips") {
  const Graph g = gdft::builtin_graph("square");
  const std::string js = gdft::format_graph_json(g);
  const Graph gj = gdft::parse_graph_json(js);
  CHECK(gj.vertex_count() == 4);
  CHECK(gj.edges() == g.edges());

  const std::string txt = gdft::format_graph_text(g);
  const Graph gt = gdft::parse_graph_text(txt);
  CHECK(gt.edges() == g.edges());

  CHECK_THROWS_AS(gdft::parse_graph_json("{\"vertices\": 2}"), gdft::invalid_input);
  CHECK_THROWS_AS(gdft::parse_graph_text("not a graph"), gdft::invalid_input);
}
