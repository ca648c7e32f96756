// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "graphdft/atlas.hpp"
#include "graphdft/functionals.hpp"
#include "graphdft/graph.hpp"

using gdft::FockBasis;

namespace {

gdft::ManyBodyOperator free_operator(const gdft::Graph& g, int n) {
  const auto basis = FockBasis::build(g.vertex_count(), n);
  return gdft::assemble(gdft::OneBodyHamiltonian::from_graph(g),
                        gdft::TwoBodyInteraction::zero(g.vertex_count()),
                        gdft::Potential::zero(g.vertex_count()), basis);
}

gdft::RVector rvec(std::initializer_list<double> xs) {
  gdft::RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) v(k++) = x;
  return v;
}

// Square-graph sweep over the wedge parameters: v(s,t) on the 4-cycle with
// axis directions d_s = (1,-1,-1,1) and d_t = (1,1,-1,-1).
gdft::PotentialGridSpec square_grid(double lo, double hi, int steps) {
  gdft::PotentialGridSpec spec;
  spec.base = gdft::RVector::Zero(4);
  spec.axes.push_back({rvec({1, -1, -1, 1}), lo, hi, steps});
  spec.axes.push_back({rvec({1, 1, -1, -1}), lo, hi, steps});
  return spec;
}

}  // namespace

TEST_CASE("single-cell sweep reports the cuboctahedron ground manifold") {
  const auto h0 = free_operator(gdft::builtin_graph("cuboctahedron"), 2);
  gdft::PotentialGridSpec spec;
  spec.base = gdft::RVector::Zero(12);
  const auto cells = gdft::sweep(spec, h0);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].coords.empty());
  CHECK(cells[0].ground_energy == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cells[0].degeneracy == 3);
  CHECK(cells[0].gap == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(cells[0].density.rho.sum() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("square sweep flags degeneracy exactly on the wedge diagonals") {
  const auto h0 = free_operator(gdft::builtin_graph("square"), 2);
  const int steps = 21;
  const double step = 4.0 / (steps - 1);
  const auto cells = gdft::sweep(square_grid(-2.0, 2.0, steps), h0);
  REQUIRE(cells.size() == static_cast<size_t>(steps * steps));

  // Row-major ordering, first axis slowest.
  CHECK(cells[0].coords == std::vector<double>{-2.0, -2.0});
  CHECK(cells[1].coords[0] == doctest::Approx(-2.0));
  CHECK(cells[1].coords[1] == doctest::Approx(-2.0 + step));
  CHECK(cells[steps].coords[0] == doctest::Approx(-2.0 + step));
  CHECK(cells[steps].coords[1] == doctest::Approx(-2.0));
  CHECK(cells.back().coords == std::vector<double>{2.0, 2.0});

  for (const auto& cell : cells) {
    const double s = cell.coords[0];
    const double t = cell.coords[1];
    const double off_diagonal = std::min(std::abs(s - t), std::abs(s + t));
    const bool on_diagonal = off_diagonal <= 1e-12;
    CAPTURE(s);
    CAPTURE(t);
    CHECK((cell.degeneracy >= 2) == on_diagonal);

    const double u = std::max(std::abs(s), std::abs(t));
    CHECK(cell.ground_energy ==
          doctest::Approx(4.0 - 2.0 * std::sqrt(1.0 + u * u)).epsilon(1e-9));

    const gdft::RVector& rho = cell.density.rho;
    CHECK(rho.minCoeff() >= -1e-12);
    CHECK(rho.maxCoeff() <= 1.0 + 1e-12);
    CHECK(rho.sum() == doctest::Approx(2.0).epsilon(1e-10));

    if (!on_diagonal)
      CHECK(cell.uv_status == gdft::UvStatus::non_uv_with_witness);
  }
}

TEST_CASE("sweep output does not depend on the number of worker threads") {
  const auto h0 = free_operator(gdft::builtin_graph("square"), 2);
  const auto spec = square_grid(-1.0, 1.0, 5);
  const auto serial = gdft::sweep(spec, h0, {}, 1);
  const auto parallel = gdft::sweep(spec, h0, {}, 3);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].coords == parallel[i].coords);
    CHECK(serial[i].ground_energy == parallel[i].ground_energy);
    CHECK(serial[i].degeneracy == parallel[i].degeneracy);
    CHECK(serial[i].uv_status == parallel[i].uv_status);
    CHECK((serial[i].density.rho - parallel[i].density.rho).norm() == 0.0);
  }
}

TEST_CASE("triangle ray sweep keeps the exceptional density for every depth") {
  const auto h0 = free_operator(gdft::builtin_graph("triangle"), 2);
  // The ray (0,-t,0) in gauge-fixed form: direction (1,-2,1)/3 at coordinate t.
  gdft::PotentialGridSpec spec;
  spec.base = gdft::RVector::Zero(3);
  spec.axes.push_back({rvec({1.0 / 3, -2.0 / 3, 1.0 / 3}), 0.15, 3.0, 20});
  const auto cells = gdft::sweep(spec, h0);
  REQUIRE(cells.size() == 20);
  const gdft::RVector want = rvec({0.5, 1.0, 0.5});
  for (const auto& cell : cells) {
    CAPTURE(cell.coords[0]);
    CHECK(cell.degeneracy == 1);
    CHECK((cell.density.rho - want).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(cell.uv_status == gdft::UvStatus::non_uv_with_witness);
  }
}

TEST_CASE("sweep validates its grid") {
  const auto h0 = free_operator(gdft::builtin_graph("triangle"), 2);
  gdft::PotentialGridSpec spec;
  spec.base = gdft::RVector::Zero(3);
  spec.axes.push_back({rvec({1, 0, 0}), 0.0, 1.0, 4});  // not sum-zero
  CHECK_THROWS_AS(gdft::sweep(spec, h0), gdft::invalid_input);
  spec.axes[0] = {rvec({1, -1, 0}), 0.0, 1.0, 0};  // no steps
  CHECK_THROWS_AS(gdft::sweep(spec, h0), gdft::invalid_input);
  spec.axes[0] = {rvec({1, -1, 0}), 1.0, 0.0, 4};  // inverted range
  CHECK_THROWS_AS(gdft::sweep(spec, h0), gdft::invalid_input);
  spec.axes[0] = {rvec({1, -1}), 0.0, 1.0, 4};  // wrong length
  CHECK_THROWS_AS(gdft::sweep(spec, h0), gdft::invalid_input);
  spec.axes.clear();
  spec.base = gdft::RVector::Zero(2);  // wrong base length
  CHECK_THROWS_AS(gdft::sweep(spec, h0), gdft::invalid_input);
}

TEST_CASE("density image projects the square families onto the two diagonals") {
  const auto h0 = free_operator(gdft::builtin_graph("square"), 2);
  const auto cells = gdft::sweep(square_grid(-2.0, 2.0, 9), h0);
  gdft::RMatrix projector(2, 4);
  projector.row(0) = rvec({0.5, -0.5, -0.5, 0.5}).transpose();
  projector.row(1) = rvec({0.5, 0.5, -0.5, -0.5}).transpose();
  const auto image = gdft::density_image(cells, projector);
  REQUIRE(image.size() == cells.size());
  for (size_t i = 0; i < image.size(); ++i) {
    const double s = cells[i].coords[0];
    const double t = cells[i].coords[1];
    if (std::min(std::abs(s - t), std::abs(s + t)) <= 1e-12) continue;
    // Wedge densities live on one of the two perpendicular diagonals.
    CAPTURE(s);
    CAPTURE(t);
    CHECK(std::min(std::abs(image[i].coords(0)), std::abs(image[i].coords(1))) <= 1e-9);
    CHECK(image[i].degeneracy == cells[i].degeneracy);
    CHECK(image[i].uv_status == cells[i].uv_status);
  }

  // Identity projector returns raw densities.
  const auto raw = gdft::density_image(cells, gdft::RMatrix::Identity(4, 4));
  for (size_t i = 0; i < raw.size(); ++i)
    CHECK((raw[i].coords - cells[i].density.rho).norm() == 0.0);

  gdft::RMatrix skewed(2, 4);
  skewed.row(0) = rvec({1, 0, 0, 0}).transpose();
  skewed.row(1) = rvec({1, 1, 0, 0}).transpose();
  CHECK_THROWS_AS(gdft::density_image(cells, skewed), gdft::invalid_input);
}

TEST_CASE("triangle degenerate hull fills the central disc") {
  const auto h0 = free_operator(gdft::builtin_graph("triangle"), 2);
  const auto gm = gdft::ground_manifold(h0);
  REQUIRE(gm.degeneracy == 2);
  const auto hull = gdft::degenerate_manifold_density_hull(gm, 2000, 5);
  CHECK(hull.size() >= 2000);
  const gdft::RVector center = gdft::RVector::Constant(3, 2.0 / 3.0);
  double max_distance = 0.0;
  for (const auto& density : hull) {
    CHECK(density.rho.minCoeff() >= -1e-12);
    CHECK(density.rho.maxCoeff() <= 1.0 + 1e-12);
    CHECK(density.rho.sum() == doctest::Approx(2.0).epsilon(1e-10));
    max_distance = std::max(max_distance, (density.rho - center).norm());
  }
  CHECK(max_distance <= 1.0 / std::sqrt(6.0) + 1e-10);
  CHECK(max_distance >= 1.0 / std::sqrt(6.0) - 1e-2);
}

TEST_CASE("degenerate hull of a single ground state is its density") {
  const auto h0 = free_operator(gdft::builtin_graph("triangle"), 2);
  const auto op = gdft::add_potential(h0, rvec({0, -1, 0}));
  const auto gm = gdft::ground_manifold(op);
  REQUIRE(gm.degeneracy == 1);
  const auto hull = gdft::degenerate_manifold_density_hull(gm, 500, 1);
  REQUIRE(hull.size() == 1);
  CHECK((hull[0].rho - rvec({0.5, 1.0, 0.5})).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("square crossing hull interpolates between the wedge families") {
  const auto h0 = free_operator(gdft::builtin_graph("square"), 2);
  const auto wedge_density = [&](double s, double t) {
    gdft::RVector v(4);
    v << s + t, -s + t, -s - t, s - t;
    return gdft::density_of(gdft::ground_manifold(gdft::add_potential(h0, v)).states[0]).rho;
  };
  const gdft::RVector rho_a = wedge_density(1.0, 0.5);
  const gdft::RVector rho_b = wedge_density(0.5, 1.0);

  gdft::RVector crossing(4);
  crossing << 2, 0, -2, 0;  // s = t = 1
  const auto gm = gdft::ground_manifold(gdft::add_potential(h0, crossing));
  REQUIRE(gm.degeneracy == 2);
  const auto hull = gdft::degenerate_manifold_density_hull(gm, 1500, 7);
  double to_a = 1e9;
  double to_b = 1e9;
  for (const auto& density : hull) {
    to_a = std::min(to_a, (density.rho - rho_a).norm());
    to_b = std::min(to_b, (density.rho - rho_b).norm());
  }
  CHECK(to_a <= 0.06);
  CHECK(to_b <= 0.06);
}

TEST_CASE("cuboctahedron hull reaches the uniform density only as an ensemble") {
  const auto h0 = free_operator(gdft::builtin_graph("cuboctahedron"), 2);
  const auto gm = gdft::ground_manifold(h0);
  REQUIRE(gm.degeneracy == 3);
  const int samples = 800;
  const auto hull = gdft::degenerate_manifold_density_hull(gm, samples, 3);
  const gdft::RVector center = gdft::RVector::Constant(12, 1.0 / 6.0);

  double min_pure = 1e9;
  for (int i = 0; i < samples; ++i)
    min_pure = std::min(min_pure, (hull[static_cast<size_t>(i)].rho - center).norm());
  CHECK(min_pure > 1e-6);

  // The ensemble hull does contain the center: fit it as a convex mixture.
  const int k = static_cast<int>(hull.size());
  const double kappa = 64.0;
  gdft::RMatrix a(13, k);
  for (int c = 0; c < k; ++c) {
    a.col(c).head(12) = hull[static_cast<size_t>(c)].rho;
    a(12, c) = kappa;
  }
  gdft::RVector b(13);
  b.head(12) = center;
  b(12) = kappa;
  const gdft::RVector weights = gdft::nonnegative_least_squares(a, b);
  gdft::RVector fit = gdft::RVector::Zero(12);
  for (int c = 0; c < k; ++c) fit += weights(c) * hull[static_cast<size_t>(c)].rho;
  fit /= weights.sum();
  CHECK((fit - center).norm() <= 1e-10);
}
