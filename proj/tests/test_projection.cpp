#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gwg/projection.hpp"
#include "test_support.hpp"

using namespace gwg;

TEST(Projection, ReproducesPolynomials) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto verts = fixtures::random_element(rng, trial % 2 == 1);
    const ElementGeometry g = make_element_geometry(verts);
    const auto p = fixtures::random_poly(rng, 3);
    const VectorXd c = project_element(g, p, 3, 8);
    const ElementBasis b = element_basis(g, 3);
    for (int q = 0; q < 5; ++q) {
      const Point x = g.centroid + 0.1 * g.diameter * Vec2(std::cos(q), std::sin(q));
      EXPECT_NEAR(b.eval(x).dot(c), p(x), 1e-10);
    }
  }
}

TEST(Projection, ResidualIsOrthogonal) {
  const ElementGeometry g = make_element_geometry(std::vector<Point>{{0.1, 0}, {0.9, 0.2}, {0.3, 0.8}});
  const ScalarField f = [](const Point& p) { return std::exp(p.x()) * std::sin(3 * p.y()); };
  const int deg = 2;
  const VectorXd c = project_element(g, f, deg, 16);
  const ElementBasis b = element_basis(g, deg);
  for (int i = 0; i < b.size(); ++i) {
    const double r = integrate_element(
        g, [&](const Point& p) { return (f(p) - b.eval(p).dot(c)) * b.eval(p)(i); }, 16);
    EXPECT_NEAR(r, 0.0, 1e-13);
  }
}

TEST(Projection, EdgeProjection) {
  const EdgeFrame frame(Point(0.2, 0.3), Point(0.8, 0.1));
  const ScalarField lin = [](const Point& p) { return 1.0 + 2.0 * p.x() - p.y(); };
  const VectorXd c = project_edge(frame, lin, 2, 4);
  const EdgeBasis eb(2);
  for (double t : {-1.0, -0.3, 0.5, 1.0}) EXPECT_NEAR(eb.eval(t).dot(c), lin(frame.at(t)), 1e-14);
  EXPECT_NEAR(c(2), 0.0, 1e-14);

  // the constant coefficient of a P0 projection is the mean
  const ScalarField f = [](const Point& p) { return std::cos(4 * p.x()); };
  const VectorXd c0 = project_edge(frame, f, 0, 20);
  EXPECT_NEAR(c0(0), integrate_edge(frame, f, 20) / frame.length, 1e-14);
}

TEST(Projection, WorkspaceMatchesFreeFunctions) {
  const Mesh mesh = generate_uniform_square(Domain::unit_square, 3);
  GwgConfig cfg;
  cfg.k = 3;
  cfg.m = 1;
  cfg.l = 1;
  cfg.n = 2;
  const ProjectionWorkspace ws(mesh, cfg);
  const ScalarField f = [](const Point& p) { return std::sin(p.x() + 2 * p.y()); };
  for (int t : {0, 4}) {
    for (int deg : {3, 2, 1}) {
      const VectorXd a = ws.project_element(t, f, deg);
      const VectorXd b = project_element(mesh.geometry(t), f, deg, cfg.error_quad_degree());
      EXPECT_LT((a - b).norm(), 1e-13);
    }
  }
  EXPECT_THROW(ws.project_element(0, f, 0), std::exception);
  const VectorXd gram = ws.edge_gram(0, 1);
  EXPECT_NEAR(gram(1), mesh.edge_frame(0).length / 3.0, 1e-16);
}

TEST(Projection, WeakProjectionOfQuadratic) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 3);
  GwgConfig cfg;
  cfg.k = 2;
  cfg.m = 2;
  cfg.l = 1;
  const auto phi = [](const Point& p) { return 1.0 - p.x() + 2 * p.x() * p.y() + 0.5 * p.y() * p.y(); };
  const auto grad = [](const Point& p) { return Vec2(-1.0 + 2 * p.y(), 2 * p.x() + p.y()); };
  const WeakFunction w = project_weak(mesh, cfg, phi, grad, 8);
  const EdgeBasis bb(cfg.m), bg(cfg.l);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeFrame f = mesh.edge_frame(e);
    for (double t : {-0.7, 0.2, 1.0}) {
      const Point x = f.at(t);
      EXPECT_NEAR(bb.eval(t).dot(w.vb(e)), phi(x), 1e-13);
      EXPECT_NEAR(bg.eval(t).dot(w.vg(e, 0)), grad(x).x(), 1e-13);
      EXPECT_NEAR(bg.eval(t).dot(w.vg(e, 1)), grad(x).y(), 1e-13);
    }
  }
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const auto& g = mesh.geometry(t);
    EXPECT_NEAR(element_basis(g, 2).eval(g.centroid).dot(w.v0(t)), phi(g.centroid), 1e-13);
  }

  // the local routine agrees with the global one on every element
  const int t = 5;
  const VectorXd local = project_weak_local(mesh.geometry(t), mesh.element_frames(t), cfg, phi,
                                            grad, 8);
  const DofMap dofs(mesh, cfg);
  const auto map = dofs.local_to_global(t);
  for (std::size_t i = 0; i < map.size(); ++i) EXPECT_NEAR(local(i), w.coeffs(map[i]), 1e-14);
}
