#include <cmath>

#include <gtest/gtest.h>

#include "gwg/errnorms.hpp"
#include "gwg/experiments.hpp"
#include "test_support.hpp"

using namespace gwg;

TEST(ErrNorms, EdgeNormsSingleTriangle) {
  const Mesh mesh = fixtures::single_triangle();
  const GwgConfig cfg;
  WeakFunction e(DofLayout(1, 3, cfg));
  for (int edge = 0; edge < 3; ++edge) e.vb(edge)(0) = 1.0;
  // h_T = sqrt 2, perimeter 2 + sqrt 2
  EXPECT_NEAR(eb_edge(mesh, e), std::sqrt(std::sqrt(2.0) * (2.0 + std::sqrt(2.0))), 1e-14);
  EXPECT_EQ(eg_edge(mesh, e), 0.0);
  for (int edge = 0; edge < 3; ++edge) e.vg(edge, 1)(0) = 2.0;
  EXPECT_NEAR(eg_edge(mesh, e), 2.0 * eb_edge(mesh, e), 1e-14);
}

TEST(ErrNorms, InteriorEdgeCountedTwice) {
  const Mesh mesh = fixtures::two_triangles();
  GwgConfig cfg;
  cfg.m = 1;
  WeakFunction e(DofLayout(2, mesh.num_edges(), cfg));
  int diag = -1;
  for (int k = 0; k < mesh.num_edges(); ++k) {
    if (!mesh.edge(k).is_boundary()) diag = k;
  }
  e.vb(diag)(1) = 1.0;  // L_1 has squared norm |e| / 3
  const double h = std::sqrt(2.0);
  EXPECT_NEAR(eb_edge(mesh, e), std::sqrt(2.0 * h * h / 3.0), 1e-14);
}

TEST(ErrNorms, L2OfConstant) {
  const Mesh mesh = generate_uniform_triangular(Domain::l_shaped, 2);
  const GwgConfig cfg;
  WeakFunction e(DofLayout(mesh.num_elements(), mesh.num_edges(), cfg));
  for (int t = 0; t < mesh.num_elements(); ++t) e.v0(t)(0) = 0.5;
  EXPECT_NEAR(l2_e0(mesh, e), 0.5 * std::sqrt(3.0), 1e-14);
}

TEST(ErrNorms, L2OfPolynomialProjection) {
  const Mesh mesh = generate_uniform_square(Domain::unit_square, 3);
  GwgConfig cfg;
  const auto phi = [](const Point& p) { return p.x() * p.y(); };
  const WeakFunction w = project_weak(
      mesh, cfg, phi, [](const Point& p) { return Vec2(p.y(), p.x()); }, 6);
  // int_0^1 int_0^1 x^2 y^2 = 1/9
  EXPECT_NEAR(l2_e0(mesh, w), 1.0 / 3.0, 1e-14);
}

TEST(ErrNorms, TripleBarIsEnergy) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 2);
  GwgConfig cfg;
  const DofMap dofs(mesh, cfg);
  const SparseSymMatrix a = assemble_stiffness(mesh, dofs, cfg);
  WeakFunction e(dofs.layout());
  for (int i = 0; i < e.coeffs.size(); ++i) e.coeffs(i) = std::sin(0.3 * i);
  const double want = std::sqrt(e.coeffs.dot(MatrixXd(a) * e.coeffs));
  EXPECT_NEAR(triple_bar(a, e), want, 1e-12 * want);
  EXPECT_NEAR(triple_bar(mesh, cfg, e), want, 1e-12 * want);

  const WeakFunction lin = project_weak(
      mesh, cfg, [](const Point& p) { return 1.0 + p.x(); }, [](const Point&) { return Vec2(1, 0); },
      4);
  EXPECT_LT(triple_bar(a, lin), 1e-6);
}

TEST(ErrNorms, CenterSeminormsVanishForQuadratic) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 3);
  const GwgConfig cfg;
  const auto& mc = patch_quadratic_case();
  const WeakFunction w = project_weak(mesh, cfg, mc.u, mc.grad, 8);
  const auto [h2, h1] = center_seminorms(mesh, w, mc.grad, mc.hess);
  EXPECT_LT(h2, 1e-12);
  EXPECT_LT(h1, 1e-12);
}

TEST(ErrNorms, CenterSeminormsOfShift) {
  // u0 = 0 against u = x^2 gives |e|_2 = (sum |T| 4)^(1/2) = 2 and |e|_1 = (sum |T| 4 x_c^2)^(1/2)
  const Mesh mesh = generate_uniform_square(Domain::unit_square, 2);
  const GwgConfig cfg;
  const WeakFunction zero(DofLayout(mesh.num_elements(), mesh.num_edges(), cfg));
  const auto [h2, h1] = center_seminorms(
      mesh, zero, [](const Point& p) { return Vec2(2 * p.x(), 0); },
      [](const Point&) {
        Eigen::Matrix2d h;
        h << 2, 0, 0, 0;
        return h;
      });
  EXPECT_NEAR(h2, 2.0, 1e-14);
  EXPECT_NEAR(h1, std::sqrt(0.25 * 4 * (2 * 0.0625 + 2 * 0.5625)), 1e-14);
}

TEST(ErrNorms, Rates) {
  const double errs[] = {1.0, 0.5, 0.125};
  const auto r = rates(errs);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_DOUBLE_EQ(r[0], 1.0);
  EXPECT_DOUBLE_EQ(r[1], 2.0);
  const double bad[] = {1.0, 0.0, -1.0};
  for (double v : rates(bad)) EXPECT_TRUE(std::isnan(v));
  EXPECT_TRUE(rates(std::span<const double>()).empty());
}
