#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "gwg/assembly.hpp"
#include "gwg/experiments.hpp"
#include "test_support.hpp"

using namespace gwg;

namespace {

GwgConfig scheme(int k, int m, int l, int n) {
  GwgConfig cfg;
  cfg.k = k;
  cfg.m = m;
  cfg.l = l;
  cfg.n = n;
  return cfg;
}

int kernel_dimension(const MatrixXd& a) {
  const VectorXd ev = Eigen::SelfAdjointEigenSolver<MatrixXd>(a).eigenvalues();
  const double tol = 1e-10 * ev.cwiseAbs().maxCoeff();
  int count = 0;
  for (int i = 0; i < ev.size(); ++i) {
    EXPECT_GT(ev(i), -tol);
    if (std::abs(ev(i)) <= tol) ++count;
  }
  return count;
}

}  // namespace

TEST(Assembly, LocalStiffnessKernelIsLinears) {
  const std::vector<Point> tri = {{0, 0}, {1, 0}, {0.2, 0.9}};
  const std::vector<Point> quad = {{0, 0}, {1, 0}, {1.1, 1}, {0, 0.8}};
  for (const auto& cfg : {scheme(2, 0, 0, 0), scheme(2, 0, 0, 1), scheme(3, 1, 1, 1)}) {
    for (const auto& v : {tri, quad}) {
      const ElementGeometry g = make_element_geometry(v);
      std::vector<EdgeFrame> frames;
      for (std::size_t i = 0; i < v.size(); ++i) frames.emplace_back(v[i], v[(i + 1) % v.size()]);
      const LocalWeakHessian hess(g, frames, cfg);
      const MatrixXd k = local_stiffness(hess).weighted(cfg, g.diameter);
      EXPECT_TRUE(k.isApprox(k.transpose()));
      EXPECT_EQ(kernel_dimension(k), 3) << cfg.label() << " " << v.size();
    }
  }
}

TEST(Assembly, LinearsAreInTheKernel) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 4);
  const GwgConfig cfg = scheme(2, 0, 0, 0);
  const DofMap dofs(mesh, cfg);
  const SparseSymMatrix a = assemble_stiffness(mesh, dofs, cfg);
  const WeakFunction lin = project_weak(
      mesh, cfg, [](const Point& p) { return 0.3 - 2 * p.x() + p.y(); },
      [](const Point&) { return Vec2(-2, 1); }, 6);
  const VectorXd r = a * lin.coeffs;
  EXPECT_LT(r.cwiseAbs().maxCoeff(), 1e-10 * (1.0 + MatrixXd(a).cwiseAbs().maxCoeff()));
}

TEST(Assembly, ExactlySymmetric) {
  const Mesh mesh = generate_uniform_square(Domain::l_shaped, 2);
  const GwgConfig cfg = scheme(3, 1, 1, 1);
  const DofMap dofs(mesh, cfg);
  const SparseSymMatrix a = assemble_stiffness(mesh, dofs, cfg);
  const SparseSymMatrix at = SparseSymMatrix(a.transpose());
  EXPECT_EQ((a - at).norm(), 0.0);
  EXPECT_EQ(a.rows(), dofs.size());
}

TEST(Assembly, StabilizerScalesWithRho) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 2);
  GwgConfig cfg = scheme(2, 1, 0, 0);
  const DofMap dofs(mesh, cfg);
  const SparseSymMatrix a1 = assemble_stiffness(mesh, dofs, cfg);
  const SparseSymMatrix trace = assemble_stiffness(mesh, dofs, cfg, kTraceStabilizer);
  const SparseSymMatrix grad = assemble_stiffness(mesh, dofs, cfg, kGradientStabilizer);
  const SparseSymMatrix hess = assemble_stiffness(mesh, dofs, cfg, kHessianTerm);
  EXPECT_LT(MatrixXd(a1 - trace - grad - hess).cwiseAbs().maxCoeff(), 1e-9);

  cfg.rho1 = 2.0;
  const SparseSymMatrix a2 = assemble_stiffness(mesh, dofs, cfg);
  EXPECT_LT(MatrixXd(a2 - a1 - trace).cwiseAbs().maxCoeff(), 1e-9);

  // h_T^gamma with h_T the diameter: rescaling gamma1 by one multiplies by h_T
  GwgConfig shifted = scheme(2, 1, 0, 0);
  shifted.gamma1 = -2.0;
  const SparseSymMatrix t2 = assemble_stiffness(mesh, dofs, shifted, kTraceStabilizer);
  const double h = std::sqrt(2.0) / 2;
  EXPECT_LT(MatrixXd(t2 - h * trace).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Assembly, ReducedSystemIsSpd) {
  for (const Mesh& mesh : {fixtures::two_triangles(), generate_uniform_square(Domain::unit_square, 2),
                           generate_uniform_triangular(Domain::l_shaped, 1)}) {
    for (const auto& cfg : {scheme(2, 0, 0, 0), scheme(3, 2, 1, 1)}) {
      const AssembledSystem sys(mesh, cfg);
      EXPECT_GT(min_eigenvalue(sys.matrix()), 0.0) << cfg.label();
    }
  }
}

TEST(Assembly, FreeDofs) {
  const Mesh mesh = fixtures::two_triangles();
  const GwgConfig cfg = scheme(2, 0, 0, 0);
  const DofMap dofs(mesh, cfg);
  EXPECT_EQ(dofs.size(), 2 * 6 + 5 * 3);
  EXPECT_EQ(dofs.num_constrained(), 4 * 3);
  EXPECT_EQ(static_cast<int>(dofs.free_dofs().size()), 2 * 6 + 3);
  // both elements see the diagonal edge at the same global indices
  const auto m0 = dofs.local_to_global(0), m1 = dofs.local_to_global(1);
  std::vector<int> shared;
  for (int i : m0) {
    if (std::find(m1.begin(), m1.end(), i) != m1.end()) shared.push_back(i);
  }
  EXPECT_EQ(shared.size(), 3u);
}

TEST(Assembly, LoadVector) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 2);
  const GwgConfig cfg = scheme(2, 0, 0, 0);
  const DofMap dofs(mesh, cfg);
  const VectorXd one = assemble_load(mesh, dofs, cfg, [](const Point&) { return 1.0; });
  const auto& lay = dofs.layout();
  for (int t = 0; t < mesh.num_elements(); ++t) {
    EXPECT_NEAR(one(lay.v0_offset(t)), mesh.geometry(t).area, 1e-15);
    // centered basis, so x and y moments vanish
    EXPECT_NEAR(one(lay.v0_offset(t) + 1), 0.0, 1e-15);
  }
  EXPECT_EQ(one.tail(mesh.num_edges() * lay.edge_block()).norm(), 0.0);

  const ScalarField f = [](const Point& p) { return 4 * std::sin(p.x()) * std::sin(p.y()); };
  const VectorXd b = assemble_load(mesh, dofs, cfg, f);
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const ElementBasis basis = element_basis(mesh.geometry(t), cfg.k);
    for (int i = 0; i < basis.size(); ++i) {
      const double want = integrate_element(
          mesh.geometry(t), [&](const Point& p) { return f(p) * basis.eval(p)(i); }, 30);
      EXPECT_NEAR(b(lay.v0_offset(t) + i), want, 1e-9 * mesh.geometry(t).area);
    }
  }
}

TEST(Assembly, NonFiniteLoadThrows) {
  const Mesh mesh = fixtures::two_triangles();
  const GwgConfig cfg = scheme(2, 0, 0, 0);
  const DofMap dofs(mesh, cfg);
  EXPECT_THROW(assemble_load(mesh, dofs, cfg,
                             [](const Point&) { return std::numeric_limits<double>::quiet_NaN(); }),
               std::runtime_error);
}

TEST(Assembly, BoundaryValuesOfLinear) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 3);
  const GwgConfig cfg = scheme(2, 1, 1, 0);
  const DofMap dofs(mesh, cfg);
  ClampedData data;
  data.g1 = [](const Point& p) { return p.x() + p.y(); };
  data.g2 = [](const Point&, const Vec2& n) { return n.x() + n.y(); };
  data.grad_g1 = [](const Point&) { return Vec2(1, 1); };
  const VectorXd bv = boundary_values(mesh, dofs, cfg, data);
  const auto& lay = dofs.layout();
  const EdgeBasis eb(cfg.m);
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const auto block = bv.segment(lay.vb_offset(e), lay.edge_block());
    if (!mesh.edge(e).is_boundary()) {
      EXPECT_EQ(block.norm(), 0.0);
      continue;
    }
    const EdgeFrame f = mesh.edge_frame(e);
    for (double t : {-1.0, 0.3, 1.0}) {
      EXPECT_NEAR(eb.eval(t).dot(bv.segment(lay.vb_offset(e), lay.vb_size)), data.g1(f.at(t)), 1e-14);
    }
    for (int c = 0; c < 2; ++c) {
      EXPECT_NEAR(bv(lay.vg_offset(e, c)), 1.0, 1e-14);
      EXPECT_NEAR(bv(lay.vg_offset(e, c) + 1), 0.0, 1e-14);
    }
  }
  for (int t = 0; t < mesh.num_elements(); ++t) {
    EXPECT_EQ(bv.segment(lay.v0_offset(t), lay.v0_size).norm(), 0.0);
  }
}

TEST(Assembly, BoundaryValuesMatchProjection) {
  const Mesh mesh = generate_uniform_square(Domain::unit_square, 4);
  const GwgConfig cfg = scheme(3, 2, 1, 1);
  const ManufacturedCase& mc = find_case("cosx1sin2y1");
  const DofMap dofs(mesh, cfg);
  const VectorXd bv = boundary_values(mesh, dofs, cfg, mc.clamped());
  const WeakFunction q = project_weak(mesh, cfg, mc.u, mc.grad, cfg.error_quad_degree());
  const auto& lay = dofs.layout();
  for (int e = 0; e < mesh.num_edges(); ++e) {
    if (!mesh.edge(e).is_boundary()) continue;
    const VectorXd a = bv.segment(lay.vb_offset(e), lay.edge_block());
    const VectorXd b = q.coeffs.segment(lay.vb_offset(e), lay.edge_block());
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Assembly, ReductionAndExpansion) {
  const Mesh mesh = generate_uniform_triangular(Domain::unit_square, 2);
  const GwgConfig cfg = scheme(2, 0, 0, 0);
  AssembledSystem sys(mesh, cfg);
  const ManufacturedCase& mc = patch_quadratic_case();
  sys.assemble_load(mc.f);
  sys.apply_boundary_conditions(mc.clamped());
  const auto& free = sys.free_dofs();
  ASSERT_EQ(sys.matrix().rows(), static_cast<int>(free.size()));

  // rhs = b_free - A_fc u_c
  const MatrixXd a(sys.full_matrix());
  VectorXd want = -a * sys.boundary();
  want += sys.load();
  for (std::size_t i = 0; i < free.size(); ++i) EXPECT_NEAR(sys.rhs()(i), want(free[i]), 1e-10);

  VectorXd x = VectorXd::LinSpaced(free.size(), 1.0, 2.0);
  const WeakFunction w = sys.expand(x);
  for (std::size_t i = 0; i < free.size(); ++i) EXPECT_EQ(w.coeffs(free[i]), x(i));
  const auto& mask = sys.dofs().boundary_mask();
  for (int i = 0; i < sys.dofs().size(); ++i) {
    if (mask[i]) EXPECT_EQ(w.coeffs(i), sys.boundary()(i));
  }
}

TEST(Assembly, CoordinateDump) {
  const Mesh mesh = fixtures::two_triangles();
  const AssembledSystem sys(mesh, scheme(2, 0, 0, 0));
  std::ostringstream out;
  write_coordinate(sys.full_matrix(), out);
  std::istringstream in(out.str());
  int rows = 0, r = 0, c = 0;
  double v = 0.0;
  while (in >> r >> c >> v) {
    ++rows;
    EXPECT_DOUBLE_EQ(sys.full_matrix().coeff(r, c), v);
  }
  EXPECT_EQ(rows, sys.full_matrix().nonZeros());
}
