#include "gwg/assembly.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gwg/quadrature.hpp"

namespace gwg {

MatrixXd LocalStiffness::weighted(const GwgConfig& cfg, double h_t, unsigned terms) const {
  MatrixXd k = MatrixXd::Zero(hessian.rows(), hessian.cols());
  if (terms & kHessianTerm) k += hessian;
  if (terms & kTraceStabilizer) k += cfg.rho1 * std::pow(h_t, cfg.gamma1) * trace_stabilizer;
  if (terms & kGradientStabilizer) {
    k += cfg.rho2 * std::pow(h_t, cfg.gamma2) * gradient_stabilizer;
  }
  return k;
}

LocalStiffness local_stiffness(const LocalWeakHessian& hess) {
  const LocalDofLayout& lay = hess.layout();
  const int n = lay.size();
  LocalStiffness ls;

  const MatrixXd mass = mass_matrix(hess.geometry(), hess.combined_basis());
  ls.hessian = MatrixXd::Zero(n, n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const MatrixXd z = hess.combined(i, j);
      ls.hessian.noalias() += z.transpose() * mass * z;
    }
  }

  ls.trace_stabilizer = MatrixXd::Zero(n, n);
  ls.gradient_stabilizer = MatrixXd::Zero(n, n);
  for (int le = 0; le < lay.num_edges; ++le) {
    const EdgeOperators& op = hess.edges()[le];
    // Each jump operator maps local DOFs to Legendre coefficients of (Q v0 - v_edge).
    MatrixXd jump_b = MatrixXd::Zero(lay.vb_size, n);
    jump_b.leftCols(lay.v0_size) = op.trace_b;
    jump_b.middleCols(lay.vb_offset(le), lay.vb_size) -= MatrixXd::Identity(lay.vb_size, lay.vb_size);
    ls.trace_stabilizer.noalias() += jump_b.transpose() * op.gram_b.asDiagonal() * jump_b;

    for (int c = 0; c < 2; ++c) {
      MatrixXd jump_g = MatrixXd::Zero(lay.vg_size, n);
      jump_g.leftCols(lay.v0_size) = op.trace_g[c];
      jump_g.middleCols(lay.vg_offset(le, c), lay.vg_size) -=
          MatrixXd::Identity(lay.vg_size, lay.vg_size);
      ls.gradient_stabilizer.noalias() += jump_g.transpose() * op.gram_g.asDiagonal() * jump_g;
    }
  }

  // Symmetric by construction; remove rounding asymmetry so the global matrix is exact.
  for (MatrixXd* m : {&ls.hessian, &ls.trace_stabilizer, &ls.gradient_stabilizer}) {
    *m = 0.5 * (*m + m->transpose());
  }
  return ls;
}

SparseSymMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs, const GwgConfig& cfg,
                                   unsigned terms) {
  std::vector<Eigen::Triplet<double>> triplets;
  std::size_t expected = 0;
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const auto n = static_cast<std::size_t>(dofs.local_layout(t).size());
    expected += n * n;
  }
  triplets.reserve(expected);
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const LocalWeakHessian hess(mesh.geometry(t), mesh.element_frames(t), cfg);
    const MatrixXd k = local_stiffness(hess).weighted(cfg, mesh.geometry(t).diameter, terms);
    const std::vector<int> map = dofs.local_to_global(t);
    const int n = static_cast<int>(map.size());
    // Mirror the upper triangle; vectorized and scalar paths may round (r, c) and (c, r)
    // differently.
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const double v = r <= c ? k(r, c) : k(c, r);
        if (v != 0.0) triplets.emplace_back(map[r], map[c], v);
      }
    }
  }
  SparseSymMatrix a(dofs.size(), dofs.size());
  a.setFromTriplets(triplets.begin(), triplets.end());
  a.makeCompressed();
  return a;
}

VectorXd assemble_load(const Mesh& mesh, const DofMap& dofs, const GwgConfig& cfg,
                       const ScalarField& f) {
  VectorXd load = VectorXd::Zero(dofs.size());
  const DofLayout& lay = dofs.layout();
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const auto& geom = mesh.geometry(t);
    const ElementBasis basis = element_basis(geom, cfg.k);
    const QuadratureRule rule = element_rule(geom, cfg.error_quad_degree());
    auto block = load.segment(lay.v0_offset(t), lay.v0_size);
    for (int q = 0; q < rule.size(); ++q) {
      const double fq = f(rule.points[q]);
      if (!std::isfinite(fq)) {
        std::ostringstream os;
        os << std::setprecision(17) << "load is not finite at (" << rule.points[q].x() << ", "
           << rule.points[q].y() << ")";
        throw std::runtime_error(os.str());
      }
      block.noalias() += (rule.weights[q] * fq) * basis.eval(rule.points[q]);
    }
  }
  return load;
}

VectorXd boundary_values(const Mesh& mesh, const DofMap& dofs, const GwgConfig& cfg,
                         const ClampedData& data) {
  WeakFunction w(dofs.layout());
  const int quad = cfg.error_quad_degree();
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    if (!edge.is_boundary()) continue;
    const EdgeFrame frame = mesh.edge_frame(e);
    // The left element is the only one; its outward normal is the domain's.
    const Vec2 normal(frame.tangent.y(), -frame.tangent.x());
    const Vec2 tangent = frame.tangent;

    w.vb(e) = project_edge(frame, data.g1, cfg.m, quad);
    const VectorXd gn = project_edge(
        frame, [&](const Point& p) { return data.g2(p, normal); }, cfg.l, quad);
    const VectorXd gt = project_edge(
        frame, [&](const Point& p) { return data.grad_g1(p).dot(tangent); }, cfg.l, quad);
    for (int c = 0; c < 2; ++c) w.vg(e, c) = normal(c) * gn + tangent(c) * gt;
  }
  return w.coeffs;
}

AssembledSystem::AssembledSystem(const Mesh& mesh, const GwgConfig& cfg)
    : mesh_(&mesh),
      cfg_(cfg),
      dofs_(mesh, cfg),
      full_(assemble_stiffness(mesh, dofs_, cfg)),
      load_(VectorXd::Zero(dofs_.size())),
      boundary_(VectorXd::Zero(dofs_.size())),
      free_(dofs_.free_dofs()) {
  apply_boundary_values(VectorXd::Zero(dofs_.size()));
}

void AssembledSystem::set_load(VectorXd load) {
  if (load.size() != dofs_.size()) throw std::invalid_argument("load vector size mismatch");
  load_ = std::move(load);
  apply_boundary_values(boundary_);
}

void AssembledSystem::assemble_load(const ScalarField& f) {
  set_load(gwg::assemble_load(*mesh_, dofs_, cfg_, f));
}

void AssembledSystem::apply_boundary_conditions(const ClampedData& data) {
  apply_boundary_values(boundary_values(*mesh_, dofs_, cfg_, data));
}

void AssembledSystem::apply_boundary_values(VectorXd values) {
  boundary_ = std::move(values);
  const int n = dofs_.size();
  std::vector<int> free_index(n, -1);
  for (std::size_t i = 0; i < free_.size(); ++i) free_index[free_[i]] = static_cast<int>(i);

  const int nf = static_cast<int>(free_.size());
  rhs_.resize(nf);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(full_.nonZeros());
  for (int fi = 0; fi < nf; ++fi) {
    const int row = free_[fi];
    double b = load_(row);
    for (SparseSymMatrix::InnerIterator it(full_, row); it; ++it) {
      const int col = static_cast<int>(it.col());
      if (free_index[col] >= 0) {
        triplets.emplace_back(fi, free_index[col], it.value());
      } else {
        b -= it.value() * boundary_(col);
      }
    }
    rhs_(fi) = b;
  }
  reduced_ = SparseSymMatrix(nf, nf);
  reduced_.setFromTriplets(triplets.begin(), triplets.end());
  reduced_.makeCompressed();
}

WeakFunction AssembledSystem::expand(const VectorXd& free_solution) const {
  if (free_solution.size() != static_cast<Eigen::Index>(free_.size())) {
    throw std::invalid_argument("free solution size mismatch");
  }
  WeakFunction w(dofs_.layout());
  w.coeffs = boundary_;
  for (std::size_t i = 0; i < free_.size(); ++i) w.coeffs(free_[i]) = free_solution(i);
  return w;
}

void write_coordinate(const SparseSymMatrix& a, std::ostream& out) {
  out << std::setprecision(17);
  for (int r = 0; r < a.outerSize(); ++r) {
    for (SparseSymMatrix::InnerIterator it(a, r); it; ++it) {
      out << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
    }
  }
}

}  // namespace gwg
