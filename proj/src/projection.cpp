#include "gwg/projection.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwg {

namespace {

VectorXd element_moments(const ElementGeometry& geom, const ElementBasis& basis,
                         const ScalarField& f, int quad_degree) {
  const QuadratureRule rule = element_rule(geom, quad_degree);
  VectorXd rhs = VectorXd::Zero(basis.size());
  for (int q = 0; q < rule.size(); ++q) {
    rhs.noalias() += (rule.weights[q] * f(rule.points[q])) * basis.eval(rule.points[q]);
  }
  return rhs;
}

}  // namespace

VectorXd project_element(const ElementGeometry& geom, const ScalarField& f, int degree,
                         int quad_degree) {
  const ElementBasis basis = element_basis(geom, degree);
  const MatrixXd mass = mass_matrix(geom, basis);
  Eigen::LLT<MatrixXd> llt(mass);
  if (llt.info() != Eigen::Success) throw std::runtime_error("element mass matrix is singular");
  return llt.solve(element_moments(geom, basis, f, quad_degree));
}

VectorXd project_edge(const EdgeFrame& frame, const ScalarField& f, int degree, int quad_degree) {
  const EdgeBasis basis(degree);
  const EdgeRule rule = edge_rule(frame, std::max(quad_degree, 2 * degree));
  VectorXd c = VectorXd::Zero(basis.size());
  for (int q = 0; q < rule.size(); ++q) {
    c.noalias() += (rule.weights[q] * f(rule.points[q])) * basis.eval(rule.params[q]);
  }
  for (int i = 0; i < basis.size(); ++i) c(i) /= basis.gram_diagonal(i, frame.length);
  return c;
}

ProjectionWorkspace::ProjectionWorkspace(const Mesh& mesh, const GwgConfig& cfg)
    : mesh_(&mesh), cfg_(cfg) {
  degrees_ = {cfg.k, cfg.n, cfg.s()};
  std::sort(degrees_.begin(), degrees_.end());
  degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
  llt_.resize(degrees_.size());
  for (std::size_t d = 0; d < degrees_.size(); ++d) {
    llt_[d].reserve(mesh.num_elements());
    for (int t = 0; t < mesh.num_elements(); ++t) {
      const auto& geom = mesh.geometry(t);
      llt_[d].emplace_back(mass_matrix(geom, element_basis(geom, degrees_[d])));
      if (llt_[d].back().info() != Eigen::Success) {
        throw std::runtime_error("element mass matrix is singular");
      }
    }
  }
}

int ProjectionWorkspace::slot(int degree) const {
  const auto it = std::find(degrees_.begin(), degrees_.end(), degree);
  if (it == degrees_.end()) {
    throw std::invalid_argument("projection degree not held by this workspace");
  }
  return static_cast<int>(it - degrees_.begin());
}

const Eigen::LLT<MatrixXd>& ProjectionWorkspace::factor(int t, int degree) const {
  return llt_[slot(degree)][t];
}

VectorXd ProjectionWorkspace::project_element(int t, const ScalarField& f, int degree) const {
  const auto& geom = mesh_->geometry(t);
  const ElementBasis basis = element_basis(geom, degree);
  return factor(t, degree).solve(element_moments(geom, basis, f, cfg_.error_quad_degree()));
}

VectorXd ProjectionWorkspace::project_edge(int e, const ScalarField& f, int degree) const {
  return gwg::project_edge(mesh_->edge_frame(e), f, degree, cfg_.error_quad_degree());
}

VectorXd ProjectionWorkspace::edge_gram(int e, int degree) const {
  const double len = mesh_->edge_frame(e).length;
  const EdgeBasis basis(degree);
  VectorXd g(basis.size());
  for (int i = 0; i < basis.size(); ++i) g(i) = basis.gram_diagonal(i, len);
  return g;
}

VectorXd project_weak_local(const ElementGeometry& geom, const std::vector<EdgeFrame>& frames,
                            const GwgConfig& cfg, const ScalarField& phi,
                            const GradientField& grad, int quad_degree) {
  const LocalDofLayout local(geom.num_edges(), cfg);
  VectorXd dofs(local.size());
  dofs.head(local.v0_size) = project_element(geom, phi, cfg.k, quad_degree);
  for (int le = 0; le < local.num_edges; ++le) {
    const EdgeFrame& frame = frames[le];
    dofs.segment(local.vb_offset(le), local.vb_size) = project_edge(frame, phi, cfg.m, quad_degree);
    for (int c = 0; c < 2; ++c) {
      const auto component = [&grad, c](const Point& p) { return grad(p)(c); };
      dofs.segment(local.vg_offset(le, c), local.vg_size) =
          project_edge(frame, component, cfg.l, quad_degree);
    }
  }
  return dofs;
}

WeakFunction project_weak(const Mesh& mesh, const GwgConfig& cfg, const ScalarField& phi,
                          const GradientField& grad, int quad_degree) {
  WeakFunction w(DofLayout(mesh.num_elements(), mesh.num_edges(), cfg));
  for (int t = 0; t < mesh.num_elements(); ++t) {
    w.v0(t) = project_element(mesh.geometry(t), phi, cfg.k, quad_degree);
  }
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const EdgeFrame frame = mesh.edge_frame(e);
    w.vb(e) = project_edge(frame, phi, cfg.m, quad_degree);
    for (int c = 0; c < 2; ++c) {
      const auto component = [&grad, c](const Point& p) { return grad(p)(c); };
      w.vg(e, c) = project_edge(frame, component, cfg.l, quad_degree);
    }
  }
  return w;
}

}  // namespace gwg
