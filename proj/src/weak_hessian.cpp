#include "gwg/weak_hessian.hpp"

#include <stdexcept>

#include "gwg/quadrature.hpp"

namespace gwg {

std::vector<EdgeOperators> build_edge_operators(const ElementGeometry& geom,
                                                const std::vector<EdgeFrame>& frames,
                                                const GwgConfig& cfg) {
  if (static_cast<int>(frames.size()) != geom.num_edges()) {
    throw std::invalid_argument("one edge frame per element edge expected");
  }
  const ElementBasis basis = element_basis(geom, cfg.k);
  const EdgeBasis eb(cfg.m);
  const EdgeBasis eg(cfg.l);

  std::vector<EdgeOperators> ops(frames.size());
  for (int le = 0; le < geom.num_edges(); ++le) {
    EdgeOperators& op = ops[le];
    op.frame = frames[le];
    op.normal = geom.edges[le].normal;
    op.trace_b = MatrixXd::Zero(eb.size(), basis.size());
    op.trace_g = {MatrixXd::Zero(eg.size(), basis.size()), MatrixXd::Zero(eg.size(), basis.size())};

    const EdgeRule rule = edge_rule(op.frame, cfg.edge_quad_degree());
    for (int q = 0; q < rule.size(); ++q) {
      const double w = rule.weights[q];
      const VectorXd phi = basis.eval(rule.points[q]);
      const auto grad = basis.eval_grad(rule.points[q]);
      const VectorXd lb = eb.eval(rule.params[q]);
      const VectorXd lg = eg.eval(rule.params[q]);
      op.trace_b.noalias() += w * lb * phi.transpose();
      op.trace_g[0].noalias() += w * lg * grad.col(0).transpose();
      op.trace_g[1].noalias() += w * lg * grad.col(1).transpose();
    }

    op.gram_b.resize(eb.size());
    op.gram_g.resize(eg.size());
    for (int i = 0; i < eb.size(); ++i) op.gram_b(i) = eb.gram_diagonal(i, op.frame.length);
    for (int i = 0; i < eg.size(); ++i) op.gram_g(i) = eg.gram_diagonal(i, op.frame.length);
    op.trace_b = op.gram_b.cwiseInverse().asDiagonal() * op.trace_b;
    for (auto& tg : op.trace_g) tg = op.gram_g.cwiseInverse().asDiagonal() * tg;
  }
  return ops;
}

MatrixXd build_delta_g(const ElementGeometry& geom, const std::vector<EdgeOperators>& edges,
                       const GwgConfig& cfg, int i, int j) {
  const LocalDofLayout layout(geom.num_edges(), cfg);
  const ElementBasis basis_n = element_basis(geom, cfg.n);
  const EdgeBasis eb(cfg.m);
  const EdgeBasis eg(cfg.l);

  MatrixXd rhs = MatrixXd::Zero(basis_n.size(), layout.size());
  for (int le = 0; le < layout.num_edges; ++le) {
    const EdgeOperators& op = edges[le];
    // b_pair(beta, a) = <L_a n_i, d_j phi_beta>_e, g_pair(beta, a) = <L_a, phi_beta n_j>_e.
    MatrixXd b_pair = MatrixXd::Zero(basis_n.size(), eb.size());
    MatrixXd g_pair = MatrixXd::Zero(basis_n.size(), eg.size());
    const EdgeRule rule = edge_rule(op.frame, cfg.edge_quad_degree());
    for (int q = 0; q < rule.size(); ++q) {
      const double w = rule.weights[q];
      const auto grad = basis_n.eval_grad(rule.points[q]);
      const VectorXd phi = basis_n.eval(rule.points[q]);
      b_pair.noalias() += (w * op.normal(i)) * grad.col(j) * eb.eval(rule.params[q]).transpose();
      g_pair.noalias() += (w * op.normal(j)) * phi * eg.eval(rule.params[q]).transpose();
    }
    rhs.leftCols(layout.v0_size).noalias() += b_pair * op.trace_b - g_pair * op.trace_g[i];
    rhs.middleCols(layout.vb_offset(le), layout.vb_size) -= b_pair;
    rhs.middleCols(layout.vg_offset(le, i), layout.vg_size) += g_pair;
  }

  Eigen::LLT<MatrixXd> mass(mass_matrix(geom, basis_n));
  if (mass.info() != Eigen::Success) throw std::runtime_error("P_n mass matrix is singular");
  return mass.solve(rhs);
}

LocalWeakHessian::LocalWeakHessian(const ElementGeometry& geom,
                                   const std::vector<EdgeFrame>& frames, const GwgConfig& cfg)
    : geom_(geom),
      layout_(geom.num_edges(), cfg),
      edges_(build_edge_operators(geom, frames, cfg)),
      basis_k2_(element_basis(geom, cfg.k - 2)),
      basis_n_(element_basis(geom, cfg.n)),
      basis_r_(element_basis(geom, std::max(cfg.k - 2, cfg.n))) {
  const ElementBasis basis_k = element_basis(geom, cfg.k);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      h0_[2 * i + j] = basis_k.second_derivative_map(i, j);
      delta_[2 * i + j] = build_delta_g(geom, edges_, cfg, i, j);
    }
  }
}

WeakSecondDerivative LocalWeakHessian::apply(int i, int j, const VectorXd& dofs) const {
  if (dofs.size() != layout_.size()) throw std::invalid_argument("local DOF vector size mismatch");
  return {h0(i, j) * dofs.head(layout_.v0_size), delta(i, j) * dofs};
}

MatrixXd LocalWeakHessian::combined(int i, int j) const {
  MatrixXd z = MatrixXd::Zero(basis_r_.size(), layout_.size());
  z.topLeftCorner(basis_k2_.size(), layout_.v0_size) = h0(i, j);
  z.topRows(basis_n_.size()) += delta(i, j);
  return z;
}

double LocalWeakHessian::evaluate(const WeakSecondDerivative& d, const Point& p) const {
  return basis_k2_.eval(p).dot(d.interior) + basis_n_.eval(p).dot(d.correction);
}

}  // namespace gwg
