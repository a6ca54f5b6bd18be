#include "gwg/errnorms.hpp"

#include <cmath>
#include <stdexcept>

namespace gwg {

double triple_bar(const SparseSymMatrix& full_stiffness, const WeakFunction& e) {
  if (full_stiffness.rows() != e.coeffs.size()) {
    throw std::invalid_argument("stiffness and weak function sizes differ");
  }
  const double q = e.coeffs.dot(full_stiffness * e.coeffs);
  return std::sqrt(std::max(q, 0.0));
}

double triple_bar(const Mesh& mesh, const GwgConfig& cfg, const WeakFunction& e) {
  const DofMap dofs(mesh, cfg);
  return triple_bar(assemble_stiffness(mesh, dofs, cfg), e);
}

double l2_e0(const Mesh& mesh, const WeakFunction& e) {
  const int k = e.layout.k;
  double sum = 0.0;
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const auto& geom = mesh.geometry(t);
    const MatrixXd mass = mass_matrix(geom, element_basis(geom, k));
    const VectorXd c = e.v0(t);
    sum += c.dot(mass * c);
  }
  return std::sqrt(std::max(sum, 0.0));
}

namespace {

// sum_T h_T sum_{e in dT} ||p_e||^2 where p_e has Legendre coefficients coeffs(e).
template <typename Coeffs>
double weighted_edge_sum(const Mesh& mesh, Coeffs&& coeffs) {
  std::vector<double> edge_sq(mesh.num_edges());
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const double len = mesh.edge_frame(e).length;
    edge_sq[e] = 0.0;
    coeffs(e, [&](const VectorXd& c) {
      for (int i = 0; i < c.size(); ++i) edge_sq[e] += c(i) * c(i) * len / (2.0 * i + 1.0);
    });
  }
  double sum = 0.0;
  for (int t = 0; t < mesh.num_elements(); ++t) {
    double local = 0.0;
    for (const auto& ref : mesh.element_edges(t)) local += edge_sq[ref.edge];
    sum += mesh.geometry(t).diameter * local;
  }
  return std::sqrt(sum);
}

}  // namespace

double eb_edge(const Mesh& mesh, const WeakFunction& e) {
  return weighted_edge_sum(mesh, [&](int edge, auto&& add) { add(VectorXd(e.vb(edge))); });
}

double eg_edge(const Mesh& mesh, const WeakFunction& e) {
  return weighted_edge_sum(mesh, [&](int edge, auto&& add) {
    add(VectorXd(e.vg(edge, 0)));
    add(VectorXd(e.vg(edge, 1)));
  });
}

std::pair<double, double> center_seminorms(const Mesh& mesh, const WeakFunction& uh,
                                           const GradientField& grad_u,
                                           const HessianField& hess_u) {
  const int k = uh.layout.k;
  double h2 = 0.0;
  double h1 = 0.0;
  for (int t = 0; t < mesh.num_elements(); ++t) {
    const auto& geom = mesh.geometry(t);
    const ElementBasis basis = element_basis(geom, k);
    const Point& mc = geom.centroid;
    const VectorXd c = uh.v0(t);

    const Eigen::Matrix2d hu = hess_u(mc);
    const Eigen::RowVector3d hh = c.transpose() * basis.eval_hess(mc);
    const double dxx = hh(0) - hu(0, 0);
    const double dxy = hh(1) - hu(0, 1);
    const double dyx = hh(1) - hu(1, 0);
    const double dyy = hh(2) - hu(1, 1);
    h2 += (dxx * dxx + dxy * dxy + dyx * dyx + dyy * dyy) * geom.area;

    const Eigen::RowVector2d gh = c.transpose() * basis.eval_grad(mc);
    const Vec2 gu = grad_u(mc);
    h1 += ((gh(0) - gu(0)) * (gh(0) - gu(0)) + (gh(1) - gu(1)) * (gh(1) - gu(1))) * geom.area;
  }
  return {std::sqrt(h2), std::sqrt(h1)};
}

std::vector<double> rates(std::span<const double> errors) {
  std::vector<double> r;
  for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
    const double a = errors[i];
    const double b = errors[i + 1];
    r.push_back(a > 0.0 && b > 0.0 ? std::log2(a / b) : kUndefinedRate);
  }
  return r;
}

}  // namespace gwg
