#pragma once

#include <functional>
#include <vector>

#include <Eigen/Cholesky>

#include "gwg/config.hpp"
#include "gwg/dofs.hpp"
#include "gwg/quadrature.hpp"

namespace gwg {

using GradientField = std::function<Vec2(const Point&)>;

/// L2 projection of f onto P_degree(T) in the element's scaled monomial basis. The
/// right-hand side is integrated with exactness quad_degree.
VectorXd project_element(const ElementGeometry& geom, const ScalarField& f, int degree,
                         int quad_degree);

/// L2 projection of f onto P_degree(e) in Legendre coefficients of the frame parameter.
VectorXd project_edge(const EdgeFrame& frame, const ScalarField& f, int degree, int quad_degree);

/// Cached Cholesky factors of element mass matrices for the degrees k, n and
/// s = min{k, m, l, n}, and the diagonal edge Gram entries for m and l.
class ProjectionWorkspace {
 public:
  ProjectionWorkspace(const Mesh& mesh, const GwgConfig& cfg);

  int s() const { return cfg_.s(); }

  /// Q0 (degree k), projection onto P_n, or Q_s (degree s). Any other degree throws.
  VectorXd project_element(int t, const ScalarField& f, int degree) const;
  VectorXd project_edge(int e, const ScalarField& f, int degree) const;

  const Eigen::LLT<MatrixXd>& factor(int t, int degree) const;
  /// |e| / (2i + 1) for i = 0..degree.
  VectorXd edge_gram(int e, int degree) const;

 private:
  int slot(int degree) const;

  const Mesh* mesh_;
  GwgConfig cfg_;
  std::vector<int> degrees_;                            // distinct element degrees
  std::vector<std::vector<Eigen::LLT<MatrixXd>>> llt_;  // [slot][element]
};

/// Local DOFs (LocalDofLayout order) of Q_h phi = {Q0 phi, Q_b phi, Q_g grad phi} on one
/// element; frames give the edge parameterization of each local edge.
VectorXd project_weak_local(const ElementGeometry& geom, const std::vector<EdgeFrame>& frames,
                            const GwgConfig& cfg, const ScalarField& phi,
                            const GradientField& grad, int quad_degree);

/// Q_h phi on the whole mesh, boundary edges included.
WeakFunction project_weak(const Mesh& mesh, const GwgConfig& cfg, const ScalarField& phi,
                          const GradientField& grad, int quad_degree);

}  // namespace gwg
