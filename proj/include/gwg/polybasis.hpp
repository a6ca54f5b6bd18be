#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gwg/mesh.hpp"

namespace gwg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// dim P_r in two variables.
constexpr int poly_dimension(int degree) { return degree < 0 ? 0 : (degree + 1) * (degree + 2) / 2; }

/// Scaled monomials ((x - xc) / h)^a ((y - yc) / h)^b, a + b <= degree, in graded order
/// (1, x, y, x^2, xy, y^2, ...). The ordering is hierarchical: the first poly_dimension(r)
/// functions span P_r for every r <= degree.
class ElementBasis {
 public:
  ElementBasis(int degree, const Point& center, double scale);

  int degree() const { return degree_; }
  int size() const { return poly_dimension(degree_); }
  const Point& center() const { return center_; }
  double scale() const { return scale_; }

  /// Exponents (a, b) of basis function idx.
  std::pair<int, int> exponents(int idx) const { return exponents_[idx]; }
  static int index_of(int a, int b);

  VectorXd eval(const Point& p) const;
  /// size() x 2; columns d/dx, d/dy.
  Eigen::Matrix<double, Eigen::Dynamic, 2> eval_grad(const Point& p) const;
  /// size() x 3; columns d2/dxx, d2/dxy, d2/dyy.
  Eigen::Matrix<double, Eigen::Dynamic, 3> eval_hess(const Point& p) const;

  /// Values at many points: points.size() x size().
  MatrixXd eval(const std::vector<Point>& points) const;

  /// Coefficient map of d/dx_i (i in {0, 1}) from P_degree into P_{degree-1}.
  MatrixXd derivative_map(int i) const;
  /// Coefficient map of d2/dx_i dx_j from P_degree into P_{degree-2}.
  MatrixXd second_derivative_map(int i, int j) const;

 private:
  int degree_;
  Point center_;
  double scale_;
  std::vector<std::pair<int, int>> exponents_;
};

/// Basis of an element: centered at its centroid, scaled by its diameter.
ElementBasis element_basis(const ElementGeometry& geom, int degree);

/// Legendre polynomials L_0..L_r in the edge frame parameter t in [-1, 1]; the Gram
/// matrix on an edge of length |e| is diag(|e| / (2i + 1)).
class EdgeBasis {
 public:
  explicit EdgeBasis(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  int size() const { return degree_ + 1; }

  VectorXd eval(double t) const;
  double gram_diagonal(int i, double length) const { return length / (2.0 * i + 1.0); }

 private:
  int degree_;
};

/// Element mass matrix of the basis, integrated exactly.
MatrixXd mass_matrix(const ElementGeometry& geom, const ElementBasis& basis);

}  // namespace gwg
