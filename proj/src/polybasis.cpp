#include "gwg/polybasis.hpp"

#include <stdexcept>

#include "gwg/quadrature.hpp"

namespace gwg {

namespace {

// Powers s^0..s^n.
VectorXd powers(double s, int n) {
  VectorXd p(n + 1);
  p(0) = 1.0;
  for (int i = 1; i <= n; ++i) p(i) = p(i - 1) * s;
  return p;
}

}  // namespace

ElementBasis::ElementBasis(int degree, const Point& center, double scale)
    : degree_(degree), center_(center), scale_(scale) {
  if (degree < 0) throw std::invalid_argument("basis degree must be nonnegative");
  if (!(scale > 0.0)) throw std::invalid_argument("basis scale must be positive");
  exponents_.reserve(poly_dimension(degree));
  for (int d = 0; d <= degree; ++d) {
    for (int a = d; a >= 0; --a) exponents_.emplace_back(a, d - a);
  }
}

int ElementBasis::index_of(int a, int b) {
  const int d = a + b;
  return poly_dimension(d - 1) + (d - a);
}

VectorXd ElementBasis::eval(const Point& p) const {
  const VectorXd px = powers((p.x() - center_.x()) / scale_, degree_);
  const VectorXd py = powers((p.y() - center_.y()) / scale_, degree_);
  VectorXd v(size());
  for (int i = 0; i < size(); ++i) {
    const auto [a, b] = exponents_[i];
    v(i) = px(a) * py(b);
  }
  return v;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> ElementBasis::eval_grad(const Point& p) const {
  const VectorXd px = powers((p.x() - center_.x()) / scale_, degree_);
  const VectorXd py = powers((p.y() - center_.y()) / scale_, degree_);
  Eigen::Matrix<double, Eigen::Dynamic, 2> g(size(), 2);
  for (int i = 0; i < size(); ++i) {
    const auto [a, b] = exponents_[i];
    g(i, 0) = a > 0 ? a * px(a - 1) * py(b) / scale_ : 0.0;
    g(i, 1) = b > 0 ? b * px(a) * py(b - 1) / scale_ : 0.0;
  }
  return g;
}

Eigen::Matrix<double, Eigen::Dynamic, 3> ElementBasis::eval_hess(const Point& p) const {
  const VectorXd px = powers((p.x() - center_.x()) / scale_, degree_);
  const VectorXd py = powers((p.y() - center_.y()) / scale_, degree_);
  const double s2 = scale_ * scale_;
  Eigen::Matrix<double, Eigen::Dynamic, 3> h(size(), 3);
  for (int i = 0; i < size(); ++i) {
    const auto [a, b] = exponents_[i];
    h(i, 0) = a > 1 ? a * (a - 1) * px(a - 2) * py(b) / s2 : 0.0;
    h(i, 1) = (a > 0 && b > 0) ? a * b * px(a - 1) * py(b - 1) / s2 : 0.0;
    h(i, 2) = b > 1 ? b * (b - 1) * px(a) * py(b - 2) / s2 : 0.0;
  }
  return h;
}

MatrixXd ElementBasis::eval(const std::vector<Point>& points) const {
  MatrixXd v(points.size(), size());
  for (std::size_t q = 0; q < points.size(); ++q) v.row(q) = eval(points[q]).transpose();
  return v;
}

MatrixXd ElementBasis::derivative_map(int i) const {
  MatrixXd d = MatrixXd::Zero(poly_dimension(degree_ - 1), size());
  for (int idx = 0; idx < size(); ++idx) {
    const auto [a, b] = exponents_[idx];
    if (i == 0 && a > 0) d(index_of(a - 1, b), idx) = a / scale_;
    if (i == 1 && b > 0) d(index_of(a, b - 1), idx) = b / scale_;
  }
  return d;
}

MatrixXd ElementBasis::second_derivative_map(int i, int j) const {
  MatrixXd d = MatrixXd::Zero(poly_dimension(degree_ - 2), size());
  const int dx = (i == 0) + (j == 0);
  const int dy = (i == 1) + (j == 1);
  const double s2 = scale_ * scale_;
  for (int idx = 0; idx < size(); ++idx) {
    const auto [a, b] = exponents_[idx];
    if (a < dx || b < dy) continue;
    double c = 1.0;
    for (int r = 0; r < dx; ++r) c *= a - r;
    for (int r = 0; r < dy; ++r) c *= b - r;
    d(index_of(a - dx, b - dy), idx) = c / s2;
  }
  return d;
}

ElementBasis element_basis(const ElementGeometry& geom, int degree) {
  return ElementBasis(degree, geom.centroid, geom.diameter);
}

VectorXd EdgeBasis::eval(double t) const {
  VectorXd v(size());
  v(0) = 1.0;
  if (degree_ >= 1) v(1) = t;
  for (int k = 2; k <= degree_; ++k) {
    v(k) = ((2.0 * k - 1.0) * t * v(k - 1) - (k - 1.0) * v(k - 2)) / k;
  }
  return v;
}

MatrixXd mass_matrix(const ElementGeometry& geom, const ElementBasis& basis) {
  const QuadratureRule rule = element_rule(geom, 2 * basis.degree());
  MatrixXd m = MatrixXd::Zero(basis.size(), basis.size());
  for (int q = 0; q < rule.size(); ++q) {
    const VectorXd v = basis.eval(rule.points[q]);
    m.noalias() += rule.weights[q] * v * v.transpose();
  }
  return m;
}

}  // namespace gwg
