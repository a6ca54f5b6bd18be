#include "gwg/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "gwg/errors.hpp"

namespace gwg {

namespace {

constexpr int kMaxPoints = kMaxQuadratureDegree / 2 + 2;

// Returns (P_n(x), P_n'(x)) via the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxQuadratureDegree) {
    throw ConfigError("quadrature exactness " + std::to_string(degree) +
                      " outside supported range [0, " + std::to_string(kMaxQuadratureDegree) + "]");
  }
}

}  // namespace

const GaussLegendre& gauss_legendre(int num_points) {
  static const auto table = [] {
    std::array<GaussLegendre, kMaxPoints + 1> t;
    for (int n = 1; n <= kMaxPoints; ++n) t[n] = compute_gauss_legendre(n);
    return t;
  }();
  if (num_points < 1 || num_points > kMaxPoints) {
    throw ConfigError("unsupported Gauss-Legendre size " + std::to_string(num_points));
  }
  return table[num_points];
}

QuadratureRule triangle_rule(const Point& a, const Point& b, const Point& c, int degree) {
  check_degree(degree);
  // Collapsing the square onto the triangle adds one degree in the first direction.
  const int n = (degree + 3) / 2;
  const GaussLegendre& gl = gauss_legendre(n);
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const double jac = std::abs(ab.x() * ac.y() - ab.y() * ac.x());

  QuadratureRule rule;
  rule.degree = degree;
  rule.points.reserve(n * n);
  rule.weights.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    const double u = 0.5 * (gl.nodes[i] + 1.0);
    for (int j = 0; j < n; ++j) {
      const double v = 0.5 * (gl.nodes[j] + 1.0);
      const double xi = u;
      const double eta = v * (1.0 - u);
      rule.points.push_back(a + xi * ab + eta * ac);
      rule.weights.push_back(0.25 * gl.weights[i] * gl.weights[j] * (1.0 - u) * jac);
    }
  }
  return rule;
}

QuadratureRule element_rule(const ElementGeometry& geom, int degree) {
  check_degree(degree);
  const auto& v = geom.vertices;
  if (v.size() == 3) return triangle_rule(v[0], v[1], v[2], degree);

  QuadratureRule rule;
  rule.degree = degree;
  for (std::size_t i = 0; i < v.size(); ++i) {
    QuadratureRule part = triangle_rule(geom.centroid, v[i], v[(i + 1) % v.size()], degree);
    rule.points.insert(rule.points.end(), part.points.begin(), part.points.end());
    rule.weights.insert(rule.weights.end(), part.weights.begin(), part.weights.end());
  }
  return rule;
}

EdgeRule edge_rule(const EdgeFrame& frame, int degree) {
  check_degree(degree);
  const int n = degree / 2 + 1;
  const GaussLegendre& gl = gauss_legendre(n);
  EdgeRule rule;
  rule.degree = degree;
  rule.params = gl.nodes;
  rule.points.reserve(n);
  rule.weights.reserve(n);
  for (int i = 0; i < n; ++i) {
    rule.points.push_back(frame.at(gl.nodes[i]));
    rule.weights.push_back(0.5 * frame.length * gl.weights[i]);
  }
  return rule;
}

double integrate_element(const ElementGeometry& geom, const ScalarField& f, int degree) {
  const QuadratureRule rule = element_rule(geom, degree);
  double sum = 0.0;
  for (int q = 0; q < rule.size(); ++q) sum += rule.weights[q] * f(rule.points[q]);
  return sum;
}

double integrate_edge(const EdgeFrame& frame, const ScalarField& f, int degree) {
  const EdgeRule rule = edge_rule(frame, degree);
  double sum = 0.0;
  for (int q = 0; q < rule.size(); ++q) sum += rule.weights[q] * f(rule.points[q]);
  return sum;
}

}  // namespace gwg
