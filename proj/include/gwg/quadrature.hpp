#pragma once

#include <functional>
#include <vector>

#include "gwg/mesh.hpp"

namespace gwg {

/// Highest polynomial exactness the rules below are built for.
inline constexpr int kMaxQuadratureDegree = 40;

struct GaussLegendre {
  std::vector<double> nodes;  // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, exact to degree 2n - 1.
const GaussLegendre& gauss_legendre(int num_points);

struct QuadratureRule {
  std::vector<Point> points;
  std::vector<double> weights;
  int degree = 0;

  int size() const { return static_cast<int>(points.size()); }
};

struct EdgeRule {
  std::vector<double> params;  // frame parameter t in [-1, 1]
  std::vector<Point> points;
  std::vector<double> weights;  // include the length / 2 Jacobian
  int degree = 0;

  int size() const { return static_cast<int>(points.size()); }
};

/// Collapsed (Duffy) Gauss rule on the triangle abc, exact to the given degree.
QuadratureRule triangle_rule(const Point& a, const Point& b, const Point& c, int degree);

/// Triangles use the collapsed rule directly; other polygons are split into a centroid fan.
/// Throws ConfigError if degree exceeds kMaxQuadratureDegree.
QuadratureRule element_rule(const ElementGeometry& geom, int degree);

EdgeRule edge_rule(const EdgeFrame& frame, int degree);

using ScalarField = std::function<double(const Point&)>;

double integrate_element(const ElementGeometry& geom, const ScalarField& f, int degree);
double integrate_edge(const EdgeFrame& frame, const ScalarField& f, int degree);

}  // namespace gwg
