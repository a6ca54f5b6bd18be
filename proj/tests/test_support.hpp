#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "gwg/mesh.hpp"
#include "gwg/polybasis.hpp"

namespace gwg::fixtures {

// Unit square split along the rising diagonal.
inline Mesh two_triangles() {
  return Mesh(Domain::unit_square, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}, {0, 2, 3}});
}

inline Mesh single_triangle() {
  return Mesh(Domain::unit_square, {{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
}

// Random convex element: a perturbed triangle, or a convex quadrilateral.
inline std::vector<Point> random_element(std::mt19937& rng, bool quad) {
  std::uniform_real_distribution<double> u(-0.15, 0.15);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  std::uniform_real_distribution<double> size(0.05, 1.5);
  const double s = size(rng);
  const Point o(shift(rng), shift(rng));
  std::vector<Point> ref = quad ? std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}
                                : std::vector<Point>{{0, 0}, {1, 0}, {0, 1}};
  for (auto& p : ref) p = o + s * (p + Point(u(rng), u(rng)));
  return ref;
}

// Random polynomial of total degree deg as monomials around the origin.
struct Poly {
  std::vector<std::pair<int, int>> exps;
  std::vector<double> coef;

  double operator()(const Point& p) const {
    double v = 0.0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      v += coef[i] * std::pow(p.x(), exps[i].first) * std::pow(p.y(), exps[i].second);
    }
    return v;
  }
  Vec2 grad(const Point& p) const {
    Vec2 g(0, 0);
    for (std::size_t i = 0; i < coef.size(); ++i) {
      const auto [a, b] = exps[i];
      if (a > 0) g.x() += coef[i] * a * std::pow(p.x(), a - 1) * std::pow(p.y(), b);
      if (b > 0) g.y() += coef[i] * b * std::pow(p.x(), a) * std::pow(p.y(), b - 1);
    }
    return g;
  }
  // d2/dx_i dx_j
  double d2(const Point& p, int i, int j) const {
    double v = 0.0;
    for (std::size_t q = 0; q < coef.size(); ++q) {
      int a = exps[q].first, b = exps[q].second;
      double c = coef[q];
      for (int d : {i, j}) {
        int& e = d == 0 ? a : b;
        c *= e;
        --e;
      }
      if (c == 0.0) continue;
      v += c * std::pow(p.x(), a) * std::pow(p.y(), b);
    }
    return v;
  }
};

inline Poly random_poly(std::mt19937& rng, int deg) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Poly p;
  for (int d = 0; d <= deg; ++d) {
    for (int b = 0; b <= d; ++b) {
      p.exps.emplace_back(d - b, b);
      p.coef.push_back(u(rng));
    }
  }
  return p;
}

}  // namespace gwg::fixtures
