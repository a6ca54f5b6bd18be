#pragma once

#include <algorithm>
#include <string>

namespace gwg {

enum class SolverKind { cg, dense };

/// Degrees and stabilizer parameters of a P_k | P_m | [P_l]^2 || P_n discretization.
struct GwgConfig {
  int k = 2;  // interior degree, >= 2
  int m = 0;  // edge trace degree
  int l = 0;  // edge gradient degree
  int n = 0;  // degree of the weak second derivative correction
  double rho1 = 1.0;
  double rho2 = 1.0;
  double gamma1 = -3.0;
  double gamma2 = -1.0;

  SolverKind solver = SolverKind::cg;
  double tol = 1e-12;
  int max_iters = 200000;
  int dense_cap = 5000;

  int s() const { return std::min({k, m, l, n}); }

  /// Exactness of the element rule for the bilinear form.
  int element_quad_degree() const { return 2 * std::max(k, n) + 2; }
  /// Exactness of the edge rule for the bilinear form and the edge projections.
  int edge_quad_degree() const { return 2 * std::max({k, m, l, n}) + 2; }
  /// Exactness used for non-polynomial integrands (loads, projections of smooth data).
  int error_quad_degree() const { return 2 * k + 4; }

  /// Throws ConfigError when a degree or weight is out of range.
  void validate() const;

  /// "P2|P0|[P0]^2||P1" style label.
  std::string label() const;
};

std::string to_string(SolverKind kind);

}  // namespace gwg
