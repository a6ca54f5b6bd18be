#pragma once

#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "gwg/assembly.hpp"

namespace gwg {

using HessianField = std::function<Eigen::Matrix2d(const Point&)>;

/// The six error metrics for e_h = Q_h u - u_h.
struct ErrorReport {
  double triple_bar = 0.0;  // energy norm of e_h
  double l2_e0 = 0.0;       // ||Q0 u - u0||
  double eb_edge = 0.0;     // (sum_T h_T ||e_b||^2_dT)^(1/2)
  double eg_edge = 0.0;     // same for e_g
  double h2_center = 0.0;   // centroid-sampled |e0|_2 against u
  double h1_center = 0.0;   // centroid-sampled |e0|_1 against u
};

/// sqrt(e' A e) with A the unconstrained stiffness.
double triple_bar(const SparseSymMatrix& full_stiffness, const WeakFunction& e);
/// Assembles the unconstrained stiffness and evaluates the norm.
double triple_bar(const Mesh& mesh, const GwgConfig& cfg, const WeakFunction& e);

double l2_e0(const Mesh& mesh, const WeakFunction& e);

/// Interior edges are counted once for each adjacent element.
double eb_edge(const Mesh& mesh, const WeakFunction& e);
double eg_edge(const Mesh& mesh, const WeakFunction& e);

/// (|e0|_2, |e0|_1) from the second and first derivatives of u0 and u at element centroids.
std::pair<double, double> center_seminorms(const Mesh& mesh, const WeakFunction& uh,
                                           const GradientField& grad_u,
                                           const HessianField& hess_u);

/// Marker for rates that cannot be computed (non-positive errors).
inline constexpr double kUndefinedRate = std::numeric_limits<double>::quiet_NaN();

/// log2(E_i / E_{i+1}) for successive levels; one fewer entry than errors.
std::vector<double> rates(std::span<const double> errors);

}  // namespace gwg
