#pragma once

#include <array>
#include <vector>

#include "gwg/config.hpp"
#include "gwg/dofs.hpp"
#include "gwg/polybasis.hpp"

namespace gwg {

/// Edge data shared by the weak second derivative and the stabilizer: the L2 projections
/// of the traces of v0 and grad v0 onto the edge polynomial spaces.
struct EdgeOperators {
  EdgeFrame frame;
  Vec2 normal;                       // outward with respect to the owning element
  MatrixXd trace_b;                  // (m+1) x dim P_k: v0 -> Legendre coefficients of Q_b v0
  std::array<MatrixXd, 2> trace_g;   // (l+1) x dim P_k: v0 -> coefficients of Q_gi (d_i v0)
  VectorXd gram_b;                   // diagonal edge Gram for P_m
  VectorXd gram_g;                   // diagonal edge Gram for P_l
};

std::vector<EdgeOperators> build_edge_operators(const ElementGeometry& geom,
                                                const std::vector<EdgeFrame>& frames,
                                                const GwgConfig& cfg);

/// Coefficient matrix of delta_g for the index pair (i, j), i, j in {0, 1}:
/// (delta_g v, phi)_T = <(Q_b v0 - v_b) n_i, d_j phi>_dT - <Q_gi(grad v0) - v_gi, phi n_j>_dT
/// for all phi in P_n(T). Rows are P_n(T) coefficients; columns follow LocalDofLayout.
MatrixXd build_delta_g(const ElementGeometry& geom, const std::vector<EdgeOperators>& edges,
                       const GwgConfig& cfg, int i, int j);

/// d2_ij,g v = d2_ij v0 + delta_g v, kept as its two polynomial parts.
struct WeakSecondDerivative {
  VectorXd interior;    // coefficients in P_{k-2}(T)
  VectorXd correction;  // coefficients in P_n(T)
};

/// All four generalized weak second derivatives of one element as linear maps on the
/// local DOFs. Indices are 0-based: (0, 0) is d2/dx2, (0, 1) is d2/dxdy, and so on.
class LocalWeakHessian {
 public:
  LocalWeakHessian(const ElementGeometry& geom, const std::vector<EdgeFrame>& frames,
                   const GwgConfig& cfg);

  const ElementGeometry& geometry() const { return geom_; }
  const LocalDofLayout& layout() const { return layout_; }
  const std::vector<EdgeOperators>& edges() const { return edges_; }

  /// d2_ij on v0 coefficients: dim P_{k-2} x dim P_k. Symmetric in (i, j).
  const MatrixXd& h0(int i, int j) const { return h0_[2 * i + j]; }
  /// delta_g for (i, j): dim P_n x layout().size(). Not symmetric in (i, j).
  const MatrixXd& delta(int i, int j) const { return delta_[2 * i + j]; }

  WeakSecondDerivative apply(int i, int j, const VectorXd& dofs) const;

  /// Both parts embedded in P_R, R = max(k-2, n), as one dim P_R x layout().size() map.
  /// Exact because the monomial bases are hierarchical.
  MatrixXd combined(int i, int j) const;

  const ElementBasis& interior_basis() const { return basis_k2_; }    // P_{k-2}
  const ElementBasis& correction_basis() const { return basis_n_; }   // P_n
  const ElementBasis& combined_basis() const { return basis_r_; }     // P_R

  /// Value of d2_ij,g v at a point.
  double evaluate(const WeakSecondDerivative& d, const Point& p) const;

 private:
  ElementGeometry geom_;
  LocalDofLayout layout_;
  std::vector<EdgeOperators> edges_;
  ElementBasis basis_k2_;
  ElementBasis basis_n_;
  ElementBasis basis_r_;
  std::array<MatrixXd, 4> h0_;
  std::array<MatrixXd, 4> delta_;
};

}  // namespace gwg
