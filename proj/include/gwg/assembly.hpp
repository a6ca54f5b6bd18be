#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "gwg/config.hpp"
#include "gwg/dofs.hpp"
#include "gwg/linsolve.hpp"
#include "gwg/projection.hpp"
#include "gwg/weak_hessian.hpp"

namespace gwg {

/// Selects which parts of a(w, v) to assemble.
enum AssemblyTerms : unsigned {
  kHessianTerm = 1u,
  kTraceStabilizer = 2u,     // rho1 h^gamma1 <Q_b w0 - w_b, Q_b v0 - v_b>
  kGradientStabilizer = 4u,  // rho2 h^gamma2 <Q_g grad w0 - w_g, Q_g grad v0 - v_g>
  kAllTerms = 7u,
};

/// Unweighted element contributions; the stabilizer parts still need rho h_T^gamma.
struct LocalStiffness {
  MatrixXd hessian;
  MatrixXd trace_stabilizer;
  MatrixXd gradient_stabilizer;

  MatrixXd weighted(const GwgConfig& cfg, double h_t, unsigned terms = kAllTerms) const;
};

LocalStiffness local_stiffness(const LocalWeakHessian& hess);

/// Global a(w, v) over all DOFs, before boundary constraints. Exactly symmetric.
SparseSymMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs, const GwgConfig& cfg,
                                   unsigned terms = kAllTerms);

/// (f, v0) in the v0 blocks; zero elsewhere. Throws std::runtime_error naming the point when
/// f is not finite at a quadrature node.
VectorXd assemble_load(const Mesh& mesh, const DofMap& dofs, const GwgConfig& cfg,
                       const ScalarField& f);

/// Clamped boundary data: u = g1 and du/dn = g2 on the boundary.
struct ClampedData {
  ScalarField g1;
  std::function<double(const Point&, const Vec2& normal)> g2;
  GradientField grad_g1;
};

/// Full-length vector holding u_b = Q_b g1 and u_g = (Q_g g2) n + (Q_g(grad g1 . tau)) tau on
/// boundary edges; all other entries zero.
VectorXd boundary_values(const Mesh& mesh, const DofMap& dofs, const GwgConfig& cfg,
                         const ClampedData& data);

/// Stiffness, load, and the system reduced to the free DOFs by eliminating the boundary
/// values. Holds a reference to the mesh it was built on.
class AssembledSystem {
 public:
  AssembledSystem(const Mesh& mesh, const GwgConfig& cfg);

  const GwgConfig& config() const { return cfg_; }
  const DofMap& dofs() const { return dofs_; }
  const SparseSymMatrix& full_matrix() const { return full_; }

  void set_load(VectorXd load);
  void assemble_load(const ScalarField& f);
  const VectorXd& load() const { return load_; }

  /// Eliminates the constrained DOFs; may be called again with other data.
  void apply_boundary_conditions(const ClampedData& data);
  void apply_boundary_values(VectorXd values);

  const SparseSymMatrix& matrix() const { return reduced_; }
  const VectorXd& rhs() const { return rhs_; }
  const VectorXd& boundary() const { return boundary_; }
  const std::vector<int>& free_dofs() const { return free_; }

  /// Full weak function from a solution on the free DOFs.
  WeakFunction expand(const VectorXd& free_solution) const;

 private:
  const Mesh* mesh_;
  GwgConfig cfg_;
  DofMap dofs_;
  SparseSymMatrix full_;
  VectorXd load_;
  VectorXd boundary_;
  std::vector<int> free_;
  SparseSymMatrix reduced_;
  VectorXd rhs_;
};

/// "row col value" lines, 0-based.
void write_coordinate(const SparseSymMatrix& a, std::ostream& out);

}  // namespace gwg
