#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace gwg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Compressed sparse rows; assembled to be exactly symmetric.
using SparseSymMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct SolveReport {
  int iterations = 0;
  double relative_residual = 0.0;  // ||b - A x|| / ||b||, recomputed from x
  /// Iterations at which the energy functional 0.5 x'Ax - b'x failed to decrease
  /// (the A^{-1}-norm of the residual); zero for an SPD matrix up to rounding.
  int energy_increases = 0;
};

struct CgResult {
  VectorXd x;
  SolveReport report;
};

/// Raised when an iterative solve misses its tolerance or a factorization hits a
/// non-positive pivot. Carries the best iterate seen.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, VectorXd best, double residual)
      : std::runtime_error(what), best_(std::move(best)), residual_(residual) {}

  const VectorXd& best_iterate() const { return best_; }
  double residual() const { return residual_; }

 private:
  VectorXd best_;
  double residual_;
};

/// Jacobi-preconditioned conjugate gradients from a zero (or given) initial guess.
CgResult solve_cg(const SparseSymMatrix& a, const VectorXd& b, double rel_tol = 1e-12,
                  int max_iters = 200000);
CgResult solve_cg(const SparseSymMatrix& a, const VectorXd& b, const VectorXd& x0,
                  double rel_tol, int max_iters);

/// Dense Cholesky solve. Throws SolverError on a non-positive pivot and
/// std::length_error when the dimension exceeds cap.
VectorXd solve_dense(const MatrixXd& a, const VectorXd& b, int cap = 5000);
VectorXd solve_dense(const SparseSymMatrix& a, const VectorXd& b, int cap = 5000);

/// Smallest eigenvalue of a symmetric matrix (dense; dimension limited by cap).
double min_eigenvalue(const SparseSymMatrix& a, int cap = 5000);

}  // namespace gwg
