#include "gwg/linsolve.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace gwg {

CgResult solve_cg(const SparseSymMatrix& a, const VectorXd& b, double rel_tol, int max_iters) {
  return solve_cg(a, b, VectorXd::Zero(b.size()), rel_tol, max_iters);
}

CgResult solve_cg(const SparseSymMatrix& a, const VectorXd& b, const VectorXd& x0,
                  double rel_tol, int max_iters) {
  const Eigen::Index n = b.size();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("dimension mismatch in solve_cg");

  CgResult result;
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    result.x = VectorXd::Zero(n);
    return result;
  }

  VectorXd inv_diag(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = a.coeff(i, i);
    if (!(d > 0.0)) {
      throw SolverError("non-positive diagonal entry; matrix is not SPD", VectorXd::Zero(n), 1.0);
    }
    inv_diag(i) = 1.0 / d;
  }

  VectorXd x = x0;
  VectorXd r = b - a * x;
  VectorXd z = inv_diag.cwiseProduct(r);
  VectorXd p = z;
  VectorXd ap(n);
  double rz = r.dot(z);
  double rnorm = r.norm();

  VectorXd best = x;
  double best_res = rnorm / bnorm;
  int it = 0;
  int energy_increases = 0;

  auto finish = [&](const VectorXd& sol) {
    result.x = sol;
    result.report.iterations = it;
    result.report.relative_residual = (b - a * sol).norm() / bnorm;
    result.report.energy_increases = energy_increases;
  };

  // Iterate on the recursive residual; when it meets the tolerance, confirm with the true
  // residual and restart from the current iterate if rounding let the two drift apart.
  while (it < max_iters) {
    if (rnorm <= rel_tol * bnorm) {
      const VectorXd true_r = b - a * x;
      const double true_res = true_r.norm() / bnorm;
      if (true_res <= rel_tol) {
        finish(x);
        return result;
      }
      r = true_r;
      z = inv_diag.cwiseProduct(r);
      p = z;
      rz = r.dot(z);
      rnorm = r.norm();
      if (rnorm <= rel_tol * bnorm) break;
    }

    ap.noalias() = a * p;
    const double pap = p.dot(ap);
    if (!(pap > 0.0)) {
      finish(best);
      throw SolverError("conjugate gradients met a non-positive curvature direction", best,
                        best_res);
    }
    const double alpha = rz / pap;
    // The energy changes by -alpha * rz / 2 per step.
    if (!(alpha * rz > 0.0)) ++energy_increases;

    x.noalias() += alpha * p;
    r.noalias() -= alpha * ap;
    z = inv_diag.cwiseProduct(r);
    const double rz_new = r.dot(z);
    p = z + (rz_new / rz) * p;
    rz = rz_new;
    rnorm = r.norm();
    ++it;

    if (rnorm / bnorm < best_res) {
      best_res = rnorm / bnorm;
      best = x;
    }
  }

  finish((b - a * x).norm() <= (b - a * best).norm() ? x : best);
  if (result.report.relative_residual <= rel_tol) return result;
  throw SolverError("conjugate gradients did not converge in " + std::to_string(max_iters) +
                        " iterations (relative residual " +
                        std::to_string(result.report.relative_residual) + ")",
                    result.x, result.report.relative_residual);
}

VectorXd solve_dense(const MatrixXd& a, const VectorXd& b, int cap) {
  if (a.rows() > cap) throw std::length_error("dense solve above the configured dimension cap");
  Eigen::LLT<MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw SolverError("Cholesky factorization found a non-positive pivot",
                      VectorXd::Zero(b.size()), std::numeric_limits<double>::infinity());
  }
  return llt.solve(b);
}

VectorXd solve_dense(const SparseSymMatrix& a, const VectorXd& b, int cap) {
  if (a.rows() > cap) throw std::length_error("dense solve above the configured dimension cap");
  return solve_dense(MatrixXd(a), b, cap);
}

double min_eigenvalue(const SparseSymMatrix& a, int cap) {
  if (a.rows() > cap) throw std::length_error("eigenvalue check above the configured cap");
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(MatrixXd(a), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

}  // namespace gwg
