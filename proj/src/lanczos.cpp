#include "lanczos.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace pancake::detail {

namespace {

void project_out(const std::vector<Eigen::VectorXd>& locked, Eigen::VectorXd& w) {
  for (const auto& u : locked) w -= u.dot(w) * u;
}

}  // namespace

Eigenpair largest_eigenpair(const MatVec& apply, Eigen::Index dim,
                            const std::vector<Eigen::VectorXd>& locked, int max_basis,
                            int max_restarts, double tolerance, std::mt19937_64& rng) {
  const Eigen::Index free_dim = dim - static_cast<Eigen::Index>(locked.size());
  const Eigen::Index basis_cap = std::max<Eigen::Index>(1, std::min<Eigen::Index>(max_basis, free_dim));

  Eigenpair result;
  Eigen::VectorXd start(dim);
  std::normal_distribution<double> gauss;
  for (Eigen::Index i = 0; i < dim; ++i) start[i] = gauss(rng);

  Eigen::MatrixXd basis(dim, basis_cap);
  Eigen::VectorXd w(dim);
  std::vector<double> alpha;
  std::vector<double> beta;

  for (int restart = 0; restart <= max_restarts; ++restart) {
    project_out(locked, start);
    project_out(locked, start);
    basis.col(0) = start / start.norm();
    alpha.clear();
    beta.clear();

    Eigen::VectorXd ritz_coeffs;
    double theta = 0.0;
    Eigen::Index used = 0;
    for (Eigen::Index j = 0; j < basis_cap; ++j) {
      apply(basis.col(j), w);
      ++result.matvecs;
      if (j > 0) w -= beta.back() * basis.col(j - 1);
      alpha.push_back(basis.col(j).dot(w));
      w -= alpha.back() * basis.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        project_out(locked, w);
        const Eigen::VectorXd h = basis.leftCols(j + 1).transpose() * w;
        w -= basis.leftCols(j + 1) * h;
      }
      const double b = w.norm();
      used = j + 1;

      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), used);
      Eigen::VectorXd sub = used > 1 ? Eigen::Map<Eigen::VectorXd>(beta.data(), used - 1)
                                     : Eigen::VectorXd();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      theta = tri.eigenvalues()[used - 1];
      ritz_coeffs = tri.eigenvectors().col(used - 1);
      const double estimate = b * std::abs(ritz_coeffs[used - 1]);

      if (estimate < tolerance || b < 1e-14 || used == basis_cap) break;
      beta.push_back(b);
      basis.col(j + 1) = w / b;
    }

    Eigen::VectorXd x = basis.leftCols(used) * ritz_coeffs;
    project_out(locked, x);
    x /= x.norm();
    apply(x, w);
    ++result.matvecs;
    project_out(locked, w);
    theta = x.dot(w);
    const double residual = (w - theta * x).norm();

    result.value = theta;
    result.vector = x;
    result.residual = residual;
    if (residual < tolerance) {
      result.converged = true;
      return result;
    }
    start = x;
  }
  return result;
}

}  // namespace pancake::detail
