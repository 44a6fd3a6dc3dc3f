#pragma once

#include <Eigen/Core>
#include <functional>
#include <random>
#include <vector>

namespace pancake::detail {

using MatVec = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
  int matvecs = 0;
  bool converged = false;
};

/// Largest eigenpair of a symmetric operator restricted to the orthogonal
/// complement of `locked` (orthonormal), by explicitly restarted Lanczos with
/// full reorthogonalisation.
Eigenpair largest_eigenpair(const MatVec& apply, Eigen::Index dim,
                            const std::vector<Eigen::VectorXd>& locked, int max_basis,
                            int max_restarts, double tolerance, std::mt19937_64& rng);

}  // namespace pancake::detail
