#pragma once

#include <Eigen/Dense>

#include "solar/linalg.hpp"
#include "solar/rng.hpp"

namespace solar {

// Multivariate Gaussian stored together with the Cholesky factor of its
// covariance. Immutable after construction.
class Gaussian {
 public:
  Gaussian(VectorXd mean, MatrixXd covariance);

  static Gaussian standard(int dim) {
    return Gaussian(VectorXd::Zero(dim), MatrixXd::Identity(dim, dim));
  }

  int dim() const { return static_cast<int>(mean_.size()); }
  const VectorXd& mean() const { return mean_; }
  const MatrixXd& cov() const { return cov_; }
  const MatrixXd& chol() const { return chol_; }

  double logdet_cov() const { return 2.0 * chol_.diagonal().array().log().sum(); }
  MatrixXd precision() const;

  VectorXd sample(Rng& rng) const { return mean_ + chol_ * rng.normal_vector(dim()); }
  double logpdf(const VectorXd& x) const;

 private:
  VectorXd mean_;
  MatrixXd cov_;
  MatrixXd chol_;  // lower triangular
};

// KL(q || p) between Gaussians of equal dimension.
double gaussian_kl(const Gaussian& q, const Gaussian& p);

}  // namespace solar
