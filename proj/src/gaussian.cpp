#include "solar/gaussian.hpp"

#include <cmath>

namespace solar {

Gaussian::Gaussian(VectorXd mean, MatrixXd covariance)
    : mean_(std::move(mean)), cov_(std::move(covariance)) {
  if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size())
    throw std::invalid_argument("Gaussian: covariance shape does not match mean");
  require_symmetric(cov_, "Gaussian covariance");
  cov_ = symmetrize(cov_);
  chol_ = chol_lower(cov_, "Gaussian covariance");
}

MatrixXd Gaussian::precision() const {
  return symmetrize(chol_pd(cov_, "Gaussian covariance")
                        .solve(MatrixXd::Identity(dim(), dim())));
}

double Gaussian::logpdf(const VectorXd& x) const {
  const VectorXd z = chol_.triangularView<Eigen::Lower>().solve(x - mean_);
  return -0.5 * z.squaredNorm() - 0.5 * logdet_cov() - 0.5 * dim() * std::log(2.0 * M_PI);
}

double gaussian_kl(const Gaussian& q, const Gaussian& p) {
  if (q.dim() != p.dim())
    throw std::invalid_argument("gaussian_kl: dimension mismatch");
  const auto p_llt = chol_pd(p.cov(), "gaussian_kl p covariance");
  const MatrixXd a = p_llt.solve(q.cov());
  const VectorXd d = p.mean() - q.mean();
  const double quad = d.dot(p_llt.solve(d));
  const double kl =
      0.5 * (a.trace() + quad - q.dim() + p.logdet_cov() - q.logdet_cov());
  return std::max(kl, 0.0);
}

}  // namespace solar
