#include "solar/linalg.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <string>

namespace solar {

void require_square(const MatrixXd& a, const char* what) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(what) + ": expected square matrix, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_symmetric(const MatrixXd& a, const char* what, double tol) {
  require_square(a, what);
  const double dev = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument(std::string(what) + ": matrix not symmetric (dev " +
                                std::to_string(dev) + ")");
}

Eigen::LLT<MatrixXd> chol_pd(const MatrixXd& a, const char* what) {
  require_square(a, what);
  Eigen::LLT<MatrixXd> llt(symmetrize(a));
  if (llt.info() == Eigen::Success) return llt;
  MatrixXd jittered = symmetrize(a);
  jittered.diagonal().array() += 1e-9;
  llt.compute(jittered);
  if (llt.info() == Eigen::Success) return llt;
  throw std::runtime_error(std::string(what) + ": matrix not positive definite");
}

MatrixXd chol_lower(const MatrixXd& a, const char* what) {
  return chol_pd(a, what).matrixL();
}

MatrixXd inverse_pd(const MatrixXd& a, const char* what) {
  const auto llt = chol_pd(a, what);
  return symmetrize(llt.solve(MatrixXd::Identity(a.rows(), a.cols())));
}

double logdet_pd(const MatrixXd& a, const char* what) {
  const MatrixXd l = chol_lower(a, what);
  return 2.0 * l.diagonal().array().log().sum();
}

double lmvgamma(double a, int d) {
  double out = 0.25 * d * (d - 1) * std::log(M_PI);
  for (int i = 1; i <= d; ++i) out += std::lgamma(a + 0.5 * (1 - i));
  return out;
}

double mvdigamma(double a, int d) {
  double out = 0.0;
  for (int i = 1; i <= d; ++i) out += boost::math::digamma(a + 0.5 * (1 - i));
  return out;
}

}  // namespace solar
