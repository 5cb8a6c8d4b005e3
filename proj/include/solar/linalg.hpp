#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace solar {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline MatrixXd symmetrize(const MatrixXd& a) { return 0.5 * (a + a.transpose()); }

// Cholesky factor of a symmetric PD matrix. Retries once with 1e-9 jitter on
// the diagonal before giving up.
Eigen::LLT<MatrixXd> chol_pd(const MatrixXd& a, const char* what = "matrix");

// Lower-triangular factor L with A = L L^T.
MatrixXd chol_lower(const MatrixXd& a, const char* what = "matrix");

// Inverse of a symmetric PD matrix through its factorization.
MatrixXd inverse_pd(const MatrixXd& a, const char* what = "matrix");

// log |A| for symmetric PD A.
double logdet_pd(const MatrixXd& a, const char* what = "matrix");

void require_square(const MatrixXd& a, const char* what);
void require_symmetric(const MatrixXd& a, const char* what, double tol = 1e-10);

// log of the multivariate gamma function Gamma_d(a).
double lmvgamma(double a, int d);

// Multivariate digamma: sum_{i=1..d} digamma(a + (1-i)/2).
double mvdigamma(double a, int d);

}  // namespace solar
