#pragma once

#include <Eigen/Dense>
#include <utility>

#include "solar/linalg.hpp"
#include "solar/rng.hpp"

namespace solar {

// Sufficient statistics of linear-Gaussian transitions y = F x + noise,
// with x the stacked input [state; action] and y the next state.
// Additive under dataset union.
struct TransitionStats {
  double count = 0.0;
  MatrixXd Sxx;  // n x n, sum of x x^T
  MatrixXd Sxy;  // n x d, sum of x y^T
  MatrixXd Syy;  // d x d, sum of y y^T

  TransitionStats() = default;
  TransitionStats(int d, int n)
      : count(0.0),
        Sxx(MatrixXd::Zero(n, n)),
        Sxy(MatrixXd::Zero(n, d)),
        Syy(MatrixXd::Zero(d, d)) {}

  void add_transition(const VectorXd& x, const VectorXd& y);
  TransitionStats& operator+=(const TransitionStats& o);
  TransitionStats operator+(const TransitionStats& o) const {
    TransitionStats r = *this;
    r += o;
    return r;
  }
  TransitionStats scaled(double factor) const;

  int d() const { return static_cast<int>(Syy.rows()); }
  int n() const { return static_cast<int>(Sxx.rows()); }
};

// Matrix-normal inverse-Wishart over (F, Sigma):
//   Sigma ~ IW(Psi, nu),   F | Sigma ~ MN(M0, Sigma, V)
// with F a d x n matrix, Psi d x d, V n x n.
struct MNIWParams {
  MatrixXd Psi;
  double nu = 0.0;
  MatrixXd M0;
  MatrixXd V;

  MNIWParams() = default;
  MNIWParams(MatrixXd psi, double nu_, MatrixXd m0, MatrixXd v);

  // Proper, weakly informative default: Psi = I, nu = d + 2, M0 = 0, V = I,
  // so that E[Sigma] = I.
  static MNIWParams default_prior(int d, int n);

  int d() const { return static_cast<int>(Psi.rows()); }
  int n() const { return static_cast<int>(V.rows()); }

  MatrixXd expected_F() const { return M0; }
  // Defined for nu > d + 1.
  MatrixXd expected_Sigma() const;
  void validate(const char* what = "MNIWParams") const;
};

// Natural-parameter coordinates of the MNIW family. Data statistics add
// directly onto these blocks.
struct MniwNatural {
  MatrixXd n1;   // d x d, pairs with -1/2 Sigma^{-1}
  MatrixXd n2;   // d x n, pairs with Sigma^{-1} F
  MatrixXd n3;   // n x n, pairs with -1/2 F^T Sigma^{-1} F
  double n4 = 0.0;  // pairs with -1/2 log |Sigma|

  MniwNatural& operator+=(const MniwNatural& o);
  MniwNatural operator+(const MniwNatural& o) const {
    MniwNatural r = *this;
    r += o;
    return r;
  }
};

MniwNatural to_natural(const MNIWParams& p);
MNIWParams from_natural(const MniwNatural& nat);
MniwNatural stats_as_natural(const TransitionStats& s);

// Expected natural parameters of the transition likelihood under an MNIW
// belief, used for closed-form message passing and expected log-likelihoods.
struct ExpectedTransition {
  MatrixXd E;   // E[Sigma^{-1}], d x d
  MatrixXd G;   // E[Sigma^{-1} F], d x n
  MatrixXd W;   // E[F^T Sigma^{-1} F], n x n
  double logdet_sigma = 0.0;  // E[log |Sigma|]
};

ExpectedTransition expected_transition(const MNIWParams& p);
// Point-mass version for fixed (F, Sigma).
ExpectedTransition expected_transition(const MatrixXd& F, const MatrixXd& Sigma);

// Exact conjugate posterior given transition statistics.
MNIWParams mniw_update(const MNIWParams& prior, const TransitionStats& stats);

// E_{(F,Sigma) ~ params}[ log N(y; F x, Sigma) ] summed over the statistics.
double mniw_expected_loglik(const MNIWParams& params, const TransitionStats& stats);

// KL(q || p) between MNIW distributions of equal shape.
double mniw_kl(const MNIWParams& q, const MNIWParams& p);

// Draws (F, Sigma); Sigma is returned PD. Deterministic given the rng state.
std::pair<MatrixXd, MatrixXd> mniw_sample(const MNIWParams& params, Rng& rng);

}  // namespace solar
