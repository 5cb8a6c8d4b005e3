#include "solar/mniw.hpp"

#include <cmath>
#include <string>

namespace solar {

void TransitionStats::add_transition(const VectorXd& x, const VectorXd& y) {
  if (x.size() != n() || y.size() != d())
    throw std::invalid_argument("TransitionStats: transition dims do not match");
  count += 1.0;
  Sxx.noalias() += x * x.transpose();
  Sxy.noalias() += x * y.transpose();
  Syy.noalias() += y * y.transpose();
}

TransitionStats& TransitionStats::operator+=(const TransitionStats& o) {
  if (o.d() != d() || o.n() != n())
    throw std::invalid_argument("TransitionStats: shape mismatch in addition");
  count += o.count;
  Sxx += o.Sxx;
  Sxy += o.Sxy;
  Syy += o.Syy;
  return *this;
}

TransitionStats TransitionStats::scaled(double factor) const {
  TransitionStats r = *this;
  r.count *= factor;
  r.Sxx *= factor;
  r.Sxy *= factor;
  r.Syy *= factor;
  return r;
}

MNIWParams::MNIWParams(MatrixXd psi, double nu_, MatrixXd m0, MatrixXd v)
    : Psi(std::move(psi)), nu(nu_), M0(std::move(m0)), V(std::move(v)) {
  validate();
}

MNIWParams MNIWParams::default_prior(int d, int n) {
  MNIWParams p;
  p.Psi = MatrixXd::Identity(d, d);
  p.nu = d + 2;
  p.M0 = MatrixXd::Zero(d, n);
  p.V = MatrixXd::Identity(n, n);
  return p;
}

MatrixXd MNIWParams::expected_Sigma() const {
  if (nu <= d() + 1)
    throw std::domain_error("MNIWParams: E[Sigma] undefined for nu <= d + 1");
  return Psi / (nu - d() - 1);
}

void MNIWParams::validate(const char* what) const {
  require_symmetric(Psi, what, 1e-8);
  require_symmetric(V, what, 1e-8);
  if (M0.rows() != Psi.rows() || M0.cols() != V.rows())
    throw std::invalid_argument(std::string(what) + ": M0 shape inconsistent");
  if (!(nu > d() - 1))
    throw std::invalid_argument(std::string(what) + ": nu must exceed d - 1");
  chol_pd(Psi, what);
  chol_pd(V, what);
}

MniwNatural& MniwNatural::operator+=(const MniwNatural& o) {
  n1 += o.n1;
  n2 += o.n2;
  n3 += o.n3;
  n4 += o.n4;
  return *this;
}

MniwNatural to_natural(const MNIWParams& p) {
  MniwNatural nat;
  const MatrixXd Vinv = inverse_pd(p.V, "MNIW V");
  nat.n3 = Vinv;
  nat.n2 = p.M0 * Vinv;
  nat.n1 = symmetrize(p.Psi + nat.n2 * p.M0.transpose());
  nat.n4 = p.nu + p.d() + p.n() + 1;
  return nat;
}

MNIWParams from_natural(const MniwNatural& nat) {
  const int d = static_cast<int>(nat.n1.rows());
  const int n = static_cast<int>(nat.n3.rows());
  MNIWParams p;
  p.V = inverse_pd(nat.n3, "MNIW natural n3");
  p.M0 = nat.n2 * p.V;
  p.Psi = symmetrize(nat.n1 - p.M0 * nat.n3 * p.M0.transpose());
  p.nu = nat.n4 - d - n - 1;
  p.validate("MNIW from natural coordinates");
  return p;
}

MniwNatural stats_as_natural(const TransitionStats& s) {
  MniwNatural nat;
  nat.n1 = s.Syy;
  nat.n2 = s.Sxy.transpose();
  nat.n3 = s.Sxx;
  nat.n4 = s.count;
  return nat;
}

ExpectedTransition expected_transition(const MNIWParams& p) {
  ExpectedTransition e;
  e.E = symmetrize(p.nu * inverse_pd(p.Psi, "MNIW Psi"));
  e.G = e.E * p.M0;
  e.W = symmetrize(p.M0.transpose() * e.G + p.d() * p.V);
  e.logdet_sigma =
      logdet_pd(p.Psi, "MNIW Psi") - p.d() * std::log(2.0) - mvdigamma(0.5 * p.nu, p.d());
  return e;
}

ExpectedTransition expected_transition(const MatrixXd& F, const MatrixXd& Sigma) {
  ExpectedTransition e;
  e.E = inverse_pd(Sigma, "transition Sigma");
  e.G = e.E * F;
  e.W = symmetrize(F.transpose() * e.G);
  e.logdet_sigma = logdet_pd(Sigma, "transition Sigma");
  return e;
}

MNIWParams mniw_update(const MNIWParams& prior, const TransitionStats& stats) {
  if (stats.d() != prior.d() || stats.n() != prior.n())
    throw std::invalid_argument("mniw_update: stats shape does not match prior");
  const MatrixXd Vinv = inverse_pd(prior.V, "mniw_update prior V");
  const MatrixXd Vn_inv = symmetrize(Vinv + stats.Sxx);
  const MatrixXd Vn = inverse_pd(Vn_inv, "mniw_update posterior V");
  const MatrixXd Syx = stats.Sxy.transpose();  // d x n
  MNIWParams post;
  post.V = Vn;
  post.M0 = (prior.M0 * Vinv + Syx) * Vn;
  post.nu = prior.nu + stats.count;
  post.Psi = symmetrize(prior.Psi + stats.Syy + prior.M0 * Vinv * prior.M0.transpose() -
                        post.M0 * Vn_inv * post.M0.transpose());
  post.validate("mniw_update posterior");
  return post;
}

double mniw_expected_loglik(const MNIWParams& params, const TransitionStats& stats) {
  if (stats.d() != params.d() || stats.n() != params.n())
    throw std::invalid_argument("mniw_expected_loglik: shape mismatch");
  if (stats.count == 0.0 && stats.Sxx.isZero(0) && stats.Syy.isZero(0)) return 0.0;
  const ExpectedTransition e = expected_transition(params);
  const MatrixXd Syx = stats.Sxy.transpose();
  double ll = -0.5 * (e.E.cwiseProduct(stats.Syy)).sum();
  ll += (e.G.cwiseProduct(Syx)).sum();
  ll -= 0.5 * (e.W.cwiseProduct(stats.Sxx)).sum();
  ll -= 0.5 * stats.count * (e.logdet_sigma + params.d() * std::log(2.0 * M_PI));
  return ll;
}

double mniw_kl(const MNIWParams& q, const MNIWParams& p) {
  if (q.d() != p.d() || q.n() != p.n())
    throw std::invalid_argument("mniw_kl: shape mismatch");
  const int d = q.d();
  const int n = q.n();
  const MatrixXd qPsi_inv = inverse_pd(q.Psi, "mniw_kl q Psi");
  const double logdet_q_psi = logdet_pd(q.Psi, "mniw_kl q Psi");
  const double logdet_p_psi = logdet_pd(p.Psi, "mniw_kl p Psi");

  // Inverse-Wishart marginal part, via the Wishart KL on precisions.
  double kl = -0.5 * p.nu * (logdet_p_psi - logdet_q_psi);
  kl += 0.5 * q.nu * ((p.Psi * qPsi_inv).trace() - d);
  kl += lmvgamma(0.5 * p.nu, d) - lmvgamma(0.5 * q.nu, d);
  kl += 0.5 * (q.nu - p.nu) * mvdigamma(0.5 * q.nu, d);

  // Conditional matrix-normal part, averaged over q(Sigma).
  const MatrixXd pV_inv = inverse_pd(p.V, "mniw_kl p V");
  const MatrixXd dM = q.M0 - p.M0;
  kl += 0.5 * (d * (pV_inv * q.V).trace() - d * n +
               d * (logdet_pd(p.V, "mniw_kl p V") - logdet_pd(q.V, "mniw_kl q V")) +
               q.nu * (pV_inv * dM.transpose() * qPsi_inv * dM).trace());
  return std::max(kl, 0.0);
}

std::pair<MatrixXd, MatrixXd> mniw_sample(const MNIWParams& params, Rng& rng) {
  const int d = params.d();
  const int n = params.n();
  // Bartlett draw of W ~ Wishart(Psi^{-1}, nu), then Sigma = W^{-1}.
  const MatrixXd T = chol_lower(inverse_pd(params.Psi, "mniw_sample Psi"), "mniw_sample");
  MatrixXd A = MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    A(i, i) = std::sqrt(rng.chi_squared(params.nu - i));
    for (int j = 0; j < i; ++j) A(i, j) = rng.normal();
  }
  const MatrixXd TA = T * A;
  const MatrixXd W = TA * TA.transpose();
  const MatrixXd Sigma = inverse_pd(W, "mniw_sample W");
  const MatrixXd F = params.M0 + chol_lower(Sigma, "mniw_sample Sigma") *
                                     rng.normal_matrix(d, n) *
                                     chol_lower(params.V, "mniw_sample V").transpose();
  return {F, Sigma};
}

}  // namespace solar
