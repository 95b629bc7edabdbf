#include "gadc/bounds_quantum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gadc/optimize.hpp"
#include "gadc/sdp.hpp"

namespace gadc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

ComplexMatrix diag_state(double p) {
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 1.0 - p;
  rho(1, 1) = p;
  return rho;
}

// Bloch ball point from (a, theta, phi) with radius |sin a|.
ComplexMatrix ball_state(const RealVector& x) {
  const double r = std::sin(x(0));
  return bloch_to_density({r * std::sin(x(1)) * std::cos(x(2)), r * std::sin(x(1)) * std::sin(x(2)),
                           r * std::cos(x(1))});
}

RealVector draw_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RealVector x(3);
  x << 0.5 * M_PI * u(rng), std::acos(1.0 - 2.0 * u(rng)), 2.0 * M_PI * u(rng);
  return x;
}

double ratio_or_trivial(double num, double den) { return den > 0.0 ? q_ad(std::clamp(num / den, 0.0, 1.0)) : 1.0; }

// -Tr[rho log2 sigma] on a 2 x 2 block.
double cross_entropy(const Eigen::Matrix2cd& rho, const Eigen::Matrix2cd& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(sigma);
  double s = 0.0;
  for (int k = 0; k < 2; ++k) {
    const Eigen::Vector2cd v = es.eigenvectors().col(k);
    const double w = (v.adjoint() * rho * v)(0, 0).real();
    if (w <= 0.0) continue;
    const double lam = es.eigenvalues()(k);
    if (lam <= 0.0) return kInf;
    s -= w * std::log2(lam);
  }
  return s;
}

double entropy_2x2(const Eigen::Matrix2cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(m, Eigen::EigenvaluesOnly);
  return -xlog2x(es.eigenvalues()(0)) - xlog2x(es.eigenvalues()(1));
}

// (id (x) A)(theta^p) in the basis |00>, |01>, |10>, |11>: the {00, 11}
// block plus the two diagonal entries.
struct XState {
  Eigen::Matrix2cd block;
  double b = 0.0;
  double c = 0.0;
};

XState rains_state(const GadcParams& p, double q) {
  const double gm = p.gamma, n = p.n;
  XState s;
  s.block << (1.0 - q) * (1.0 - gm * n), std::sqrt(q * (1.0 - q) * (1.0 - gm)),
      std::sqrt(q * (1.0 - q) * (1.0 - gm)), q * (1.0 - gm * (1.0 - n));
  s.b = (1.0 - q) * gm * n;
  s.c = q * gm * (1.0 - n);
  return s;
}

}  // namespace

double q_ad(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::domain_error("q_ad: gamma outside [0,1]");
  if (gamma == 0.0) return 1.0;
  if (gamma >= 0.5) return 0.0;
  const ScalarOptimum o =
      maximize_scalar([&](double p) { return h2((1.0 - gamma) * p) - h2(gamma * p); }, 0.0, 1.0);
  return std::max(o.value, 0.0);
}

double coherent_info(const QuantumChannel& ch, const QuantumChannel& comp, const ComplexMatrix& rho) {
  return entropy_of_eigenvalues(eigvalsh(ch(rho))) - entropy_of_eigenvalues(eigvalsh(comp(rho)));
}

double max_diagonal_coherent_info(const QuantumChannel& ch) {
  const QuantumChannel comp = complementary(ch);
  const ScalarOptimum o =
      maximize_scalar([&](double p) { return coherent_info(ch, comp, diag_state(p)); }, 0.0, 1.0);
  return std::max(o.value, 0.0);
}

double coherent_info_lb(const GadcParams& p) {
  require_domain(p);
  if (p.gamma >= 0.5) return 0.0;
  return max_diagonal_coherent_info(gadc_channel(p));
}

std::array<double, 4> dp_bounds(const GadcParams& p) {
  require_domain(p);
  const double gm = p.gamma, n = p.n;
  return {ratio_or_trivial(gm * (1.0 - n), 1.0 - gm * n), q_ad(gm * (1.0 - n)), q_ad(gm * n),
          ratio_or_trivial(gm * n, 1.0 - gm * (1.0 - n))};
}

double u_d(const QuantumChannel& ch, const ChoiMatrix& degrading, const UdOptions& opt) {
  if (degrading.din != ch.dout()) throw std::invalid_argument("u_d: degrading map input dimension mismatch");
  if (ch.din() != 2) throw std::invalid_argument("u_d: needs qubit input");
  const ComplexMatrix j = degrading.gamma();
  auto neg = [&](const RealVector& x) {
    const ComplexMatrix b = ch(ball_state(x));
    const ComplexMatrix e = hermitize(apply_choi(j, degrading.din, degrading.dout, b));
    return -(entropy_of_eigenvalues(eigvalsh(b)) - entropy_of_eigenvalues(eigvalsh(e)));
  };
  BfgsOptions bo;
  bo.grad_tol = 1e-10;
  const VectorOptimum o = minimize_multistart(neg, draw_ball, opt.restarts, opt.seed, bo);
  return -o.value;
}

ApproxBound eps_deg_ubs(const GadcParams& p, const UdOptions& opt) {
  require_domain(p);
  if (p.gamma >= 0.5) throw std::domain_error("eps_deg_ubs: needs gamma < 1/2");
  const QuantumChannel ch = gadc_channel_full({p.gamma, canonical_n(p.n)});
  const ApproxResult r = sdp_eps_deg(ch);
  ApproxBound b;
  b.epsilon = std::max(r.epsilon, 0.0);
  const double ud = u_d(ch, r.map, opt);
  b.q_ub = ud + 4.0 * b.epsilon + g(b.epsilon);
  b.p_ub = ud + 12.0 * b.epsilon + 3.0 * g(b.epsilon);
  return b;
}

ApproxBound eps_close_deg_ubs(const GadcParams& p) {
  require_domain(p);
  if (p.gamma >= 0.5) throw std::domain_error("eps_close_deg_ubs: needs gamma < 1/2");
  ApproxBound b;
  b.epsilon = std::max(0.5 * diamond_dist(gadc_channel(p), gadc_channel({p.gamma, 0.0})), 0.0);
  const double q = q_ad(p.gamma);
  b.q_ub = q + 2.0 * b.epsilon + 2.0 * g(b.epsilon);
  b.p_ub = q + 4.0 * b.epsilon + 4.0 * g(b.epsilon);
  return b;
}

ApproxBound eps_adeg_ub(const GadcParams& p) {
  require_domain(p);
  ApproxBound b;
  b.epsilon = std::clamp(sdp_eps_adeg(gadc_channel_full(p)), 0.0, 1.0);
  b.q_ub = b.p_ub = 2.0 * b.epsilon + h2(b.epsilon) + g(b.epsilon);
  return b;
}

double rains_inner(const GadcParams& p, double input_p, const RainsOptions& opt) {
  require_domain(p);
  const XState rho = rains_state(p, input_p);
  const double neg_entropy = -(entropy_2x2(rho.block) - xlog2x(rho.b) - xlog2x(rho.c));
  const cplx phase = std::polar(1.0, opt.phi);
  // x = (w_alpha, w_beta, w_gamma, w_delta, t): weights are 2 softmax(w), xi
  // is sin^2(t) times min(sqrt(alpha delta), sqrt(beta gamma)).
  auto d = [&](const RealVector& x) {
    const double wmax = x.head(4).maxCoeff();
    RealVector w = (x.head(4).array() - wmax).exp();
    w *= 2.0 / w.sum();
    const double xi = std::pow(std::sin(x(4)), 2) * std::min(std::sqrt(w(0) * w(3)), std::sqrt(w(1) * w(2)));
    Eigen::Matrix2cd sigma;
    sigma << 0.5 * w(0), 0.5 * xi * phase, 0.5 * xi * std::conj(phase), 0.5 * w(3);
    double cross = cross_entropy(rho.block, sigma);
    if (rho.b > 0.0) cross -= rho.b * std::log2(0.5 * w(1));
    if (rho.c > 0.0) cross -= rho.c * std::log2(0.5 * w(2));
    return neg_entropy + cross;
  };
  auto draw = [](std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> u(0.0, 0.5 * M_PI);
    RealVector x(5);
    for (int k = 0; k < 4; ++k) x(k) = 0.5 * nd(rng);
    x(4) = u(rng);
    return x;
  };
  BfgsOptions bo;
  bo.grad_tol = 1e-10;
  const VectorOptimum o = minimize_multistart(d, draw, std::max(opt.restarts, 10), opt.seed, bo);
  return std::max(o.value, 0.0);
}

double rains_ub(const GadcParams& p, const RainsOptions& opt) {
  require_domain(p);
  const ScalarOptimum o =
      maximize_scalar([&](double q) { return rains_inner(p, q, opt); }, 0.0, 1.0, opt.outer_seeds, 1e-8);
  return o.value;
}

double q_rmg_ub(const ThermalParams& t) {
  if (!(t.eta >= 0.0 && t.eta <= 1.0 && t.n >= 0.0 && t.n <= 1.0))
    throw std::domain_error("q_rmg_ub: parameters outside [0,1]");
  if (t.n == 0.0) return q_ad(1.0 - t.eta);
  return max_diagonal_coherent_info(extended_channel(t));
}

double q_rmg_full_bloch(const ThermalParams& t, std::uint64_t seed) {
  const QuantumChannel ch = extended_channel(t);
  const QuantumChannel comp = complementary(ch);
  auto neg = [&](const RealVector& x) { return -coherent_info(ch, comp, ball_state(x)); };
  BfgsOptions bo;
  bo.grad_tol = 1e-10;
  const VectorOptimum o = minimize_multistart(neg, draw_ball, 8, seed, bo);
  return std::max(-o.value, 0.0);
}

QuantumBoundSet quantum_bounds(const GadcParams& p) {
  require_domain(p);
  QuantumBoundSet s;
  s.ic_lb = coherent_info_lb(p);
  s.dp = dp_bounds(p);
  if (p.gamma < 0.5) {
    s.deg1 = eps_deg_ubs(p);
    s.deg2 = eps_close_deg_ubs(p);
  } else {
    s.deg1 = s.deg2 = {kNan, kNan, kNan};
  }
  s.adeg = eps_adeg_ub(p);
  s.rains = rains_ub(p);
  s.rmg = q_rmg_ub(to_thermal(p));
  return s;
}

}  // namespace gadc
