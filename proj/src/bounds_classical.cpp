#include "gadc/bounds_classical.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "gadc/optimize.hpp"
#include "gadc/sdp.hpp"

namespace gadc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct HolevoEquation {
  double gamma;
  double n;

  std::optional<double> rstar(double q) const {
    const double c = gamma * (1.0 - 2.0 * n);
    double v = 1.0 - gamma - (q - c) * (q - c) / (1.0 - gamma) + q * q;
    if (v < -1e-12) return std::nullopt;
    v = std::max(v, 0.0);
    const double r = std::sqrt(v);
    if (r >= 1.0) return std::nullopt;
    return r;
  }

  std::optional<double> residual(double q) const {
    const auto r = rstar(q);
    if (!r) return std::nullopt;
    const double m = 1.0 - 2.0 * n;
    const double lhs = (gamma * q - gamma * gamma * m - gamma * (1.0 - gamma) * m) * holevo_fprime(*r);
    return lhs + *r * (1.0 - gamma) * holevo_fprime(q);
  }

  double chi(double q, double r) const {
    return 0.5 * (holevo_f(r) - std::log2(1.0 - q * q) - q * holevo_fprime(q));
  }
};

// Affine Bloch representation r -> t + T r of a qubit channel.
struct BlochMap {
  RealMatrix t = RealMatrix::Zero(3, 3);
  RealVector c = RealVector::Zero(3);
};

BlochMap bloch_map(const QuantumChannel& ch) {
  const std::array<ComplexMatrix, 3> s{pauli_x(), pauli_y(), pauli_z()};
  BlochMap m;
  const ComplexMatrix out0 = ch(0.5 * identity(2));
  for (int i = 0; i < 3; ++i) m.c(i) = (s[i] * out0).trace().real();
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix out = ch(0.5 * (identity(2) + s[j]));
    for (int i = 0; i < 3; ++i) m.t(i, j) = (s[i] * out).trace().real() - m.c(i);
  }
  return m;
}

double bloch_entropy(const RealVector& r) { return h2(0.5 * (1.0 - std::min(r.norm(), 1.0))); }

}  // namespace

double holevo_f(double x) { return xlog2x(1.0 + x) + xlog2x(1.0 - x); }

double holevo_fprime(double x) { return std::log2((1.0 + x) / (1.0 - x)); }

HolevoSolve holevo_gadc(const GadcParams& p) {
  require_domain(p);
  HolevoSolve out;
  if (p.gamma == 0.0) {
    out.chi = 1.0;
    out.rstar = 1.0;
    return out;
  }
  if (p.gamma == 1.0) return out;

  const HolevoEquation eq{p.gamma, p.n};
  constexpr int kScan = 2000;
  std::vector<double> qs(kScan);
  std::vector<std::optional<double>> res(kScan);
  for (int i = 0; i < kScan; ++i) {
    qs[i] = -1.0 + 2.0 * (i + 1) / (kScan + 1);
    res[i] = eq.residual(qs[i]);
  }
  bool found = false;
  for (int i = 0; i + 1 < kScan; ++i) {
    if (!res[i] || !res[i + 1]) continue;
    const double a = *res[i], b = *res[i + 1];
    if (!(a == 0.0 || a * b < 0.0)) continue;
    ++out.sign_changes;
    double lo = qs[i], hi = qs[i + 1], flo = a;
    if (a != 0.0) {
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto fm = eq.residual(mid);
        if (!fm) break;
        if (*fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((*fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = *fm;
        } else {
          hi = mid;
        }
      }
    } else {
      hi = lo;
    }
    const double q = 0.5 * (lo + hi);
    const auto r = eq.rstar(q);
    const auto fq = eq.residual(q);
    if (!r || !fq) continue;
    const double chi = eq.chi(q, *r);
    if (!found || chi > out.chi) {
      found = true;
      out.chi = chi;
      out.q = q;
      out.rstar = *r;
      out.residual = std::abs(*fq);
    }
  }
  if (!found) {
    out.fallback = true;
    out.q = out.rstar = out.residual = kNan;
    out.chi = holevo_generic(gadc_channel(p));
  }
  return out;
}

double holevo_generic(const QuantumChannel& ch, const HolevoOptions& opt) {
  if (ch.din() != 2 || ch.dout() != 2) throw std::invalid_argument("holevo_generic: needs a qubit channel");
  const BlochMap m = bloch_map(ch);
  constexpr int kStates = 4;
  // x = (theta_k, phi_k, w_k) per state; weights are a softmax of w.
  auto neg_chi = [&](const RealVector& x) {
    std::array<double, kStates> w{};
    double wmax = x(2);
    for (int k = 1; k < kStates; ++k) wmax = std::max(wmax, x(3 * k + 2));
    double z = 0.0;
    for (int k = 0; k < kStates; ++k) z += w[k] = std::exp(x(3 * k + 2) - wmax);
    RealVector avg = RealVector::Zero(3);
    double cond = 0.0;
    for (int k = 0; k < kStates; ++k) {
      const double th = x(3 * k), ph = x(3 * k + 1);
      RealVector r(3);
      r << std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th);
      const RealVector out = m.c + m.t * r;
      avg += (w[k] / z) * out;
      cond += (w[k] / z) * bloch_entropy(out);
    }
    return -(bloch_entropy(avg) - cond);
  };
  auto draw = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RealVector x(3 * kStates);
    for (int k = 0; k < kStates; ++k) {
      x(3 * k) = std::acos(1.0 - 2.0 * u(rng));
      x(3 * k + 1) = 2.0 * M_PI * u(rng);
      x(3 * k + 2) = u(rng) - 0.5;
    }
    return x;
  };
  const VectorOptimum best = minimize_multistart(neg_chi, draw, std::max(opt.restarts, 20), opt.seed);
  return std::max(-best.value, 0.0);
}

double c_beta_analytic(const GadcParams& p) {
  require_domain(p);
  return std::log2(1.0 + std::sqrt(1.0 - p.gamma));
}

double c_cov_ub(const GadcParams& p) {
  require_domain(p);
  const double eps = p.gamma * std::abs(p.n - 0.5);
  return holevo_gadc({p.gamma, 0.5}).chi + 2.0 * eps + g(eps);
}

EbBound c_eb_ub(const GadcParams& p, const HolevoOptions& opt) {
  require_domain(p);
  const ApproxResult r = sdp_eps_eb(gadc_channel({p.gamma, canonical_n(p.n)}));
  EbBound b;
  b.epsilon = std::max(r.epsilon, 0.0);
  b.chi_m = holevo_generic(channel_from_choi(r.map), opt);
  b.value = b.chi_m + 2.0 * b.epsilon + g(b.epsilon);
  return b;
}

double c_fil_ub(const GadcParams& p) {
  require_domain(p);
  if (p.n <= 0.0 || p.n >= 1.0) return kNan;
  const double n = std::max(p.n, 1.0 - p.n), gm = p.gamma;
  const double f = gm * std::sqrt(n * (1.0 - n)) +
                   std::sqrt(n + (1.0 - n) * (1.0 - gm)) * std::sqrt(1.0 - n + n * (1.0 - gm));
  return 1.0 - h2(0.5 * (1.0 - std::sqrt(1.0 - gm) / f)) + std::log2(f) + 0.5 * std::log2(n / (1.0 - n));
}

double mutual_info_objective(const GadcParams& p, double z) {
  require_domain(p);
  const double gm = p.gamma, m = 2.0 * p.n - 1.0;
  const double l1 = 0.5 * (1.0 + z), l2 = 0.5 * (1.0 - z);
  const double b = m * gm - (1.0 - gm) * z;
  const double lp1 = 0.5 * (1.0 + b), lp2 = 0.5 * (1.0 - b);
  const double lq1 = 0.5 * (1.0 - p.n) * gm * (1.0 - z);
  const double lq2 = 0.5 * p.n * gm * (1.0 + z);
  const double disc = std::max(4.0 - 4.0 * (1.0 + z * m) * gm + (m + z) * (m + z) * gm * gm, 0.0);
  const double base = 2.0 - (1.0 + m * z) * gm;
  const double lq3 = 0.25 * (base + std::sqrt(disc)), lq4 = 0.25 * (base - std::sqrt(disc));
  auto h = [](std::initializer_list<double> v) {
    double s = 0.0;
    for (double x : v) s -= xlog2x(x);
    return s;
  };
  return h({l1, l2}) + h({lp1, lp2}) - h({lq1, lq2, lq3, lq4});
}

MutualInfo mutual_info_gadc(const GadcParams& p) {
  require_domain(p);
  const ScalarOptimum o = maximize_scalar([&](double z) { return mutual_info_objective(p, z); }, -1.0, 1.0);
  return {o.value, o.x};
}

}  // namespace gadc
