#include "gadc/bounds_twoway.hpp"

#include <cmath>
#include <stdexcept>

#include "gadc/bounds_classical.hpp"
#include "gadc/optimize.hpp"

namespace gadc {

namespace {

// A' -> B' (x) E' isometry sum_k K_k (x) |k> over the two Kraus operators of
// A_{gamma,N} for N in {0, 1}: (A1, A2) for N = 0, (A3, A4) for N = 1.
ComplexMatrix stage_isometry(const GadcParams& stage) {
  const int first = stage.n >= 0.5 ? 2 : 0;
  const QuantumChannel ch = gadc_channel_full({stage.gamma, first == 2 ? 1.0 : 0.0});
  ComplexMatrix v = ComplexMatrix::Zero(4, 2);
  for (int k = 0; k < 2; ++k)
    for (int b = 0; b < 2; ++b)
      for (int a = 0; a < 2; ++a) v(b * 2 + k, a) = ch.kraus()[first + k](b, a);
  return v;
}

double sq(double x) { return x * x; }

}  // namespace

double reverse_coherent_lb(const GadcParams& p) {
  require_domain(p);
  const QuantumChannel comp = complementary(gadc_channel(p));
  auto rci = [&](double q) {
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 1.0 - q;
    rho(1, 1) = q;
    return h2(q) - entropy_of_eigenvalues(eigvalsh(comp(rho)));
  };
  return std::max(maximize_scalar(rci, 0.0, 1.0).value, 0.0);
}

double half_mi_ub(const GadcParams& p) { return 0.5 * mutual_info_gadc(p).value; }

ComplexMatrix squashed_state(const GadcParams& p, double input_p, const SquashedBoundConfig& cfg) {
  require_domain(p);
  if (cfg.variant != 1 && cfg.variant != 2) throw std::invalid_argument("squashed_state: variant must be 1 or 2");
  for (double s : cfg.squash)
    if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("squashed_state: squash parameters outside [0,1]");
  const SerialDecomposition d = serial_decompose(p);
  const SerialFactorization& f = cfg.variant == 1 ? d.first : d.second;
  const ComplexMatrix v1 = stage_isometry(f.inner), v2 = stage_isometry(f.outer);
  const double amp[2] = {std::sqrt(1.0 - input_p), std::sqrt(input_p)};
  // psi indexed (a, b, e1, e2).
  ComplexVector psi = ComplexVector::Zero(16);
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp)
      for (int e1 = 0; e1 < 2; ++e1)
        for (int b = 0; b < 2; ++b)
          for (int e2 = 0; e2 < 2; ++e2)
            psi(((a * 2 + b) * 2 + e1) * 2 + e2) += amp[a] * v1(bp * 2 + e1, a) * v2(b * 2 + e2, bp);
  const ComplexMatrix pure = psi * psi.adjoint();
  const QuantumChannel s1 = gadc_channel({cfg.squash[0], cfg.squash[1]});
  const QuantumChannel s2 = gadc_channel({cfg.squash[2], cfg.squash[3]});
  ComplexMatrix rho = ComplexMatrix::Zero(16, 16);
  for (const ComplexMatrix& k1 : s1.kraus())
    for (const ComplexMatrix& k2 : s2.kraus()) {
      const ComplexMatrix op = tensor({identity(4), k1, k2});
      rho += op * pure * op.adjoint();
    }
  return hermitize(rho);
}

double squashed_cmi(const GadcParams& p, double input_p, const SquashedBoundConfig& cfg) {
  const ComplexMatrix rho = squashed_state(p, input_p, cfg);
  return 0.5 * std::max(cmi(rho, {2, 2, 2, 2}, {Part::A, Part::B, Part::E, Part::E}), 0.0);
}

double esq_ub(const GadcParams& p, const SquashedBoundConfig& cfg) {
  return maximize_scalar([&](double q) { return squashed_cmi(p, q, cfg); }, 0.0, 1.0, 101).value;
}

SquashedBound esq_best(const GadcParams& p, bool reoptimize) {
  SquashedBound out;
  for (int v = 1; v <= 2; ++v) {
    SquashedBoundConfig cfg;
    cfg.variant = v;
    double value = esq_ub(p, cfg);
    if (reoptimize) {
      // Squash parameters are sin^2 of free coordinates.
      auto inner = [&](double q) {
        auto f = [&](const RealVector& x) {
          SquashedBoundConfig c;
          c.variant = v;
          for (int i = 0; i < 4; ++i) c.squash[i] = sq(std::sin(x(i)));
          return squashed_cmi(p, q, c);
        };
        RealVector x0(4);
        x0 << M_PI / 4, 0.1, M_PI / 4, 0.1;
        BfgsOptions bo;
        bo.max_iter = 100;
        return std::min(minimize_bfgs(f, x0, bo).value, squashed_cmi(p, q, cfg));
      };
      value = std::min(value, maximize_scalar(inner, 0.0, 1.0, 21, 1e-6).value);
    }
    out.variants[v - 1] = value;
  }
  out.value = std::min(out.variants[0], out.variants[1]);
  return out;
}

double max_rains_analytic(const GadcParams& p) {
  require_domain(p);
  if (is_entanglement_breaking(p).entanglement_breaking) return 0.0;
  const double gm = p.gamma;
  return std::log2(1.0 - 0.5 * gm + 0.5 * std::sqrt(sq(gm * (2.0 * p.n - 1.0)) + 4.0 * (1.0 - gm)));
}

double er_bell_diagonal(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::domain_error("er_bell_diagonal: gamma outside [0,1]");
  if (gamma == 0.0) return 1.0;
  if (gamma >= 2.0 * (std::sqrt(2.0) - 1.0)) return 0.0;
  const double s = std::sqrt(1.0 - gamma);
  const double r[4] = {0.25 * (2.0 + 2.0 * s - gamma), 0.25 * (2.0 - 2.0 * s - gamma), 0.25 * gamma, 0.25 * gamma};
  double v = 1.0;
  for (double x : r) v += xlog2x(x);
  v -= 0.5 * gamma * std::log2(gamma / (2.0 - 2.0 * s + gamma));
  v += 0.25 * (gamma - 2.0 + 2.0 * s) * std::log2((4.0 - gamma - 4.0 * s) / (8.0 + gamma));
  return std::max(v, 0.0);
}

ComplexMatrix er_closest_separable(double gamma) {
  const double x = gamma / (2.0 * (2.0 - 2.0 * std::sqrt(1.0 - gamma) + gamma));
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = s(3, 3) = 0.5 - x;
  s(1, 1) = s(2, 2) = s(0, 3) = s(3, 0) = x;
  return s;
}

double cov_twoway_ub(const GadcParams& p) {
  require_domain(p);
  const double eps = p.gamma * std::abs(p.n - 0.5);
  return er_bell_diagonal(p.gamma) + 2.0 * eps + g(eps);
}

}  // namespace gadc
