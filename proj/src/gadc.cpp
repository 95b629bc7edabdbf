#include "gadc/gadc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gadc {

void require_domain(const GadcParams& p) {
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0 && p.n >= 0.0 && p.n <= 1.0))
    throw std::domain_error("GADC parameters outside [0,1]^2");
}

namespace {

std::array<ComplexMatrix, 4> gadc_kraus(const GadcParams& p, std::array<double, 4>& pref) {
  require_domain(p);
  const double g = p.gamma, n = p.n, s = std::sqrt(1.0 - g);
  pref = {std::sqrt(1.0 - n), std::sqrt(g * (1.0 - n)), std::sqrt(n), std::sqrt(g * n)};
  std::array<ComplexMatrix, 4> k;
  for (auto& m : k) m = ComplexMatrix::Zero(2, 2);
  k[0](0, 0) = pref[0];
  k[0](1, 1) = pref[0] * s;
  k[1](0, 1) = pref[1];
  k[2](0, 0) = pref[2] * s;
  k[2](1, 1) = pref[2];
  k[3](1, 0) = pref[3];
  return k;
}

}  // namespace

QuantumChannel gadc_channel(const GadcParams& p) {
  std::array<double, 4> pref{};
  auto k = gadc_kraus(p, pref);
  std::vector<ComplexMatrix> kept;
  for (int i = 0; i < 4; ++i)
    if (pref[i] != 0.0) kept.push_back(k[i]);
  return QuantumChannel(2, 2, std::move(kept));
}

QuantumChannel gadc_channel_full(const GadcParams& p) {
  std::array<double, 4> pref{};
  auto k = gadc_kraus(p, pref);
  return QuantumChannel(2, 2, {k[0], k[1], k[2], k[3]});
}

ChoiMatrix gadc_choi(const GadcParams& p) {
  require_domain(p);
  const double g = p.gamma, n = p.n;
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0 - g * n;
  m(1, 1) = g * n;
  m(2, 2) = g * (1.0 - n);
  m(3, 3) = 1.0 - g * (1.0 - n);
  m(0, 3) = m(3, 0) = std::sqrt(1.0 - g);
  return {2, 2, 0.5 * m};
}

std::array<double, 3> bloch_image(const GadcParams& p, const std::array<double, 3>& r) {
  const double s = std::sqrt(1.0 - p.gamma);
  return {r[0] * s, r[1] * s, r[2] * (1.0 - p.gamma) + p.gamma * (1.0 - 2.0 * p.n)};
}

ComplexMatrix bloch_to_density(const std::array<double, 3>& r) {
  return 0.5 * (identity(2) + r[0] * pauli_x() + r[1] * pauli_y() + r[2] * pauli_z());
}

std::array<double, 3> density_to_bloch(const ComplexMatrix& rho) {
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

GadcParams compose_params(const GadcParams& first, const GadcParams& second) {
  const double g = first.gamma + second.gamma - first.gamma * second.gamma;
  if (g == 0.0) return {0.0, first.n};
  return {g, (first.gamma * (1.0 - second.gamma) * first.n + second.gamma * second.n) / g};
}

double canonical_n(double n) { return std::round(std::min(n, 1.0 - n) * 1e12) / 1e12; }

SerialDecomposition serial_decompose(const GadcParams& p) {
  require_domain(p);
  const double g = p.gamma, n = p.n;
  SerialDecomposition d;
  if (1.0 - g * n > 0.0) {
    d.first = {{g * n, 1.0}, {std::min(g * (1.0 - n) / (1.0 - g * n), 1.0), 0.0}, false};
  } else {
    d.first = {p, {0.0, 0.0}, true};
  }
  if (1.0 - g * (1.0 - n) > 0.0) {
    d.second = {{g * (1.0 - n), 0.0}, {std::min(g * n / (1.0 - g * (1.0 - n)), 1.0), 1.0}, false};
  } else {
    d.second = {p, {0.0, 0.0}, true};
  }
  return d;
}

double eb_det_margin(const GadcParams& p) {
  const double g = p.gamma, n = p.n;
  return (-1.0 + 2.0 * g - g * g + std::pow(g, 4) * (1.0 - n) * (1.0 - n) * n * n) / 16.0;
}

std::array<double, 2> eb_n_interval(double gamma) {
  if (gamma <= 0.0) return {1.0, 0.0};
  const double rad = (gamma * gamma + 4.0 * gamma - 4.0) / (gamma * gamma);
  if (rad < 0.0) return {1.0, 0.0};
  const double r = std::sqrt(rad);
  return {0.5 * (1.0 - r), 0.5 * (1.0 + r)};
}

bool in_eb_region(const GadcParams& p) {
  if (p.gamma < 2.0 * (std::sqrt(2.0) - 1.0)) return false;
  const auto iv = eb_n_interval(p.gamma);
  return p.n >= iv[0] && p.n <= iv[1];
}

EbResult is_entanglement_breaking(const GadcParams& p) {
  require_domain(p);
  return {in_eb_region(p), eb_det_margin(p)};
}

double TwoExtension::rhs() const { return 4.0 * std::sqrt(std::max(det_ab, 0.0)); }

TwoExtension two_extension(const GadcParams& p) {
  const double g = p.gamma, n = p.n, g2 = g * g;
  TwoExtension t;
  t.purity_ab = g2 * n * n - g2 * n + 0.5 * g2 - g + 1.0;
  t.purity_b = 2.0 * g2 * n * n - 2.0 * g2 * n + 0.5 * g2 + 0.5;
  t.det_ab = g2 * g2 * n * n * (1.0 - n) * (1.0 - n) / 16.0;
  return t;
}

bool is_antidegradable(const GadcParams& p) {
  require_domain(p);
  return p.gamma >= 0.5;
}

QuantumChannel env_swap_channel() {
  ComplexMatrix e0 = ComplexMatrix::Zero(2, 4), e1 = ComplexMatrix::Zero(2, 4);
  e0(0, 0) = 1.0;
  e0(1, 1) = 1.0;
  e1(0, 3) = 1.0;
  e1(1, 2) = 1.0;
  return QuantumChannel(4, 2, {e0, e1});
}

QuantumChannel gadc_complementary(const GadcParams& p) { return complementary(gadc_channel_full(p)); }

QuantumChannel antidegrading_channel(const GadcParams& p) {
  require_domain(p);
  if (p.gamma < 0.5) throw std::domain_error("antidegrading_channel: gamma < 1/2");
  return compose(gadc_channel({(2.0 * p.gamma - 1.0) / p.gamma, p.n}), env_swap_channel());
}

QuantumChannel phase_damping(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("phase_damping: mu outside [0,1]");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(mu);
  k1(1, 1) = std::sqrt(1.0 - mu);
  return QuantumChannel(2, 2, {k0, k1});
}

ComplexMatrix beamsplitter(double eta) {
  const double a = std::sqrt(eta), b = std::sqrt(1.0 - eta);
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = a;
  u(1, 2) = b;
  u(2, 1) = -b;
  u(2, 2) = a;
  u(3, 3) = 1.0;
  return u;
}

namespace {

void require_thermal(const ThermalParams& t) {
  if (!(t.eta >= 0.0 && t.eta <= 1.0 && t.n >= 0.0 && t.n <= 1.0))
    throw std::domain_error("thermal parameters outside [0,1]^2");
}

}  // namespace

QuantumChannel thermal_channel(const ThermalParams& t) {
  require_thermal(t);
  const ComplexMatrix u = beamsplitter(t.eta);
  const double w[2] = {1.0 - t.n, t.n};
  std::vector<ComplexMatrix> kraus;
  for (int f = 0; f < 2; ++f) {
    if (w[f] == 0.0) continue;
    for (int e = 0; e < 2; ++e) {
      ComplexMatrix k(2, 2);
      for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) k(b, a) = std::sqrt(w[f]) * u(b * 2 + e, a * 2 + f);
      kraus.push_back(k);
    }
  }
  return QuantumChannel(2, 2, std::move(kraus));
}

QuantumChannel extended_channel(const ThermalParams& t) {
  require_thermal(t);
  const ComplexMatrix u = beamsplitter(t.eta);
  const double w[2] = {1.0 - t.n, t.n};
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < 2; ++e) {
    ComplexMatrix k = ComplexMatrix::Zero(4, 2);
    for (int b = 0; b < 2; ++b)
      for (int ep = 0; ep < 2; ++ep)
        for (int a = 0; a < 2; ++a) k(b * 2 + ep, a) = std::sqrt(w[ep]) * u(b * 2 + e, a * 2 + ep);
    kraus.push_back(k);
  }
  return QuantumChannel(2, 4, std::move(kraus));
}

QuantumChannel extended_degrading_channel(const ThermalParams& t) {
  require_thermal(t);
  if (t.eta < 0.5) throw std::domain_error("extended_degrading_channel: needs eta >= 1/2");
  const QuantumChannel drop = partial_trace_channel({2, 2}, {0});
  const QuantumChannel mid = thermal_channel({(1.0 - t.eta) / t.eta, t.n});
  const double m = 1.0 - 2.0 * t.n;
  QuantumChannel out = compose(phase_damping(m * m), compose(mid, drop));
  if (m < 0.0) out = compose(unitary_channel(pauli_z()), out);
  return out;
}

}  // namespace gadc
