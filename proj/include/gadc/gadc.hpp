#pragma once

#include <array>

#include "gadc/channels.hpp"

namespace gadc {

struct GadcParams {
  double gamma = 0.0;
  double n = 0.0;
};

// Qubit thermal channel parameters; eta = 1 - gamma.
struct ThermalParams {
  double eta = 1.0;
  double n = 0.0;
};

inline ThermalParams to_thermal(const GadcParams& p) { return {1.0 - p.gamma, p.n}; }
inline GadcParams to_gadc(const ThermalParams& t) { return {1.0 - t.eta, t.n}; }

void require_domain(const GadcParams& p);

// Kraus operators A1..A4 with identically-zero ones dropped.
QuantumChannel gadc_channel(const GadcParams& p);
// All four Kraus operators kept, so the environment is always 4-dimensional
// with basis labels matching A1..A4.
QuantumChannel gadc_channel_full(const GadcParams& p);
// Closed-form Choi state.
ChoiMatrix gadc_choi(const GadcParams& p);

std::array<double, 3> bloch_image(const GadcParams& p, const std::array<double, 3>& r);
ComplexMatrix bloch_to_density(const std::array<double, 3>& r);
std::array<double, 3> density_to_bloch(const ComplexMatrix& rho);

// A = outer o inner.
struct SerialFactorization {
  GadcParams outer;
  GadcParams inner;
  bool degenerate = false;
};
struct SerialDecomposition {
  SerialFactorization first;   // A_{gN,1} o A_{g(1-N)/(1-gN),0}
  SerialFactorization second;  // A_{g(1-N),0} o A_{gN/(1-g(1-N)),1}
};
// min(N, 1 - N) on a 1e-12 grid, so N and 1 - N map to the same double.
// A_{gamma,N} and A_{gamma,1-N} are unitarily equivalent.
double canonical_n(double n);

SerialDecomposition serial_decompose(const GadcParams& p);
// Parameters of A_{g2,N2} o A_{g1,N1}.
GadcParams compose_params(const GadcParams& first, const GadcParams& second);

struct EbResult {
  bool entanglement_breaking = false;
  double margin = 0.0;  // det of the partially transposed Choi state
};
EbResult is_entanglement_breaking(const GadcParams& p);
double eb_det_margin(const GadcParams& p);
// Closed-form region test (gamma threshold plus N interval).
bool in_eb_region(const GadcParams& p);
// Interval of N for which A_{gamma,N} breaks entanglement; empty if lo > hi.
std::array<double, 2> eb_n_interval(double gamma);

struct TwoExtension {
  double purity_ab = 0.0;  // Tr rho_AB^2
  double purity_b = 0.0;   // Tr rho_B^2
  double det_ab = 0.0;     // det rho_AB
  double lhs() const { return purity_ab - purity_b; }
  double rhs() const;
  bool holds(double tol = 1e-12) const { return lhs() <= rhs() + tol; }
};
TwoExtension two_extension(const GadcParams& p);
bool is_antidegradable(const GadcParams& p);

// Four-dimensional environment -> qubit map with E*(A^c_{g,N}) = A_{1-g,N}.
QuantumChannel env_swap_channel();
QuantumChannel gadc_complementary(const GadcParams& p);
QuantumChannel antidegrading_channel(const GadcParams& p);

QuantumChannel phase_damping(double mu);

// Beamsplitter unitary on A (x) E and the thermal channel built from it.
ComplexMatrix beamsplitter(double eta);
QuantumChannel thermal_channel(const ThermalParams& t);
// Qubit -> B (x) E' channel that keeps the purifying system of the thermal state.
QuantumChannel extended_channel(const ThermalParams& t);
// Z^[N>1/2] o P_{(1-2N)^2} o L_{(1-eta)/eta,N} o Tr_{E'}; requires eta >= 1/2.
QuantumChannel extended_degrading_channel(const ThermalParams& t);

}  // namespace gadc
