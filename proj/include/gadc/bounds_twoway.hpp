#pragma once

#include <array>

#include "gadc/gadc.hpp"

namespace gadc {

// max over diag(1-p, p) of H(rho) - H(A^c(rho)), clipped at 0.
double reverse_coherent_lb(const GadcParams& p);

// 1/2 max_z F(gamma, N, z).
double half_mi_ub(const GadcParams& p);

struct SquashedBoundConfig {
  int variant = 1;  // 1: A_{gN,1} o A_{g(1-N)/(1-gN),0}; 2: A_{g(1-N),0} o A_{gN/(1-g(1-N)),1}
  std::array<double, 4> squash{0.5, 0.0, 0.5, 0.0};  // (gamma1, N1, gamma2, N2)
};

// State on A (x) B (x) E1 (x) E2 from theta^p through the two Kraus
// isometries of the chosen decomposition and the squashing channels on E1', E2'.
ComplexMatrix squashed_state(const GadcParams& p, double input_p, const SquashedBoundConfig& cfg);
// 1/2 I(A;B|E1E2) of squashed_state.
double squashed_cmi(const GadcParams& p, double input_p, const SquashedBoundConfig& cfg);
// 1/2 max_p I(A;B|E1E2).
double esq_ub(const GadcParams& p, const SquashedBoundConfig& cfg = {});

struct SquashedBound {
  double value = 0.0;  // min over the two variants
  std::array<double, 2> variants{};
};
// With reoptimize, the squashing parameters are also locally minimized at
// each input p, starting from (1/2, 0, 1/2, 0).
SquashedBound esq_best(const GadcParams& p, bool reoptimize = false);

// log2(1 - gamma/2 + sqrt((gamma(2N-1))^2 + 4(1-gamma))/2); 0 if EB.
double max_rains_analytic(const GadcParams& p);

// E_R of the Choi state of A_{gamma,1/2}; 0 for gamma >= 2(sqrt 2 - 1).
double er_bell_diagonal(double gamma);
// Bell-diagonal separable state attaining that value.
ComplexMatrix er_closest_separable(double gamma);

// er_bell_diagonal(gamma) + 2 eps + g(eps), eps = gamma |N - 1/2|.
double cov_twoway_ub(const GadcParams& p);

}  // namespace gadc
