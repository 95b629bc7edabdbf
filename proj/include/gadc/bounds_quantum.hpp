#pragma once

#include <array>
#include <cstdint>

#include "gadc/channels.hpp"
#include "gadc/gadc.hpp"

namespace gadc {

// max_p h2((1-gamma)p) - h2(gamma p) for gamma < 1/2, else 0.
double q_ad(double gamma);

// H(N(rho)) - H(N^c(rho)).
double coherent_info(const QuantumChannel& ch, const QuantumChannel& comp, const ComplexMatrix& rho);
// max over diag(1-p, p) of the coherent information, clipped at 0.
double max_diagonal_coherent_info(const QuantumChannel& ch);

double coherent_info_lb(const GadcParams& p);

// Q_DP,1..4; each also bounds the private capacity.
std::array<double, 4> dp_bounds(const GadcParams& p);

struct UdOptions {
  int restarts = 8;
  std::uint64_t seed = 1;
};
// max_rho H(N(rho)) - H(D(N(rho))), which equals H(F|E~) of the doubly
// extended state; degrading is the Choi matrix of D: B -> E.
double u_d(const QuantumChannel& ch, const ChoiMatrix& degrading, const UdOptions& opt = {});

struct ApproxBound {
  double q_ub = 0.0;
  double p_ub = 0.0;
  double epsilon = 0.0;
};
// U_D + 4 eps + g(eps) and U_D + 12 eps + 3 g(eps); gamma in [0, 1/2).
// Evaluated at min(N, 1 - N) rounded to 1e-12, a unitarily equivalent channel.
ApproxBound eps_deg_ubs(const GadcParams& p, const UdOptions& opt = {});
// Q(A_{gamma,0}) + 2 eps + 2 g(eps) and Q(A_{gamma,0}) + 4 eps + 4 g(eps); gamma in [0, 1/2).
ApproxBound eps_close_deg_ubs(const GadcParams& p);
// 2 eps + h2(eps) + g(eps); bounds both capacities.
ApproxBound eps_adeg_ub(const GadcParams& p);

struct RainsOptions {
  int restarts = 10;
  std::uint64_t seed = 1;
  int outer_seeds = 21;
  double phi = 0.0;  // phase of the PPT family coherence
};
// D(rho_AB(p) || sigma) over the PPT X-state family, minimized over sigma.
double rains_inner(const GadcParams& p, double input_p, const RainsOptions& opt = {});
// max_p rains_inner.
double rains_ub(const GadcParams& p, const RainsOptions& opt = {});

// Coherent information of the extended thermal channel over diagonal inputs;
// N = 0 uses q_ad(1 - eta).
double q_rmg_ub(const ThermalParams& t);
// Same quantity maximized over the whole Bloch ball.
double q_rmg_full_bloch(const ThermalParams& t, std::uint64_t seed = 1);

struct QuantumBoundSet {
  double ic_lb = 0.0;
  std::array<double, 4> dp{};
  ApproxBound deg1;   // NaN outside gamma < 1/2
  ApproxBound deg2;   // NaN outside gamma < 1/2
  ApproxBound adeg;
  double rains = 0.0;
  double rmg = 0.0;
};
QuantumBoundSet quantum_bounds(const GadcParams& p);

}  // namespace gadc
