#pragma once

#include <string>
#include <vector>

#include "gadc/channels.hpp"
#include "gadc/cone.hpp"
#include "gadc/gadc.hpp"

namespace gadc {

// Programs on unnormalized Choi matrices Gamma on A (x) B.
//
// Diamond norm of a Hermiticity-preserving difference with Choi J:
//   1/2 ||Delta||_dmd = min t  s.t.  Z >= 0, Z >= J, t I_A >= Tr_B Z.
ConeProgram diamond_program(const ComplexMatrix& j, int din, int dout);
// beta: min Tr S  s.t.  -R <= Gamma^{T_B} <= R, -I (x) S <= R^{T_B} <= I (x) S.
ConeProgram beta_program(const ComplexMatrix& gamma, int din, int dout);
// zeta: min Tr S  s.t.  V >= Gamma, -I (x) S <= V^{T_B} <= I (x) S.
ConeProgram zeta_program(const ComplexMatrix& gamma, int din, int dout);
// Delta: min ||Tr_B[V + Y]||_inf  s.t.  Y, V >= 0, (V - Y)^{T_B} >= Gamma.
ConeProgram rmax_program(const ComplexMatrix& gamma, int din, int dout);
// Sigma: min ||Tr_B Y||_inf  s.t.  Y >= Gamma, Y^{T_B} >= 0.
ConeProgram emax_program(const ComplexMatrix& gamma, int din, int dout);

// Target feasibility and gap tolerance for solve_checked (default 1e-10).
// Runs that stall are accepted if they meet max(target, solver defaults).
void set_sdp_tolerance(double tol);
double sdp_tolerance();

// Solves and throws std::runtime_error unless the solver reports optimality.
ConeSolution solve_checked(const ConeProgram& p, const char* what);

double diamond_dist(const QuantumChannel& a, const QuantumChannel& b);
double sdp_c_beta(const QuantumChannel& ch);
double sdp_c_zeta(const QuantumChannel& ch);
double sdp_delta_rmax(const QuantumChannel& ch);
double sdp_sigma_emax(const QuantumChannel& ch);

struct ApproxResult {
  double epsilon = 0.0;
  ChoiMatrix map;  // optimizing degrading, anti-degrading or EB channel
};
// min_D 1/2 ||N^c - D o N||_dmd over channels D: B -> E (E from the Kraus count of ch).
ApproxResult sdp_eps_deg(const QuantumChannel& ch);
// min_E 1/2 ||N - E o N^c||_dmd over channels E: E -> B.
double sdp_eps_adeg(const QuantumChannel& ch);
// min_M 1/2 ||N - M||_dmd over channels with PPT Choi matrix (qubit input and output).
ApproxResult sdp_eps_eb(const QuantumChannel& ch);

struct WitnessCheck {
  std::string name;
  double value = 0.0;  // minimum eigenvalue of a slack, or an absolute error
  bool ok = false;
};

struct WitnessReport {
  double expected = 0.0;  // closed-form optimum, linear scale
  std::vector<WitnessCheck> checks;
  bool ok() const;
};

// Primal (R, S) and dual (K, E) witnesses for beta, primal (V, S) and dual
// (K, E) witnesses for zeta; objectives must equal 1 + sqrt(1 - gamma).
WitnessReport verify_cbeta_witness(const GadcParams& p, bool inject_fault = false);
// Primal Y and dual (P, Q, rho_A) for Sigma, dual (R, rho_A) for Delta;
// objectives must equal 1 - gamma/2 + sqrt((gamma(2N-1))^2 + 4(1-gamma))/2.
WitnessReport verify_emax_witness(const GadcParams& p, bool inject_fault = false);

}  // namespace gadc
