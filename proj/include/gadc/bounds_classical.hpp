#pragma once

#include <cstdint>

#include "gadc/channels.hpp"
#include "gadc/gadc.hpp"

namespace gadc {

struct HolevoSolve {
  double chi = 0.0;
  double q = 0.0;
  double rstar = 0.0;
  double residual = 0.0;  // |residual| of the root equation at q
  int sign_changes = 0;   // brackets found by the scan
  bool fallback = false;  // no bracket found; chi from holevo_generic
};

// f(x) = (1+x) log2(1+x) + (1-x) log2(1-x) and its derivative.
double holevo_f(double x);
double holevo_fprime(double x);

// chi(A) = 1/2 (f(r*) - log2(1 - q^2) - q f'(q)), with q from the implicit
// root equation; all sign changes on a 2000-point scan are bisected and the
// largest chi is kept. gamma in {0, 1} use the identity and constant limits.
HolevoSolve holevo_gadc(const GadcParams& p);

struct HolevoOptions {
  int restarts = 24;
  std::uint64_t seed = 1;
};
// Best Holevo quantity over ensembles of four pure inputs (qubit to qubit).
double holevo_generic(const QuantumChannel& ch, const HolevoOptions& opt = {});

// log2(1 + sqrt(1 - gamma)).
double c_beta_analytic(const GadcParams& p);
// chi(A_{gamma,1/2}) + 2 eps + g(eps), eps = gamma |N - 1/2|.
double c_cov_ub(const GadcParams& p);

struct EbBound {
  double value = 0.0;
  double epsilon = 0.0;
  double chi_m = 0.0;  // Holevo information of the closest PPT channel
};
// chi(M) + 2 eps + g(eps), with eps and M from the PPT-distance SDP, evaluated at
// canonical_n(N).
EbBound c_eb_ub(const GadcParams& p, const HolevoOptions& opt = {});

// Filippov bound in the orientation max(N, 1 - N); NaN for N in {0, 1}.
double c_fil_ub(const GadcParams& p);

// F(gamma, N, z) = H(lambda) + H(lambda') - H(lambda'').
double mutual_info_objective(const GadcParams& p, double z);
struct MutualInfo {
  double value = 0.0;
  double z = 0.0;
};
// C_E = max_z F(gamma, N, z).
MutualInfo mutual_info_gadc(const GadcParams& p);

}  // namespace gadc
