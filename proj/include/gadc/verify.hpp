#pragma once

#include <string>
#include <vector>

#include "gadc/gadc.hpp"

namespace gadc {

struct VerifyCheck {
  std::string name;
  GadcParams point;
  double value = 0.0;  // absolute error, or minimum slack eigenvalue for witness PSD checks
  double tol = 0.0;    // 0 for witness checks, which carry their own tolerances
  bool ok = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
  int failures() const;
  void append(const VerifyReport& other);
};

// gamma in {0.1, ..., 0.9} x N in {0, 0.25, 0.5}.
std::vector<GadcParams> verify_grid();
// gamma in {0.2, 0.5, 0.8} x N in {0, 0.1, 0.3, 0.75}.
std::vector<GadcParams> eps_cov_points();

// beta, zeta and E_max / R_max witness suites.
VerifyReport verify_witnesses(const std::vector<GadcParams>& grid, bool inject_fault = false);
// Choi identities at tolerance 1e-10: convex decomposition, both serial
// decompositions, degradability of A_{gamma,0} (gamma < 1/2), the
// anti-degrading identity (gamma >= 1/2), and the extended-channel marginal and
// degradability (eta = 1 - gamma >= 1/2).
VerifyReport verify_structural(const std::vector<GadcParams>& grid);
// 1/2 ||A_{gamma,N} - A_{gamma,1/2}||_dmd against gamma |N - 1/2| at tolerance 1e-6.
VerifyReport verify_eps_cov(const std::vector<GadcParams>& points, bool inject_fault = false);

// All three suites on their default grids.
VerifyReport run_verify_suite(bool inject_fault = false);

}  // namespace gadc
