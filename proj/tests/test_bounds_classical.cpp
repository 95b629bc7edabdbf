#include <cmath>
#include <random>

#include "doctest.h"
#include "gadc/bounds_classical.hpp"
#include "gadc/sdp.hpp"

using namespace gadc;

namespace {

// I(A;B) of (id (x) A)(theta_z), theta_z the purification of diag((1+z)/2, (1-z)/2).
double direct_mi(const GadcParams& p, double z) {
  ComplexMatrix psi = ComplexMatrix::Zero(4, 1);
  psi(0, 0) = std::sqrt(0.5 * (1 + z));
  psi(3, 0) = std::sqrt(0.5 * (1 - z));
  const ComplexMatrix in = psi * psi.adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  const QuantumChannel ch = gadc_channel(p);
  for (const ComplexMatrix& k : ch.kraus()) {
    const ComplexMatrix ik = tensor(identity(2), k);
    out += ik * in * ik.adjoint();
  }
  return mutual_info(out, 2, 2);
}

double chi_closed_half(double gm) { return 1 - h2(0.5 * (1 - std::sqrt(1 - gm))); }

const double kGammas[] = {0.0, 0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95, 1.0};

}  // namespace

TEST_CASE("holevo information at N = 1/2") {
  CHECK(holevo_gadc({0.5, 0.5}).chi == doctest::Approx(0.3990).epsilon(1e-4));
  for (double gm = 0.0; gm <= 1.0 + 1e-12; gm += 0.05) {
    const HolevoSolve h = holevo_gadc({std::min(gm, 1.0), 0.5});
    CHECK(std::abs(h.chi - chi_closed_half(std::min(gm, 1.0))) <= 1e-8);
    CHECK_FALSE(h.fallback);
  }
  CHECK(holevo_gadc({1e-9, 0.3}).chi == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(holevo_gadc({0.0, 0.3}).chi == 1.0);
  CHECK(holevo_gadc({1.0, 0.3}).chi == 0.0);
}

TEST_CASE("holevo root solve agrees with ensemble optimization") {
  const HolevoSolve h = holevo_gadc({0.3, 0.2});
  CHECK(h.chi == doctest::Approx(0.606202).epsilon(1e-5));
  CHECK(h.q > -1);
  CHECK(h.q < 1);
  CHECK(h.residual <= 1e-9);
  CHECK(std::abs(h.chi - holevo_generic(gadc_channel({0.3, 0.2}))) <= 1e-4);
  for (const GadcParams p : {GadcParams{0.6, 0.1}, GadcParams{0.9, 0.0}, GadcParams{0.2, 0.4},
                             GadcParams{0.45, 0.85}, GadcParams{0.7, 1.0}}) {
    const HolevoSolve s = holevo_gadc(p);
    CHECK_FALSE(s.fallback);
    CHECK(s.residual <= 1e-9);
    CHECK(std::abs(s.chi - holevo_generic(gadc_channel(p))) <= 1e-4);
  }
}

TEST_CASE("generic holevo quantity") {
  CHECK(holevo_generic(identity_channel(2)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::abs(holevo_generic(gadc_channel({1.0, 0.3}))) <= 1e-8);
  CHECK(holevo_generic(phase_damping(0.2)) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("c_beta and c_cov") {
  CHECK(c_beta_analytic({0.0, 0.4}) == 1.0);
  CHECK(c_beta_analytic({1.0, 0.4}) == 0.0);
  CHECK(c_beta_analytic({0.5, 0.1}) == doctest::Approx(0.7716).epsilon(1e-4));
  CHECK(std::abs(c_beta_analytic({0.5, 0.1}) - sdp_c_beta(gadc_channel({0.5, 0.1}))) <= 1e-6);

  for (double gm : kGammas) CHECK(std::abs(c_cov_ub({gm, 0.5}) - holevo_gadc({gm, 0.5}).chi) <= 1e-8);
  const double eps = 0.5 * diamond_dist(gadc_channel({0.4, 0.25}), gadc_channel({0.4, 0.5}));
  CHECK(std::abs(eps - 0.1) <= 1e-6);
  CHECK(c_cov_ub({0.4, 0.25}) == doctest::Approx(holevo_gadc({0.4, 0.5}).chi + 0.2 + g(0.1)).epsilon(1e-12));
  CHECK(c_cov_ub({0.4, 0.25}) == c_cov_ub({0.4, 0.75}));
}

TEST_CASE("c_eb") {
  const EbBound in = c_eb_ub({0.9, 0.5});
  CHECK(in.epsilon <= 1e-6);
  CHECK(std::abs(in.value - holevo_gadc({0.9, 0.5}).chi) <= 1e-4);
  const EbBound id = c_eb_ub({0.0, 0.3});
  CHECK(std::abs(id.epsilon - sdp_eps_eb(identity_channel(2)).epsilon) <= 1e-6);
  CHECK(id.value >= 1.0);
  // Margin shrinks along N = 1/2 toward the EB threshold 2(sqrt 2 - 1).
  double prev = kInf;
  for (double gm : {0.2, 0.4, 0.6, 0.8}) {
    const double margin = c_eb_ub({gm, 0.5}).value - holevo_gadc({gm, 0.5}).chi;
    CHECK(margin >= -1e-6);
    CHECK(margin <= prev + 1e-6);
    prev = margin;
  }
}

TEST_CASE("filippov bound") {
  for (double gm : kGammas)
    CHECK(std::abs(c_fil_ub({gm, 0.5}) - holevo_gadc({gm, 0.5}).chi) <= 1e-6);
  const double v = c_fil_ub({0.6, 0.3});
  CHECK(std::isfinite(v));
  CHECK(v >= holevo_gadc({0.6, 0.3}).chi);
  CHECK(std::isnan(c_fil_ub({0.6, 0.0})));
  CHECK(std::isnan(c_fil_ub({0.6, 1.0})));
}

TEST_CASE("entanglement-assisted capacity") {
  CHECK(mutual_info_gadc({0.0, 0.3}).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(mutual_info_gadc({1e-9, 0.3}).value == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(std::abs(mutual_info_gadc({1.0, 0.5}).value) <= 1e-9);
  const MutualInfo m = mutual_info_gadc({0.5, 0.1});
  CHECK(std::abs(m.value - direct_mi({0.5, 0.1}, m.z)) <= 1e-9);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int k = 0; k < 30; ++k) {
    const GadcParams p{ud(rng), ud(rng)};
    const double z = 2 * ud(rng) - 1;
    CHECK(std::abs(mutual_info_objective(p, z) - direct_mi(p, z)) <= 1e-9);
  }
  for (int k = 0; k < 100; ++k) {
    const GadcParams p{ud(rng), ud(rng)};
    const double z1 = 2 * ud(rng) - 1, z2 = 2 * ud(rng) - 1;
    const double mid = mutual_info_objective(p, 0.5 * (z1 + z2));
    CHECK(mid - 0.5 * (mutual_info_objective(p, z1) + mutual_info_objective(p, z2)) >= -1e-9);
  }
}

TEST_CASE("ordering and symmetry on a grid") {
  for (int i = 0; i <= 20; ++i)
    for (double n : {0.0, 0.1, 0.25, 0.5, 0.75, 1.0}) {
      const GadcParams p{i / 20.0, n};
      const GadcParams q{p.gamma, 1 - n};
      const double chi = holevo_gadc(p).chi;
      CHECK(chi <= c_beta_analytic(p) + 1e-6);
      CHECK(chi <= c_cov_ub(p) + 1e-6);
      CHECK(chi <= mutual_info_gadc(p).value + 1e-6);
      if (n > 0 && n < 1) CHECK(chi <= c_fil_ub(p) + 1e-6);
      CHECK(std::abs(chi - holevo_gadc(q).chi) <= 1e-8);
      CHECK(std::abs(mutual_info_gadc(p).value - mutual_info_gadc(q).value) <= 1e-8);
    }
  for (double gm : {0.1, 0.5, 0.85})
    for (double n : {0.1, 0.4}) CHECK(holevo_gadc({gm, n}).chi <= c_eb_ub({gm, n}).value + 1e-6);
}
