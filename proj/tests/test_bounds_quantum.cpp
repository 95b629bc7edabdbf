#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gadc/bounds_quantum.hpp"
#include "gadc/sdp.hpp"

using namespace gadc;

TEST_CASE("amplitude damping quantum capacity") {
  CHECK(q_ad(0.0) == 1.0);
  CHECK(q_ad(0.5) == 0.0);
  CHECK(q_ad(0.8) == 0.0);
  CHECK(q_ad(0.25) == doctest::Approx(0.4151).epsilon(1e-4));
  const double at = h2(0.75 * 0.447) - h2(0.25 * 0.447);
  CHECK(q_ad(0.25) >= at);
  CHECK(q_ad(0.25) - at < 1e-4);
  CHECK(q_ad(0.499) < 1e-2);
  CHECK(q_ad(0.499) > 0.0);
}

TEST_CASE("coherent information lower bound") {
  for (double n : {0.0, 0.3, 0.7}) CHECK(coherent_info_lb({0.0, n}) == doctest::Approx(1.0).epsilon(1e-9));
  for (double gm : {0.5, 0.7, 1.0})
    for (double n : {0.0, 0.2, 0.5}) CHECK(coherent_info_lb({gm, n}) == 0.0);
  CHECK(std::abs(coherent_info_lb({0.25, 0.0}) - q_ad(0.25)) <= 1e-8);
  CHECK(std::abs(coherent_info_lb({0.2, 0.3}) - coherent_info_lb({0.2, 0.7})) <= 1e-8);
}

TEST_CASE("data-processing bounds") {
  for (double gm : {0.1, 0.3, 0.6}) {
    const auto d = dp_bounds({gm, 0.0});
    CHECK(d[0] == q_ad(gm));
    CHECK(d[2] == 1.0);
    const auto h = dp_bounds({gm, 0.5});
    CHECK(std::abs(h[0] - h[3]) <= 1e-12);
    CHECK(std::abs(h[1] - h[2]) <= 1e-12);
    const auto a = dp_bounds({gm, 0.2}), b = dp_bounds({gm, 0.8});
    CHECK(std::abs(a[0] - b[3]) <= 1e-12);
    CHECK(std::abs(a[1] - b[2]) <= 1e-12);
  }
  const auto d = dp_bounds({0.2, 0.1});
  for (double v : d) {
    CHECK(std::isfinite(v));
    CHECK(v >= coherent_info_lb({0.2, 0.1}));
  }
  CHECK(dp_bounds({1.0, 1.0})[0] == 1.0);
  CHECK(dp_bounds({1.0, 0.0})[3] == 1.0);
}

TEST_CASE("U_D") {
  const double gm = 0.3;
  const QuantumChannel ad = gadc_channel({gm, 0.0});
  const ChoiMatrix deg = choi(gadc_channel({(1 - 2 * gm) / (1 - gm), 0.0}));
  CHECK(std::abs(u_d(ad, deg) - q_ad(gm)) <= 1e-6);
  const ChoiMatrix trace_map = choi(partial_trace_channel({2}, {}));
  CHECK(u_d(identity_channel(2), trace_map) == doctest::Approx(1.0).epsilon(1e-8));
  const ApproxResult r = sdp_eps_deg(gadc_channel_full({0.2, 0.3}));
  const double v = u_d(gadc_channel_full({0.2, 0.3}), r.map);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
  CHECK_THROWS(u_d(gadc_channel({0.2, 0.3}), choi(identity_channel(4))));
}

TEST_CASE("approximate degradability bounds") {
  const ApproxBound n0 = eps_deg_ubs({0.3, 1e-9});
  CHECK(n0.epsilon <= 1e-6);
  CHECK(std::abs(n0.q_ub - q_ad(0.3)) <= 1e-5);
  double prev = 0.0;
  for (double n : {0.05, 0.2, 0.35, 0.5}) {
    const ApproxBound d = eps_deg_ubs({0.2, n});
    CHECK(d.p_ub >= d.q_ub);
    CHECK(d.q_ub >= coherent_info_lb({0.2, n}) - 1e-6);
    const ApproxBound c = eps_close_deg_ubs({0.2, n});
    CHECK(c.p_ub >= c.q_ub);
    CHECK(c.epsilon >= prev - 1e-7);
    prev = c.epsilon;
  }
  // Near gamma = 0 the bound approaches the lower bound.
  const double gap_small = eps_deg_ubs({0.01, 0.1}).q_ub - coherent_info_lb({0.01, 0.1});
  const double gap_large = eps_deg_ubs({0.2, 0.1}).q_ub - coherent_info_lb({0.2, 0.1});
  CHECK(gap_small < gap_large);
  CHECK(eps_close_deg_ubs({0.2, 1e-9}).q_ub == doctest::Approx(q_ad(0.2)).epsilon(1e-6));
  const double e2 = 0.5 * diamond_dist(gadc_channel({0.2, 0.5}), gadc_channel({0.2, 0.0}));
  CHECK(std::abs(eps_close_deg_ubs({0.2, 0.5}).epsilon - e2) <= 1e-12);
  CHECK_THROWS(eps_deg_ubs({0.5, 0.2}));
  CHECK_THROWS(eps_close_deg_ubs({0.6, 0.2}));
}

TEST_CASE("approximate anti-degradability bound") {
  for (double gm : {0.5, 0.7, 0.95})
    for (double n : {0.0, 0.3, 0.5}) CHECK(eps_adeg_ub({gm, n}).q_ub <= 1e-5);
  const ApproxBound a = eps_adeg_ub({0.1, 0.1});
  CHECK(a.q_ub > 0.1);
  CHECK(a.q_ub >= coherent_info_lb({0.1, 0.1}));
  CHECK(eps_adeg_ub({0.49, 0.3}).q_ub < eps_adeg_ub({0.45, 0.3}).q_ub);
  CHECK(eps_adeg_ub({0.499, 0.3}).q_ub < 0.1);
}

TEST_CASE("rains bound") {
  // Inner values from an unrestricted PPT relative-entropy program.
  CHECK(rains_inner({0.3, 0.5}, 0.5) == doctest::Approx(0.3737167485).epsilon(1e-8));
  CHECK(rains_inner({0.2, 0.1}, 0.4) == doctest::Approx(0.5780994258).epsilon(1e-8));
  CHECK(rains_inner({0.5, 0.2}, 0.6) == doctest::Approx(0.1798876165).epsilon(1e-8));
  CHECK(std::abs(rains_ub({0.9, 0.5})) <= 1e-4);
  CHECK(rains_ub({0.0, 0.3}) == doctest::Approx(1.0).epsilon(1e-7));
  const auto d = dp_bounds({0.3, 0.5});
  CHECK(rains_ub({0.3, 0.5}) <= *std::min_element(d.begin(), d.end()));
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const GadcParams p{ud(rng), ud(rng)};
    const double a = ud(rng), b = ud(rng);
    CHECK(rains_inner(p, 0.5 * (a + b)) - 0.5 * (rains_inner(p, a) + rains_inner(p, b)) >= -1e-6);
  }
  for (const GadcParams p : {GadcParams{0.2, 0.1}, GadcParams{0.4, 0.3}}) {
    const double base = rains_inner(p, 0.4);
    for (int k = 0; k < 16; ++k) {
      RainsOptions o;
      o.phi = 2 * M_PI * k / 16;
      CHECK(rains_inner(p, 0.4, o) >= base - 1e-9);
    }
  }
}

TEST_CASE("extended-channel bound") {
  CHECK(q_rmg_ub({1.0, 0.2}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(q_rmg_ub({0.7, 0.0}) == doctest::Approx(q_ad(0.3)).epsilon(1e-12));
  CHECK(dp_bounds(to_gadc({0.7, 0.01}))[0] <= q_rmg_ub({0.7, 0.01}));
  for (const ThermalParams t : {ThermalParams{0.6, 0.01}, ThermalParams{0.7, 0.1}, ThermalParams{0.8, 0.3},
                                ThermalParams{0.9, 0.5}, ThermalParams{0.55, 0.2}})
    CHECK(std::abs(q_rmg_full_bloch(t) - q_rmg_ub(t)) <= 1e-7);
}

TEST_CASE("quantum ordering and symmetry on a grid") {
  for (int i = 0; i <= 20; ++i)
    for (double n : {0.0, 0.1, 0.25, 0.5, 0.75, 1.0}) {
      const GadcParams p{i / 20.0, n};
      const QuantumBoundSet s = quantum_bounds(p);
      for (double v : s.dp) CHECK(s.ic_lb <= v + 1e-5);
      if (p.gamma < 0.5) {
        CHECK(s.ic_lb <= s.deg1.q_ub + 1e-5);
        CHECK(s.ic_lb <= s.deg2.q_ub + 1e-5);
        CHECK(s.deg1.p_ub >= s.deg1.q_ub);
        CHECK(s.deg2.p_ub >= s.deg2.q_ub);
      }
      CHECK(s.ic_lb <= s.adeg.q_ub + 1e-5);
      CHECK(s.ic_lb <= s.rains + 1e-5);
      CHECK(s.ic_lb <= s.rmg + 1e-5);
    }
  for (double gm : {0.15, 0.35, 0.6})
    for (double n : {0.1, 0.3}) {
      const GadcParams p{gm, n}, q{gm, 1 - n};
      CHECK(std::abs(coherent_info_lb(p) - coherent_info_lb(q)) <= 1e-6);
      CHECK(std::abs(rains_ub(p) - rains_ub(q)) <= 1e-6);
      CHECK(std::abs(eps_adeg_ub(p).q_ub - eps_adeg_ub(q).q_ub) <= 1e-6);
      if (gm < 0.5) CHECK(std::abs(eps_deg_ubs(p).q_ub - eps_deg_ubs(q).q_ub) <= 1e-6);
    }
}
