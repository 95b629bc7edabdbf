#include "gadc/verify.hpp"

#include <algorithm>
#include <cmath>

#include "gadc/channels.hpp"
#include "gadc/sdp.hpp"

namespace gadc {

namespace {

constexpr double kChoiTol = 1e-10;
constexpr double kEpsTol = 1e-6;

void add(VerifyReport& r, std::string name, const GadcParams& p, double err, double tol) {
  r.checks.push_back({std::move(name), p, err, tol, std::isfinite(err) && err <= tol});
}

void add_choi(VerifyReport& r, std::string name, const GadcParams& p, const QuantumChannel& a,
              const QuantumChannel& b) {
  add(r, std::move(name), p, choi_distance(a, b), kChoiTol);
}

void add_witness(VerifyReport& r, const char* prefix, const GadcParams& p, const WitnessReport& w) {
  for (const WitnessCheck& c : w.checks)
    r.checks.push_back({std::string(prefix) + "." + c.name, p, c.value, 0.0, c.ok});
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.ok; });
}

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.ok; }));
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::vector<GadcParams> verify_grid() {
  std::vector<GadcParams> out;
  for (int i = 1; i <= 9; ++i)
    for (double n : {0.0, 0.25, 0.5}) out.push_back({i / 10.0, n});
  return out;
}

std::vector<GadcParams> eps_cov_points() {
  std::vector<GadcParams> out;
  for (double gm : {0.2, 0.5, 0.8})
    for (double n : {0.0, 0.1, 0.3, 0.75}) out.push_back({gm, n});
  return out;
}

VerifyReport verify_witnesses(const std::vector<GadcParams>& grid, bool inject_fault) {
  VerifyReport r;
  for (const GadcParams& p : grid) {
    add_witness(r, "beta_zeta", p, verify_cbeta_witness(p, inject_fault));
    add_witness(r, "emax_rmax", p, verify_emax_witness(p, inject_fault));
  }
  return r;
}

VerifyReport verify_structural(const std::vector<GadcParams>& grid) {
  VerifyReport r;
  for (const GadcParams& p : grid) {
    const double gm = p.gamma, n = p.n;
    const QuantumChannel a = gadc_channel(p);
    const ChoiMatrix mix{2, 2,
                         (1.0 - n) * choi(gadc_channel({gm, 0.0})).state + n * choi(gadc_channel({gm, 1.0})).state};
    add(r, "convex_decomposition", p, choi_distance(mix, choi(a)), kChoiTol);
    const SerialDecomposition d = serial_decompose(p);
    add_choi(r, "serial_first", p, compose(gadc_channel(d.first.outer), gadc_channel(d.first.inner)), a);
    add_choi(r, "serial_second", p, compose(gadc_channel(d.second.outer), gadc_channel(d.second.inner)), a);
    if (gm > 0.0 && gm < 0.5) {
      const QuantumChannel ad = gadc_channel({gm, 0.0});
      add_choi(r, "ad_degradable", p, compose(gadc_channel({(1.0 - 2.0 * gm) / (1.0 - gm), 0.0}), ad),
               complementary(ad));
    }
    if (gm >= 0.5)
      add_choi(r, "anti_degrading", p, compose(antidegrading_channel(p), gadc_complementary(p)), a);
    const ThermalParams t = to_thermal(p);
    const QuantumChannel ext = extended_channel(t);
    add_choi(r, "extended_marginal", p, compose(partial_trace_channel({2, 2}, {0}), ext), thermal_channel(t));
    if (t.eta >= 0.5)
      add_choi(r, "extended_degradable", p, compose(extended_degrading_channel(t), ext), complementary(ext));
  }
  return r;
}

VerifyReport verify_eps_cov(const std::vector<GadcParams>& points, bool inject_fault) {
  VerifyReport r;
  for (const GadcParams& p : points) {
    const double sdp = 0.5 * diamond_dist(gadc_channel(p), gadc_channel({p.gamma, 0.5}));
    const double closed = (inject_fault ? -1.0 : 1.0) * p.gamma * std::abs(p.n - 0.5);
    add(r, "eps_cov", p, std::abs(sdp - closed), kEpsTol);
  }
  return r;
}

VerifyReport run_verify_suite(bool inject_fault) {
  VerifyReport r = verify_witnesses(verify_grid(), inject_fault);
  r.append(verify_structural(verify_grid()));
  r.append(verify_eps_cov(eps_cov_points(), inject_fault));
  return r;
}

}  // namespace gadc
