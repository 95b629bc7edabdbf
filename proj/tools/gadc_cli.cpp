#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gadc/gadc.hpp"
#include "gadc/sdp.hpp"
#include "gadc/sweep.hpp"
#include "gadc/verify.hpp"

namespace {

constexpr int kUsage = 2;

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string params(const gadc::GadcParams& p) {
  return "(gamma=" + gadc::format_number(p.gamma) + ", N=" + gadc::format_number(p.n) + ")";
}

int cmd_info(double gamma, double n) {
  const gadc::GadcParams p{gamma, n};
  gadc::require_domain(p);
  const gadc::EbResult eb = gadc::is_entanglement_breaking(p);
  const gadc::ThermalParams t = gadc::to_thermal(p);
  std::cout << "gamma: " << gadc::format_number(gamma) << '\n'
            << "n: " << gadc::format_number(n) << '\n'
            << "entanglement-breaking: " << yes_no(eb.entanglement_breaking) << '\n'
            << "eb-margin: " << gadc::format_number(eb.margin) << '\n'
            << "anti-degradable: " << yes_no(gadc::is_antidegradable(p)) << '\n'
            << "thermal: eta=" << gadc::format_number(t.eta) << " n=" << gadc::format_number(t.n) << '\n';
  const gadc::SerialDecomposition d = gadc::serial_decompose(p);
  int k = 1;
  for (const auto& f : {d.first, d.second}) {
    std::cout << "serial-" << k++ << ": ";
    if (f.degenerate)
      std::cout << "degenerate\n";
    else
      std::cout << "outer " << params(f.outer) << " o inner " << params(f.inner) << '\n';
  }
  if (gamma == 0.0) std::cout << "identity-channel: true\ncapacities: C=1 Q=1 P=1 C_E=2\n";
  return 0;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad number in N list: " + item);
    out.push_back(v);
  }
  return out;
}

int cmd_sweep(const gadc::SweepSpec& spec, const std::string& out_path) {
  const std::vector<gadc::BoundRecord> rows = gadc::run_sweep(spec);
  if (out_path == "-") {
    gadc::write_csv(std::cout, rows);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << '\n';
    return kUsage;
  }
  gadc::write_csv(out, rows);
  return 0;
}

int cmd_verify(bool inject_fault) {
  const gadc::VerifyReport r = gadc::run_verify_suite(inject_fault);
  if (r.ok()) {
    std::cout << "verify: " << r.checks.size() << " checks passed\n";
    return 0;
  }
  std::printf("%-40s %-8s %-8s %-14s %-10s\n", "check", "gamma", "N", "value", "tol");
  for (const gadc::VerifyCheck& c : r.checks)
    if (!c.ok)
      std::printf("%-40s %-8.4g %-8.4g %-14.6g %-10.3g\n", c.name.c_str(), c.point.gamma, c.point.n, c.value, c.tol);
  std::cout << "verify: " << r.failures() << " of " << r.checks.size() << " checks failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity bounds for the generalized amplitude damping channel"};
  app.require_subcommand(1);

  double gamma = 0.0, n = 0.0;
  auto* info = app.add_subcommand("info", "Report predicates and decompositions at one point");
  info->add_option("--gamma", gamma, "Damping parameter")->required()->check(CLI::Range(0.0, 1.0));
  info->add_option("--n", n, "Thermal noise parameter")->required()->check(CLI::Range(0.0, 1.0));

  gadc::SweepSpec spec;
  std::string set = "classical", n_list = "0.1,0.25,0.5", out_path = "-";
  double tol_sdp = gadc::sdp_tolerance();
  auto* sweep = app.add_subcommand("sweep", "Evaluate a bound set on a grid and write CSV");
  sweep->add_option("--set", set, "classical | quantum | twoway | all")
      ->check(CLI::IsMember({"classical", "quantum", "twoway", "all"}));
  sweep->add_option("--gamma-min", spec.gamma_min, "Smallest gamma")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--gamma-max", spec.gamma_max, "Largest gamma")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--gamma-steps", spec.gamma_steps, "Number of gamma values")->check(CLI::Range(2, 1000000));
  sweep->add_option("--n-list", n_list, "Comma-separated N values");
  sweep->add_option("--out", out_path, "Output CSV path, - for stdout");
  sweep->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  sweep->add_option("--tol-sdp", tol_sdp, "SDP feasibility and gap tolerance")->check(CLI::Range(1e-14, 1e-2));
  sweep->add_option("--seed", spec.seed, "Seed for multi-start restarts");

  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Run witness, Choi identity and eps_cov checks");
  verify->add_flag("--inject-fault", inject_fault, "Perturb the witnesses and closed forms; must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*info) return cmd_info(gamma, n);
    if (*sweep) {
      spec.set = gadc::parse_bound_set(set);
      spec.n_list = parse_list(n_list);
      gadc::validate(spec);
      gadc::set_sdp_tolerance(tol_sdp);
      return cmd_sweep(spec, out_path);
    }
    if (*verify) return cmd_verify(inject_fault);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
