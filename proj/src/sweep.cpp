#include "gadc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "gadc/bounds_classical.hpp"
#include "gadc/bounds_quantum.hpp"
#include "gadc/bounds_twoway.hpp"

namespace gadc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kClamp = 1e-9;

// A group of bounds computed together; all of them share one status and runtime.
struct Group {
  std::vector<std::pair<const char*, const char*>> bounds;  // (name, kind)
  std::function<bool(const GadcParams&)> in_domain;           // false: NaN with status=domain
  bool open_n = false;                                        // N in {0, 1} is clamped by 1e-9
  std::function<std::vector<double>(const GadcParams&, std::uint64_t)> eval;
};

bool always(const GadcParams&) { return true; }
bool below_half(const GadcParams& p) { return p.gamma < 0.5; }

std::vector<Group> classical_groups() {
  std::vector<Group> g;
  g.push_back({{{"chi", "lower"}}, always, false, [](const GadcParams& p, std::uint64_t) {
                 return std::vector<double>{holevo_gadc(p).chi};
               }});
  g.push_back({{{"c_beta", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{c_beta_analytic(p)}; }});
  g.push_back({{{"c_cov", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{c_cov_ub(p)}; }});
  g.push_back({{{"c_eb", "upper"}}, always, false, [](const GadcParams& p, std::uint64_t seed) {
                 HolevoOptions o;
                 o.seed = seed;
                 return std::vector<double>{c_eb_ub(p, o).value};
               }});
  g.push_back({{{"c_fil", "upper"}}, always, true,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{c_fil_ub(p)}; }});
  g.push_back({{{"c_e", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{mutual_info_gadc(p).value}; }});
  return g;
}

std::vector<Group> quantum_groups() {
  std::vector<Group> g;
  g.push_back({{{"q_ic", "lower"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{coherent_info_lb(p)}; }});
  g.push_back({{{"q_dp1", "upper"}, {"q_dp2", "upper"}, {"q_dp3", "upper"}, {"q_dp4", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) {
                 const auto d = dp_bounds(p);
                 return std::vector<double>(d.begin(), d.end());
               }});
  g.push_back({{{"q_deg1", "upper"}, {"p_deg1", "upper"}}, below_half, false,
               [](const GadcParams& p, std::uint64_t seed) {
                 UdOptions o;
                 o.seed = seed;
                 const ApproxBound b = eps_deg_ubs(p, o);
                 return std::vector<double>{b.q_ub, b.p_ub};
               }});
  g.push_back({{{"q_deg2", "upper"}, {"p_deg2", "upper"}}, below_half, false, [](const GadcParams& p, std::uint64_t) {
                 const ApproxBound b = eps_close_deg_ubs(p);
                 return std::vector<double>{b.q_ub, b.p_ub};
               }});
  g.push_back({{{"q_adeg", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{eps_adeg_ub(p).q_ub}; }});
  g.push_back({{{"q_rains", "upper"}}, always, false, [](const GadcParams& p, std::uint64_t seed) {
                 RainsOptions o;
                 o.seed = seed;
                 return std::vector<double>{rains_ub(p, o)};
               }});
  g.push_back({{{"q_rmg", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{q_rmg_ub(to_thermal(p))}; }});
  return g;
}

std::vector<Group> twoway_groups() {
  std::vector<Group> g;
  g.push_back({{{"tw_rci", "lower"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{reverse_coherent_lb(p)}; }});
  g.push_back({{{"tw_half_mi", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{half_mi_ub(p)}; }});
  g.push_back({{{"tw_esq", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{esq_best(p).value}; }});
  g.push_back({{{"tw_max_rains", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{max_rains_analytic(p)}; }});
  g.push_back({{{"tw_cov", "upper"}}, always, false,
               [](const GadcParams& p, std::uint64_t) { return std::vector<double>{cov_twoway_ub(p)}; }});
  return g;
}

std::vector<Group> groups(BoundSet set) {
  switch (set) {
    case BoundSet::classical:
      return classical_groups();
    case BoundSet::quantum:
      return quantum_groups();
    case BoundSet::twoway:
      return twoway_groups();
    case BoundSet::all: {
      std::vector<Group> g = classical_groups();
      for (auto& x : quantum_groups()) g.push_back(std::move(x));
      for (auto& x : twoway_groups()) g.push_back(std::move(x));
      return g;
    }
  }
  throw std::invalid_argument("unknown bound set");
}

void sort_rows(std::vector<BoundRecord>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BoundRecord& a, const BoundRecord& b) { return a.bound_name < b.bound_name; });
}

}  // namespace

BoundSet parse_bound_set(const std::string& name) {
  if (name == "classical") return BoundSet::classical;
  if (name == "quantum") return BoundSet::quantum;
  if (name == "twoway") return BoundSet::twoway;
  if (name == "all") return BoundSet::all;
  throw std::invalid_argument("unknown bound set: " + name);
}

const char* to_string(BoundSet s) {
  switch (s) {
    case BoundSet::classical:
      return "classical";
    case BoundSet::quantum:
      return "quantum";
    case BoundSet::twoway:
      return "twoway";
    case BoundSet::all:
      return "all";
  }
  return "?";
}

void validate(const SweepSpec& spec) {
  auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!unit(spec.gamma_min) || !unit(spec.gamma_max)) throw std::invalid_argument("gamma range outside [0,1]");
  if (spec.gamma_min > spec.gamma_max) throw std::invalid_argument("gamma-min exceeds gamma-max");
  if (spec.gamma_steps < 2) throw std::invalid_argument("gamma-steps must be at least 2");
  if (spec.n_list.empty()) throw std::invalid_argument("empty N list");
  for (double n : spec.n_list)
    if (!unit(n)) throw std::invalid_argument("N value outside [0,1]");
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
}

std::vector<double> gamma_grid(const SweepSpec& spec) {
  std::vector<double> out(spec.gamma_steps);
  const int last = spec.gamma_steps - 1;
  for (int i = 0; i <= last; ++i)
    out[i] = i == last ? spec.gamma_max : spec.gamma_min + (spec.gamma_max - spec.gamma_min) * i / last;
  return out;
}

std::vector<std::string> bound_names(BoundSet set) {
  std::vector<std::string> out;
  for (const Group& g : groups(set))
    for (const auto& b : g.bounds) out.emplace_back(b.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoundRecord> evaluate_point(const GadcParams& p, BoundSet set, std::uint64_t seed) {
  require_domain(p);
  std::vector<BoundRecord> rows;
  for (const Group& g : groups(set)) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<double> values(g.bounds.size(), kNan);
    std::string status = "ok";
    if (!g.in_domain(p)) {
      status = "domain";
    } else {
      GadcParams q = p;
      if (g.open_n && (q.n < kClamp || q.n > 1.0 - kClamp)) {
        q.n = std::clamp(q.n, kClamp, 1.0 - kClamp);
        status = "clamped";
      }
      try {
        values = g.eval(q, seed);
        for (double& v : values)
          if (!std::isfinite(v)) {
            v = kNan;
            status = "domain";
          }
      } catch (const std::domain_error&) {
        std::fill(values.begin(), values.end(), kNan);
        status = "domain";
      } catch (const std::exception&) {
        std::fill(values.begin(), values.end(), kNan);
        status = "error";
      }
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t k = 0; k < g.bounds.size(); ++k)
      rows.push_back({p.gamma, p.n, g.bounds[k].first, g.bounds[k].second, values[k], status, ms});
  }
  sort_rows(rows);
  return rows;
}

std::vector<BoundRecord> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> ns = spec.n_list;
  std::sort(ns.begin(), ns.end());
  std::vector<GadcParams> points;
  for (double gm : gamma_grid(spec))
    for (double n : ns) points.push_back({gm, n});

  std::vector<std::vector<BoundRecord>> results(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++)
      results[i] = evaluate_point(points[i], spec.set, spec.seed);
  };
  const int jobs = std::min<int>(spec.jobs, static_cast<int>(points.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<BoundRecord> rows;
  for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<BoundRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const BoundRecord& r : rows)
    out << format_number(r.gamma) << ',' << format_number(r.n) << ',' << r.bound_name << ',' << r.kind << ','
        << format_number(r.value_bits) << ',' << r.status << ',' << format_number(r.runtime_ms) << '\n';
}

}  // namespace gadc
