#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gadc/gadc.hpp"

namespace gadc {

enum class BoundSet { classical, quantum, twoway, all };
// Throws std::invalid_argument on an unknown name.
BoundSet parse_bound_set(const std::string& name);
const char* to_string(BoundSet s);

struct SweepSpec {
  BoundSet set = BoundSet::classical;
  double gamma_min = 0.0;
  double gamma_max = 1.0;
  int gamma_steps = 51;
  std::vector<double> n_list{0.1, 0.25, 0.5};
  int jobs = 1;
  std::uint64_t seed = 1;  // multi-start restarts only
};
// Throws std::invalid_argument unless ranges lie in [0,1], min <= max,
// steps >= 2, the N list is non-empty and jobs >= 1.
void validate(const SweepSpec& spec);
std::vector<double> gamma_grid(const SweepSpec& spec);

struct BoundRecord {
  double gamma = 0.0;
  double n = 0.0;
  std::string bound_name;
  std::string kind;    // lower | upper
  double value_bits = 0.0;
  std::string status;  // ok | clamped | domain | error
  double runtime_ms = 0.0;
};

// Bound names of a set, sorted.
std::vector<std::string> bound_names(BoundSet set);
// All bounds of a set at one point, sorted by bound_name.
std::vector<BoundRecord> evaluate_point(const GadcParams& p, BoundSet set, std::uint64_t seed = 1);
// Rows in gamma-major, then N ascending, then bound_name order; independent of jobs.
std::vector<BoundRecord> run_sweep(const SweepSpec& spec);

inline constexpr const char* kCsvHeader = "gamma,n,bound_name,kind,value_bits,status,runtime_ms";
// 12 significant digits; NaN as "nan".
std::string format_number(double x);
void write_csv(std::ostream& out, const std::vector<BoundRecord>& rows);

}  // namespace gadc
