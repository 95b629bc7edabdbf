#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gadc/mathcore.hpp"

namespace gadc {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of a unimodal f on [a, b].
ScalarOptimum golden_section_max(const std::function<double(double)>& f, double a, double b,
                                 double tol = 1e-10);

// Seeding grid followed by golden section around the best grid point.
ScalarOptimum maximize_scalar(const std::function<double(double)>& f, double a, double b,
                              int seeds = 200, double tol = 1e-10);

struct VectorOptimum {
  RealVector x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct BfgsOptions {
  int max_iter = 400;
  double grad_tol = 1e-9;
  double value_tol = 1e-13;
  double fd_step = 1e-6;
};

// Unconstrained quasi-Newton minimization with central-difference gradients.
VectorOptimum minimize_bfgs(const std::function<double(const RealVector&)>& f, RealVector x0,
                            const BfgsOptions& opt = {});

// Best of several BFGS runs from random starts drawn by `draw`.
VectorOptimum minimize_multistart(const std::function<double(const RealVector&)>& f,
                                  const std::function<RealVector(std::mt19937_64&)>& draw,
                                  int restarts, std::uint64_t seed,
                                  const BfgsOptions& opt = {});

}  // namespace gadc
