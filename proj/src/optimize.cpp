#include "gadc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gadc {

ScalarOptimum golden_section_max(const std::function<double(double)>& f, double a, double b,
                                 double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  ScalarOptimum best{c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

ScalarOptimum maximize_scalar(const std::function<double(double)>& f, double a, double b,
                              int seeds, double tol) {
  if (!(b > a)) throw std::invalid_argument("maximize_scalar: empty interval");
  seeds = std::max(seeds, 3);
  const double h = (b - a) / (seeds - 1);
  int best = 0;
  double fbest = f(a);
  for (int i = 1; i < seeds; ++i) {
    const double v = f(a + i * h);
    if (v > fbest) {
      fbest = v;
      best = i;
    }
  }
  const double lo = a + std::max(best - 1, 0) * h;
  const double hi = a + std::min(best + 1, seeds - 1) * h;
  ScalarOptimum r = golden_section_max(f, lo, hi, tol);
  if (fbest > r.value) r = {a + best * h, fbest};
  return r;
}

namespace {

RealVector fd_gradient(const std::function<double(const RealVector&)>& f, const RealVector& x,
                       double h) {
  RealVector gvec(x.size());
  RealVector y = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double step = h * std::max(1.0, std::abs(x(i)));
    y(i) = x(i) + step;
    const double fp = f(y);
    y(i) = x(i) - step;
    const double fm = f(y);
    y(i) = x(i);
    gvec(i) = (fp - fm) / (2.0 * step);
  }
  return gvec;
}

}  // namespace

VectorOptimum minimize_bfgs(const std::function<double(const RealVector&)>& f, RealVector x0,
                            const BfgsOptions& opt) {
  const Eigen::Index n = x0.size();
  RealMatrix hinv = RealMatrix::Identity(n, n);
  RealVector x = std::move(x0);
  double fx = f(x);
  RealVector gx = fd_gradient(f, x, opt.fd_step);
  VectorOptimum out;
  for (int it = 0; it < opt.max_iter; ++it) {
    out.iterations = it + 1;
    if (gx.norm() < opt.grad_tol) {
      out.converged = true;
      break;
    }
    RealVector p = -hinv * gx;
    if (p.dot(gx) >= 0) {
      hinv.setIdentity();
      p = -gx;
    }
    double t = 1.0;
    double fn = f(x + t * p);
    while (!(fn <= fx + 1e-4 * t * p.dot(gx)) && t > 1e-16) {
      t *= 0.5;
      fn = f(x + t * p);
    }
    if (!(fn <= fx)) {
      out.converged = true;
      break;
    }
    const RealVector xn = x + t * p;
    const RealVector gn = fd_gradient(f, xn, opt.fd_step);
    const RealVector s = xn - x;
    const RealVector yv = gn - gx;
    const double sy = s.dot(yv);
    const double df = fx - fn;
    x = xn;
    gx = gn;
    fx = fn;
    if (sy > 1e-16) {
      const double rho = 1.0 / sy;
      const RealMatrix i_n = RealMatrix::Identity(n, n);
      hinv = (i_n - rho * s * yv.transpose()) * hinv * (i_n - rho * yv * s.transpose()) +
             rho * s * s.transpose();
    }
    if (df < opt.value_tol * (1.0 + std::abs(fx)) && s.norm() < 1e-10) {
      out.converged = true;
      break;
    }
  }
  out.x = x;
  out.value = fx;
  return out;
}

VectorOptimum minimize_multistart(const std::function<double(const RealVector&)>& f,
                                  const std::function<RealVector(std::mt19937_64&)>& draw,
                                  int restarts, std::uint64_t seed, const BfgsOptions& opt) {
  std::mt19937_64 rng(seed);
  VectorOptimum best;
  best.value = kInf;
  for (int r = 0; r < restarts; ++r) {
    VectorOptimum cur = minimize_bfgs(f, draw(rng), opt);
    if (cur.value < best.value) best = cur;
  }
  return best;
}

}  // namespace gadc
