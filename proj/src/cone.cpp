#include "gadc/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gadc {

AffineMatrix::AffineMatrix(const ComplexMatrix& constant) : constant_(constant) {}

void AffineMatrix::add_term(int coord, const ComplexMatrix& coeff) {
  if (coeff.rows() != constant_.rows() || coeff.cols() != constant_.cols())
    throw std::invalid_argument("AffineMatrix: coefficient shape mismatch");
  auto it = terms_.find(coord);
  if (it == terms_.end())
    terms_.emplace(coord, coeff);
  else
    it->second += coeff;
}

AffineMatrix AffineMatrix::map(const std::function<ComplexMatrix(const ComplexMatrix&)>& f) const {
  AffineMatrix out(f(constant_));
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, f(c));
  return out;
}

ComplexMatrix AffineMatrix::evaluate(const RealVector& x) const {
  ComplexMatrix m = constant_;
  for (const auto& [k, c] : terms_) m += x(k) * c;
  return m;
}

AffineMatrix& AffineMatrix::operator+=(const AffineMatrix& o) {
  if (o.rows() != rows() || o.cols() != cols()) throw std::invalid_argument("AffineMatrix: shape mismatch");
  constant_ += o.constant_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AffineMatrix& AffineMatrix::operator-=(const AffineMatrix& o) {
  if (o.rows() != rows() || o.cols() != cols()) throw std::invalid_argument("AffineMatrix: shape mismatch");
  constant_ -= o.constant_;
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AffineMatrix& AffineMatrix::operator*=(double s) {
  constant_ *= s;
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

AffineMatrix operator+(AffineMatrix a, const AffineMatrix& b) { return a += b; }
AffineMatrix operator-(AffineMatrix a, const AffineMatrix& b) { return a -= b; }
AffineMatrix operator+(AffineMatrix a, const ComplexMatrix& b) { return a += AffineMatrix(b); }
AffineMatrix operator-(AffineMatrix a, const ComplexMatrix& b) { return a -= AffineMatrix(b); }
AffineMatrix operator-(const ComplexMatrix& a, const AffineMatrix& b) { return AffineMatrix(a) -= b; }
AffineMatrix operator*(double s, AffineMatrix a) { return a *= s; }
AffineMatrix operator-(AffineMatrix a) { return a *= -1.0; }

AffineMatrix tensor(const ComplexMatrix& a, const AffineMatrix& b) {
  return b.map([&](const ComplexMatrix& m) { return tensor(a, m); });
}

AffineMatrix tensor(const AffineMatrix& a, const ComplexMatrix& b) {
  return a.map([&](const ComplexMatrix& m) { return tensor(m, b); });
}

AffineMatrix partial_trace(const AffineMatrix& m, const std::vector<int>& dims, const std::vector<int>& keep) {
  return m.map([&](const ComplexMatrix& x) { return partial_trace(x, dims, keep); });
}

AffineMatrix partial_transpose(const AffineMatrix& m, const std::vector<int>& dims, int sys) {
  return m.map([&](const ComplexMatrix& x) { return partial_transpose(x, dims, sys); });
}

AffineMatrix ConeProgram::add_hermitian(int d, const std::string& name) {
  AffineMatrix v(ComplexMatrix::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(i, i) = 1.0;
    v.add_term(num_coords_++, e);
    imag_.push_back(false);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix re = ComplexMatrix::Zero(d, d), im = ComplexMatrix::Zero(d, d);
      re(i, j) = re(j, i) = 1.0;
      im(i, j) = cplx(0.0, 1.0);
      im(j, i) = cplx(0.0, -1.0);
      v.add_term(num_coords_++, re);
      imag_.push_back(false);
      v.add_term(num_coords_++, im);
      imag_.push_back(true);
    }
  vars_.emplace_back(name, v);
  return v;
}

AffineMatrix ConeProgram::add_scalar(const std::string& name) {
  AffineMatrix v(ComplexMatrix::Zero(1, 1));
  v.add_term(num_coords_++, ComplexMatrix::Ones(1, 1));
  imag_.push_back(false);
  vars_.emplace_back(name, v);
  return v;
}

AffineMatrix ConeProgram::scalar_identity(const AffineMatrix& scalar, int d) const {
  if (scalar.rows() != 1 || scalar.cols() != 1) throw std::invalid_argument("scalar_identity: not a scalar");
  return scalar.map([d](const ComplexMatrix& c) { return ComplexMatrix(c(0, 0) * identity(d)); });
}

void ConeProgram::add_psd(const AffineMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("add_psd: not square");
  psd_.push_back(m);
}

void ConeProgram::add_zero(const AffineMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("add_zero: not square");
  zeros_.push_back(m);
}

void ConeProgram::minimize(const AffineMatrix& objective) { objective_ = objective; }

const char* to_string(ConeStatus s) {
  switch (s) {
    case ConeStatus::optimal: return "optimal";
    case ConeStatus::infeasible: return "infeasible";
    case ConeStatus::unbounded: return "unbounded";
    case ConeStatus::max_iter: return "max-iter";
  }
  return "unknown";
}

namespace {

using RealMatrix = Eigen::MatrixXd;
using Blocks = std::vector<RealMatrix>;

// min c^T y + c0  s.t.  F0 + sum_j y_j F_j >= 0 (block diagonal, real symmetric).
struct Lmi {
  std::vector<int> sizes;
  Blocks f0;
  std::vector<Blocks> f;
  std::vector<std::vector<char>> nonzero;
  RealVector c;
  double c0 = 0.0;
};

double inner(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k].cwiseProduct(b[k]).sum();
  return s;
}

double fro(const Blocks& a) { return std::sqrt(inner(a, a)); }


Blocks scaled_identity(const std::vector<int>& sizes, double s) {
  Blocks b;
  for (int n : sizes) b.push_back(s * RealMatrix::Identity(n, n));
  return b;
}

RealMatrix sym(const RealMatrix& m) { return 0.5 * (m + m.transpose()); }

// Largest step alpha with x + alpha d >= 0; infinity if unbounded.
double max_step(const Blocks& x, const Blocks& d) {
  double step = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<RealMatrix> llt(x[k]);
    RealMatrix w;
    if (llt.info() == Eigen::Success) {
      RealMatrix li = llt.matrixL().solve(RealMatrix::Identity(x[k].rows(), x[k].cols()));
      w = sym(li * d[k] * li.transpose());
    } else {
      return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(w, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    if (lmin < 0.0) step = std::min(step, -1.0 / lmin);
  }
  return step;
}

struct LmiResult {
  ConeStatus status = ConeStatus::max_iter;
  RealVector y;
  Blocks x;
  double pobj = 0.0, dobj = 0.0, infeas = 0.0, gap = 0.0;
  int iterations = 0;
};

LmiResult solve_lmi(const Lmi& p, const SolverOptions& opt) {
  const int m = static_cast<int>(p.c.size());
  int ntot = 0;
  for (int n : p.sizes) ntot += n;
  const size_t nb = p.sizes.size();

  double fmax = fro(p.f0);
  double xi_p = 10.0;
  for (int j = 0; j < m; ++j) {
    const double nf = fro(p.f[j]);
    fmax = std::max(fmax, nf);
    xi_p = std::max(xi_p, (1.0 + std::abs(p.c(j))) / (1.0 + nf));
  }
  const double xi_d = std::max(10.0, 1.0 + fmax);
  const double norm_c = p.c.norm(), norm_f0 = fro(p.f0);

  Blocks X = scaled_identity(p.sizes, xi_p), S = scaled_identity(p.sizes, xi_d);
  RealVector y = RealVector::Zero(m);
  LmiResult res;
  double best = std::numeric_limits<double>::infinity();
  int stall = 0;

  for (int it = 0; it <= opt.max_iter; ++it) {
    res.iterations = it;
    RealVector rp(m);
    for (int i = 0; i < m; ++i) rp(i) = p.c(i) - inner(p.f[i], X);
    Blocks rd = p.f0;
    for (size_t k = 0; k < nb; ++k) {
      for (int j = 0; j < m; ++j)
        if (p.nonzero[j][k]) rd[k] += y(j) * p.f[j][k];
      rd[k] -= S[k];
    }
    const double pobj = p.c.dot(y), dobj = -inner(p.f0, X);
    const double xs = inner(X, S);
    const double mu = xs / ntot;
    const double pinf = rp.norm() / (1.0 + norm_c), dinf = fro(rd) / (1.0 + norm_f0);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    const double merit = std::max({pinf / opt.feas_tol, dinf / opt.feas_tol, relgap / opt.gap_tol});
    if (merit < best) {
      best = merit;
      stall = 0;
      res.y = y;
      res.x = X;
      res.pobj = pobj;
      res.dobj = dobj;
      res.infeas = std::max(pinf, dinf);
      res.gap = relgap;
    } else if (++stall >= 15) {
      break;
    }
    if (pinf <= opt.feas_tol && dinf <= opt.feas_tol && relgap <= opt.gap_tol &&
        xs / (1.0 + std::abs(pobj) + std::abs(dobj)) <= opt.gap_tol) {
      res.status = ConeStatus::optimal;
      return res;
    }
    if (dobj > 0.0 && (p.c - rp).norm() <= 1e-8 * dobj && dobj > 1e8 * (1.0 + norm_c)) {
      res.status = ConeStatus::infeasible;
      return res;
    }
    if (pobj < 0.0 && -pobj > 1e8 * (1.0 + norm_f0) && fro(rd) <= 1e-8 * -pobj) {
      res.status = ConeStatus::unbounded;
      return res;
    }
    if (it == opt.max_iter) break;

    Blocks sinv(nb);
    for (size_t k = 0; k < nb; ++k) {
      Eigen::LLT<RealMatrix> llt(S[k]);
      sinv[k] = sym(llt.solve(RealMatrix::Identity(S[k].rows(), S[k].cols())));
    }
    // Schur complement M_ij = <F_i, X F_j S^-1>.
    RealMatrix M = RealMatrix::Zero(m, m);
    std::vector<Blocks> g(m);
    for (int j = 0; j < m; ++j) {
      g[j].resize(nb);
      for (size_t k = 0; k < nb; ++k)
        g[j][k] = p.nonzero[j][k] ? RealMatrix(X[k] * p.f[j][k] * sinv[k]) : RealMatrix();
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = 0.0;
        for (size_t k = 0; k < nb; ++k)
          if (p.nonzero[i][k] && p.nonzero[j][k]) s += p.f[i][k].cwiseProduct(g[j][k]).sum();
        M(i, j) = M(j, i) = s;
      }
    const double reg = 1e-14 * std::max(1.0, M.diagonal().cwiseAbs().maxCoeff());
    M.diagonal().array() += reg;
    Eigen::LDLT<RealMatrix> ldlt(M);

    Blocks xrs(nb);
    for (size_t k = 0; k < nb; ++k) xrs[k] = X[k] * rd[k] * sinv[k];

    auto direction = [&](double sigma_mu, const Blocks* corr, RealVector& dy, Blocks& dX, Blocks& dS) {
      RealVector rhs(m);
      for (int i = 0; i < m; ++i) {
        double s = -p.c(i);
        for (size_t k = 0; k < nb; ++k) {
          if (!p.nonzero[i][k]) continue;
          s += sigma_mu * p.f[i][k].cwiseProduct(sinv[k]).sum() - p.f[i][k].cwiseProduct(xrs[k]).sum();
          if (corr) s -= p.f[i][k].cwiseProduct((*corr)[k]).sum();
        }
        rhs(i) = s;
      }
      dy = ldlt.solve(rhs);
      dS = rd;
      dX.resize(nb);
      for (size_t k = 0; k < nb; ++k) {
        for (int j = 0; j < m; ++j)
          if (p.nonzero[j][k]) dS[k] += dy(j) * p.f[j][k];
        RealMatrix t = sigma_mu * sinv[k] - X[k] - X[k] * dS[k] * sinv[k];
        if (corr) t -= (*corr)[k];
        dX[k] = sym(t);
      }
    };

    RealVector dy;
    Blocks dX, dS;
    direction(0.0, nullptr, dy, dX, dS);
    const double ap_aff = std::min(1.0, max_step(X, dX)), ad_aff = std::min(1.0, max_step(S, dS));
    double mu_aff = 0.0;
    for (size_t k = 0; k < nb; ++k)
      mu_aff += (X[k] + ap_aff * dX[k]).cwiseProduct(S[k] + ad_aff * dS[k]).sum();
    mu_aff /= ntot;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);
    Blocks corr(nb);
    for (size_t k = 0; k < nb; ++k) corr[k] = dX[k] * dS[k] * sinv[k];
    direction(sigma * mu, &corr, dy, dX, dS);

    const double tau = it < 3 ? 0.9 : 0.98;
    const double ap = std::min(1.0, tau * max_step(X, dX)), ad = std::min(1.0, tau * max_step(S, dS));
    for (size_t k = 0; k < nb; ++k) {
      X[k] = sym(X[k] + ap * dX[k]);
      S[k] = sym(S[k] + ad * dS[k]);
    }
    y += ad * dy;
    if (ap < 1e-12 && ad < 1e-12) break;
  }
  res.status = ConeStatus::max_iter;
  return res;
}

// Real representation of a Hermitian matrix, embedded or real part only.
RealMatrix to_real(const ComplexMatrix& h, bool embed) {
  if (!embed) return h.real();
  const int n = static_cast<int>(h.rows());
  RealMatrix r(2 * n, 2 * n);
  r.topLeftCorner(n, n) = h.real();
  r.bottomRightCorner(n, n) = h.real();
  r.topRightCorner(n, n) = -h.imag();
  r.bottomLeftCorner(n, n) = h.imag();
  return r;
}

ComplexMatrix from_real(const RealMatrix& r, bool embed) {
  if (!embed) return r.cast<cplx>();
  const int n = static_cast<int>(r.rows()) / 2;
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) = cplx(0.5 * (r(i, j) + r(n + i, n + j)), 0.5 * (r(n + i, j) - r(i, n + j)));
  return h;
}

// Real rows of a Hermitian equality: real parts on and above the diagonal, imaginary parts above it.
void equality_rows(const ComplexMatrix& m, std::vector<double>& out) {
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      out.push_back(m(i, j).real());
      if (j > i) out.push_back(m(i, j).imag());
    }
}

}  // namespace

ConeSolution solve(const ConeProgram& p, const SolverOptions& opt) {
  const int K = p.num_coords();
  const double tiny = 1e-14;

  // Conjugation symmetry: real data lets the imaginary coordinates be fixed at zero.
  auto symmetric_under_conjugation = [&](const AffineMatrix& a) {
    if (a.constant().imag().cwiseAbs().maxCoeff() > tiny) return false;
    for (const auto& [k, c] : a.terms()) {
      const double bad = p.imag_coord(k) ? c.real().cwiseAbs().maxCoeff() : c.imag().cwiseAbs().maxCoeff();
      if (bad > tiny) return false;
    }
    return true;
  };
  bool real_only = symmetric_under_conjugation(p.objective());
  for (const auto& a : p.psd()) real_only = real_only && symmetric_under_conjugation(a);
  for (const auto& a : p.zeros()) real_only = real_only && symmetric_under_conjugation(a);

  std::vector<int> active;
  for (int k = 0; k < K; ++k)
    if (!(real_only && p.imag_coord(k))) active.push_back(k);
  const int n = static_cast<int>(active.size());
  std::vector<int> pos(K, -1);
  for (int i = 0; i < n; ++i) pos[active[i]] = i;

  // Equalities A x = b.
  std::vector<std::vector<double>> rows_by_coord(n);
  std::vector<double> bvec;
  for (const auto& z : p.zeros()) {
    std::vector<double> b0;
    equality_rows(z.constant(), b0);
    const size_t r0 = bvec.size();
    for (double v : b0) bvec.push_back(-v);
    for (auto& col : rows_by_coord) col.resize(bvec.size(), 0.0);
    for (const auto& [k, c] : z.terms()) {
      if (pos[k] < 0) continue;
      std::vector<double> r;
      equality_rows(c, r);
      for (size_t i = 0; i < r.size(); ++i) rows_by_coord[pos[k]][r0 + i] += r[i];
    }
  }
  const int neq = static_cast<int>(bvec.size());
  RealVector x0 = RealVector::Zero(n);
  RealMatrix null_basis = RealMatrix::Identity(n, n);
  ConeSolution sol;
  if (neq > 0) {
    RealMatrix A(neq, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < neq; ++i) A(i, j) = rows_by_coord[j][i];
    RealVector b = Eigen::Map<RealVector>(bvec.data(), neq);
    Eigen::JacobiSVD<RealMatrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealVector& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > 1e-10 * std::max(1.0, smax)) ++rank;
    for (int i = 0; i < rank; ++i) x0 += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(b) / sv(i));
    if ((A * x0 - b).norm() > 1e-9 * (1.0 + b.norm())) {
      sol.status = ConeStatus::infeasible;
      return sol;
    }
    null_basis = svd.matrixV().rightCols(n - rank);
  }
  const int m = static_cast<int>(null_basis.cols());

  Lmi lmi;
  RealVector cx = RealVector::Zero(n);
  const AffineMatrix& obj = p.objective();
  double c0 = obj.rows() ? obj.constant().trace().real() : 0.0;
  for (const auto& [k, c] : obj.terms())
    if (pos[k] >= 0) cx(pos[k]) += c.trace().real();
  lmi.c = null_basis.transpose() * cx;
  lmi.c0 = c0 + cx.dot(x0);

  const bool embed = !real_only;
  lmi.f.assign(m, Blocks());
  for (const auto& a : p.psd()) {
    const int bs = embed ? 2 * a.rows() : a.rows();
    lmi.sizes.push_back(bs);
    RealMatrix f0 = to_real(a.constant(), embed);
    std::vector<std::pair<int, RealMatrix>> g;
    for (const auto& [k, c] : a.terms()) {
      if (pos[k] < 0) continue;
      RealMatrix rk = to_real(c, embed);
      f0 += x0(pos[k]) * rk;
      g.emplace_back(pos[k], std::move(rk));
    }
    lmi.f0.push_back(f0);
    for (int j = 0; j < m; ++j) {
      RealMatrix fj = RealMatrix::Zero(bs, bs);
      for (const auto& [i, rk] : g)
        if (std::abs(null_basis(i, j)) > tiny) fj += null_basis(i, j) * rk;
      lmi.f[j].push_back(fj);
    }
  }
  lmi.nonzero.assign(m, std::vector<char>(lmi.sizes.size(), 0));
  std::vector<int> keep_cols;
  for (int j = 0; j < m; ++j) {
    bool any = false;
    for (size_t k = 0; k < lmi.sizes.size(); ++k) {
      lmi.nonzero[j][k] = lmi.f[j][k].cwiseAbs().maxCoeff() > tiny;
      any = any || lmi.nonzero[j][k];
    }
    if (any) {
      keep_cols.push_back(j);
    } else if (std::abs(lmi.c(j)) > 1e-12) {
      sol.status = ConeStatus::unbounded;
      return sol;
    }
  }
  Lmi red;
  red.sizes = lmi.sizes;
  red.f0 = lmi.f0;
  red.c0 = lmi.c0;
  red.c.resize(keep_cols.size());
  for (size_t i = 0; i < keep_cols.size(); ++i) {
    red.c(i) = lmi.c(keep_cols[i]);
    red.f.push_back(lmi.f[keep_cols[i]]);
    red.nonzero.push_back(lmi.nonzero[keep_cols[i]]);
  }

  LmiResult r = solve_lmi(red, opt);
  RealVector z = RealVector::Zero(m);
  for (size_t i = 0; i < keep_cols.size(); ++i) z(keep_cols[i]) = r.y(i);
  RealVector xa = x0 + null_basis * z;
  sol.x = RealVector::Zero(K);
  for (int i = 0; i < n; ++i) sol.x(active[i]) = xa(i);
  sol.status = r.status;
  sol.primal = r.pobj + red.c0;
  sol.dual = r.dobj + red.c0;
  sol.gap = r.gap;
  sol.infeasibility = r.infeas;
  sol.iterations = r.iterations;
  for (const auto& v : p.variables()) sol.values.push_back(v.second.evaluate(sol.x));
  for (const auto& xb : r.x) sol.multipliers.push_back(from_real(xb, embed));
  return sol;
}

}  // namespace gadc
