#include "gadc/mathcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gadc {

namespace {

constexpr double kClip = 1e-12;

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

void check_dims(const ComplexMatrix& m, const std::vector<int>& dims, const char* op) {
  if (m.rows() != m.cols() || m.rows() != product(dims)) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

std::vector<int> strides(const std::vector<int>& dims) {
  std::vector<int> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
  return s;
}

}  // namespace

Spectrum eigh(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(m));
  const int n = static_cast<int>(m.rows());
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    s.eigenvalues(i) = es.eigenvalues()(n - 1 - i);
    s.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return s;
}

RealVector eigvalsh(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

ComplexMatrix identity(int n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix ket(int n, int i) {
  ComplexMatrix v = ComplexMatrix::Zero(n, 1);
  v(i, 0) = 1.0;
  return v;
}

ComplexMatrix projector(int n, int i) {
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  p(i, i) = 1.0;
  return p;
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix max_entangled(int d) {
  ComplexMatrix v = ComplexMatrix::Zero(d * d, 1);
  for (int i = 0; i < d; ++i) v(i * d + i, 0) = 1.0 / std::sqrt(static_cast<double>(d));
  return v * v.adjoint();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) return ComplexMatrix::Ones(1, 1);
  ComplexMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
  check_dims(m, dims, "partial_trace");
  const int k = static_cast<int>(dims.size());
  std::vector<bool> kept(k, false);
  for (int s : keep) {
    if (s < 0 || s >= k) throw std::invalid_argument("partial_trace: bad subsystem index");
    kept[s] = true;
  }
  std::vector<int> kdims;
  for (int i = 0; i < k; ++i)
    if (kept[i]) kdims.push_back(dims[i]);
  const std::vector<int> st = strides(dims);
  const std::vector<int> kst = strides(kdims);
  const int n = static_cast<int>(m.rows());

  // Split every full index into (kept index, traced index).
  std::vector<int> kidx(n), tidx(n);
  for (int r = 0; r < n; ++r) {
    int ki = 0, ti = 0, t_mul = 1, kpos = 0;
    for (int i = 0; i < k; ++i) {
      const int digit = (r / st[i]) % dims[i];
      if (kept[i]) {
        ki += digit * kst[kpos++];
      }
    }
    for (int i = k - 1; i >= 0; --i) {
      if (!kept[i]) {
        ti += ((r / st[i]) % dims[i]) * t_mul;
        t_mul *= dims[i];
      }
    }
    kidx[r] = ki;
    tidx[r] = ti;
  }
  const int dk = product(kdims);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (tidx[r] == tidx[c]) out(kidx[r], kidx[c]) += m(r, c);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<int>& dims, int sys) {
  check_dims(m, dims, "partial_transpose");
  if (sys < 0 || sys >= static_cast<int>(dims.size()))
    throw std::invalid_argument("partial_transpose: bad subsystem index");
  const std::vector<int> st = strides(dims);
  const int n = static_cast<int>(m.rows());
  ComplexMatrix out(n, n);
  for (int r = 0; r < n; ++r) {
    const int dr = (r / st[sys]) % dims[sys];
    for (int c = 0; c < n; ++c) {
      const int dc = (c / st[sys]) % dims[sys];
      const int r2 = r + (dc - dr) * st[sys];
      const int c2 = c + (dr - dc) * st[sys];
      out(r2, c2) = m(r, c);
    }
  }
  return out;
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& m) {
  return hermitian_apply(m, [](double x) { return x > 0 ? std::sqrt(x) : 0.0; });
}

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

double h2(double x) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) throw std::domain_error("h2: argument outside [0,1]");
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double g(double x) {
  if (!(x >= -1e-12)) throw std::domain_error("g: negative argument");
  x = std::max(x, 0.0);
  return xlog2x(1.0 + x) - xlog2x(x);
}

void require_density(const ComplexMatrix& rho, const char* what) {
  if (rho.rows() != rho.cols() || !is_hermitian(rho, 1e-9))
    throw std::invalid_argument(std::string(what) + ": input not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(what) + ": input trace is not 1");
}

double entropy_of_eigenvalues(const RealVector& w) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) > kClip) h -= w(i) * std::log2(w(i));
  return h;
}

double entropy_vn(const ComplexMatrix& rho) {
  require_density(rho, "entropy_vn");
  RealVector w = eigvalsh(rho);
  if (w.minCoeff() < -1e-10) throw std::invalid_argument("entropy_vn: input not PSD");
  return entropy_of_eigenvalues(w);
}

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_density(rho, "relative_entropy");
  require_density(sigma, "relative_entropy");
  Spectrum ss = eigh(sigma);
  const int n = static_cast<int>(sigma.rows());
  ComplexMatrix null_proj = ComplexMatrix::Zero(n, n);
  RealVector logs(n);
  for (int i = 0; i < n; ++i) {
    if (ss.eigenvalues(i) <= 1e-10) {
      null_proj += ss.eigenvectors.col(i) * ss.eigenvectors.col(i).adjoint();
      logs(i) = 0.0;
    } else {
      logs(i) = std::log2(ss.eigenvalues(i));
    }
  }
  if (spectral_norm(null_proj * rho * null_proj) > 1e-8) return kInf;
  const ComplexMatrix log_sigma = ss.eigenvectors * logs.asDiagonal() * ss.eigenvectors.adjoint();
  const double cross = (rho * log_sigma).trace().real();
  return -entropy_of_eigenvalues(eigvalsh(rho)) - cross;
}

double cmi(const ComplexMatrix& rho, const std::vector<int>& dims, const std::vector<Part>& part) {
  check_dims(rho, dims, "cmi");
  if (part.size() != dims.size()) throw std::invalid_argument("cmi: partition size mismatch");
  require_density(rho, "cmi");
  std::vector<int> ae, be, e, abe;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
    abe.push_back(i);
    if (part[i] != Part::B) ae.push_back(i);
    if (part[i] != Part::A) be.push_back(i);
    if (part[i] == Part::E) e.push_back(i);
  }
  auto h = [&](const std::vector<int>& keep) {
    if (keep.empty()) return 0.0;
    return entropy_of_eigenvalues(eigvalsh(partial_trace(rho, dims, keep)));
  };
  return h(ae) + h(be) - h(e) - entropy_of_eigenvalues(eigvalsh(rho));
}

double mutual_info(const ComplexMatrix& rho, int da, int db) {
  return cmi(rho, {da, db}, {Part::A, Part::B});
}

double trace_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace gadc
