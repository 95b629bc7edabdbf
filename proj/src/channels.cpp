#include "gadc/channels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gadc {

namespace {

QuantumChannel pruned(int din, int dout, std::vector<ComplexMatrix> kraus) {
  if (static_cast<int>(kraus.size()) <= din * dout) return QuantumChannel(din, dout, std::move(kraus));
  ComplexMatrix state = ComplexMatrix::Zero(din * dout, din * dout);
  for (const auto& k : kraus) {
    ComplexMatrix v(din * dout, 1);
    for (int a = 0; a < din; ++a)
      for (int b = 0; b < dout; ++b) v(a * dout + b, 0) = k(b, a);
    state += v * v.adjoint();
  }
  return channel_from_choi({din, dout, state / static_cast<double>(din)});
}

}  // namespace

QuantumChannel::QuantumChannel(int din, int dout, std::vector<ComplexMatrix> kraus)
    : din_(din), dout_(dout), kraus_(std::move(kraus)) {
  if (din <= 0 || dout <= 0 || kraus_.empty()) throw std::invalid_argument("QuantumChannel: empty");
  if (static_cast<int>(kraus_.size()) > din * dout)
    throw std::invalid_argument("QuantumChannel: more Kraus operators than din*dout");
  ComplexMatrix s = ComplexMatrix::Zero(din, din);
  for (const auto& k : kraus_) {
    if (k.rows() != dout || k.cols() != din)
      throw std::invalid_argument("QuantumChannel: Kraus operator has wrong shape");
    s += k.adjoint() * k;
  }
  if (max_abs(s - identity(din)) > 1e-10)
    throw std::invalid_argument("QuantumChannel: not trace preserving");
}

ComplexMatrix QuantumChannel::operator()(const ComplexMatrix& rho) const {
  if (rho.rows() != din_ || rho.cols() != din_) throw std::invalid_argument("apply: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(dout_, dout_);
  for (const auto& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho) { return ch(rho); }

ChoiMatrix ChoiMatrix::from_gamma(int din, int dout, const ComplexMatrix& gamma) {
  return {din, dout, gamma / static_cast<double>(din)};
}

ChoiMatrix choi(const QuantumChannel& ch) {
  const int da = ch.din(), db = ch.dout();
  ComplexMatrix state = ComplexMatrix::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      ComplexMatrix eij = ComplexMatrix::Zero(da, da);
      eij(i, j) = 1.0;
      state.block(i * db, j * db, db, db) = ch(eij);
    }
  return {da, db, state / static_cast<double>(da)};
}

ComplexMatrix isometric_extension(const QuantumChannel& ch) {
  const int r = static_cast<int>(ch.kraus().size());
  ComplexMatrix v = ComplexMatrix::Zero(ch.dout() * r, ch.din());
  for (int k = 0; k < r; ++k)
    for (int b = 0; b < ch.dout(); ++b) v.row(b * r + k) = ch.kraus()[k].row(b);
  return v;
}

QuantumChannel complementary(const QuantumChannel& ch) {
  const int r = static_cast<int>(ch.kraus().size());
  std::vector<ComplexMatrix> f;
  for (int b = 0; b < ch.dout(); ++b) {
    ComplexMatrix fb(r, ch.din());
    for (int k = 0; k < r; ++k) fb.row(k) = ch.kraus()[k].row(b);
    f.push_back(fb);
  }
  return pruned(ch.din(), r, std::move(f));
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
  if (first.dout() != second.din()) throw std::invalid_argument("compose: dimension mismatch");
  std::vector<ComplexMatrix> k;
  for (const auto& a : second.kraus())
    for (const auto& b : first.kraus()) k.push_back(a * b);
  return pruned(first.din(), second.dout(), std::move(k));
}

QuantumChannel channel_from_choi(const ChoiMatrix& c) {
  const int da = c.din, db = c.dout;
  if (c.state.rows() != da * db || c.state.cols() != da * db)
    throw std::invalid_argument("channel_from_choi: dimension mismatch");
  const ComplexMatrix gam = c.gamma();
  if (max_abs(partial_trace(gam, {da, db}, {0}) - identity(da)) > 1e-6)
    throw std::invalid_argument("channel_from_choi: marginal is not the identity");
  Spectrum s = eigh(gam);
  if (s.eigenvalues.minCoeff() < -1e-8) throw std::invalid_argument("channel_from_choi: not PSD");
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < da * db; ++i) {
    if (s.eigenvalues(i) < 1e-12) continue;
    ComplexMatrix k(db, da);
    for (int a = 0; a < da; ++a)
      for (int b = 0; b < db; ++b) k(b, a) = std::sqrt(s.eigenvalues(i)) * s.eigenvectors(a * db + b, i);
    kraus.push_back(k);
  }
  ComplexMatrix sum = ComplexMatrix::Zero(da, da);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const ComplexMatrix fix = hermitian_apply(sum, [](double x) { return 1.0 / std::sqrt(x); });
  for (auto& k : kraus) k = k * fix;
  return QuantumChannel(da, db, std::move(kraus));
}

QuantumChannel pauli_twirl(const QuantumChannel& ch) {
  if (ch.din() != 2 || ch.dout() != 2) throw std::invalid_argument("pauli_twirl: qubit channel required");
  const ComplexMatrix paulis[4] = {identity(2), pauli_x(), pauli_y(), pauli_z()};
  std::vector<ComplexMatrix> k;
  for (const auto& p : paulis)
    for (const auto& a : ch.kraus()) k.push_back(0.5 * p * a * p);
  return pruned(2, 2, std::move(k));
}

QuantumChannel identity_channel(int d) { return QuantumChannel(d, d, {identity(d)}); }

QuantumChannel unitary_channel(const ComplexMatrix& u) {
  return QuantumChannel(static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u});
}

QuantumChannel partial_trace_channel(const std::vector<int>& dims, const std::vector<int>& keep) {
  const int n = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
  std::vector<ComplexMatrix> kraus;
  // Kraus operator t is <t| on the traced factors, identity on the rest.
  std::vector<bool> kept(dims.size(), false);
  for (int s : keep) kept.at(s) = true;
  int dk = 1, dt = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) (kept[i] ? dk : dt) *= dims[i];
  for (int t = 0; t < dt; ++t) kraus.push_back(ComplexMatrix::Zero(dk, n));
  for (int r = 0; r < n; ++r) {
    int rem = r, ki = 0, ti = 0, kmul = 1, tmul = 1;
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      const int digit = rem % dims[i];
      rem /= dims[i];
      if (kept[i]) {
        ki += digit * kmul;
        kmul *= dims[i];
      } else {
        ti += digit * tmul;
        tmul *= dims[i];
      }
    }
    kraus[ti](ki, r) = 1.0;
  }
  return QuantumChannel(n, dk, std::move(kraus));
}

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  if (a.din != b.din || a.dout != b.dout) return kInf;
  return max_abs(a.state - b.state);
}

double choi_distance(const QuantumChannel& a, const QuantumChannel& b) {
  return choi_distance(choi(a), choi(b));
}

ComplexMatrix apply_choi(const ComplexMatrix& j, int din, int dout, const ComplexMatrix& x) {
  if (j.rows() != din * dout || x.rows() != din) throw std::invalid_argument("apply_choi: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
  for (int i = 0; i < din; ++i)
    for (int k = 0; k < din; ++k)
      if (x(i, k) != cplx(0.0)) out += x(i, k) * j.block(i * dout, k * dout, dout, dout);
  return out;
}

ComplexMatrix compose_choi(const ComplexMatrix& j_second, int db, int dc,
                           const ComplexMatrix& gamma_first, int da) {
  if (j_second.rows() != db * dc || gamma_first.rows() != da * db)
    throw std::invalid_argument("compose_choi: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(da * dc, da * dc);
  for (int a = 0; a < da; ++a)
    for (int a2 = 0; a2 < da; ++a2)
      for (int b = 0; b < db; ++b)
        for (int b2 = 0; b2 < db; ++b2) {
          const cplx w = gamma_first(a * db + b, a2 * db + b2);
          if (w == cplx(0.0)) continue;
          out.block(a * dc, a2 * dc, dc, dc) += w * j_second.block(b * dc, b2 * dc, dc, dc);
        }
  return out;
}

}  // namespace gadc
