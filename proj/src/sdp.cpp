#include "gadc/sdp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gadc {

namespace {

ComplexMatrix pt_b(const ComplexMatrix& m, int da, int db) { return partial_transpose(m, {da, db}, 1); }
AffineMatrix pt_b(const AffineMatrix& m, int da, int db) { return partial_transpose(m, {da, db}, 1); }
AffineMatrix tr_b(const AffineMatrix& m, int da, int db) { return partial_trace(m, {da, db}, {0}); }

// Adds Z >= 0, Z >= diff, t I >= Tr_B Z and returns t.
AffineMatrix add_diamond_epigraph(ConeProgram& p, const AffineMatrix& diff, int din, int dout) {
  AffineMatrix z = p.add_hermitian(din * dout, "Z");
  AffineMatrix t = p.add_scalar("t");
  p.add_psd(z);
  p.add_psd(z - diff);
  p.add_psd(p.scalar_identity(t, din) - tr_b(z, din, dout));
  return t;
}

ComplexMatrix gamma_of(const QuantumChannel& ch) { return choi(ch).gamma(); }

double log2_checked(const ConeProgram& p, const char* what) {
  return std::log2(solve_checked(p, what).primal);
}

std::atomic<double> g_target_tol{1e-10};

}  // namespace

void set_sdp_tolerance(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("set_sdp_tolerance: tolerance outside (0,1)");
  g_target_tol.store(tol);
}

double sdp_tolerance() { return g_target_tol.load(); }

ConeSolution solve_checked(const ConeProgram& p, const char* what) {
  const SolverOptions standard;
  const double t = sdp_tolerance();
  ConeSolution s = solve(p, {t, t, standard.max_iter});
  if (s.status == ConeStatus::max_iter && s.infeasibility <= std::max(standard.feas_tol, t) &&
      s.gap <= std::max(standard.gap_tol, t))
    s.status = ConeStatus::optimal;
  if (!s.ok()) throw std::runtime_error(std::string(what) + ": solver status " + to_string(s.status));
  return s;
}

ConeProgram diamond_program(const ComplexMatrix& j, int din, int dout) {
  ConeProgram p;
  p.minimize(add_diamond_epigraph(p, AffineMatrix(j), din, dout));
  return p;
}

ConeProgram beta_program(const ComplexMatrix& gamma, int din, int dout) {
  ConeProgram p;
  AffineMatrix r = p.add_hermitian(din * dout, "R");
  AffineMatrix s = p.add_hermitian(dout, "S");
  const ComplexMatrix gt = pt_b(gamma, din, dout);
  const AffineMatrix rt = pt_b(r, din, dout), is = tensor(identity(din), s);
  p.add_psd(r - gt);
  p.add_psd(r + gt);
  p.add_psd(is - rt);
  p.add_psd(is + rt);
  p.minimize(s);
  return p;
}

ConeProgram zeta_program(const ComplexMatrix& gamma, int din, int dout) {
  ConeProgram p;
  AffineMatrix v = p.add_hermitian(din * dout, "V");
  AffineMatrix s = p.add_hermitian(dout, "S");
  const AffineMatrix vt = pt_b(v, din, dout), is = tensor(identity(din), s);
  p.add_psd(v - gamma);
  p.add_psd(is - vt);
  p.add_psd(is + vt);
  p.minimize(s);
  return p;
}

ConeProgram rmax_program(const ComplexMatrix& gamma, int din, int dout) {
  ConeProgram p;
  AffineMatrix y = p.add_hermitian(din * dout, "Y");
  AffineMatrix v = p.add_hermitian(din * dout, "V");
  AffineMatrix t = p.add_scalar("t");
  p.add_psd(y);
  p.add_psd(v);
  p.add_psd(pt_b(v - y, din, dout) - gamma);
  p.add_psd(p.scalar_identity(t, din) - tr_b(v + y, din, dout));
  p.minimize(t);
  return p;
}

ConeProgram emax_program(const ComplexMatrix& gamma, int din, int dout) {
  ConeProgram p;
  AffineMatrix y = p.add_hermitian(din * dout, "Y");
  AffineMatrix t = p.add_scalar("t");
  p.add_psd(y - gamma);
  p.add_psd(pt_b(y, din, dout));
  p.add_psd(p.scalar_identity(t, din) - tr_b(y, din, dout));
  p.minimize(t);
  return p;
}

double diamond_dist(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.din() != b.din() || a.dout() != b.dout()) throw std::invalid_argument("diamond_dist: dimension mismatch");
  const ConeProgram p = diamond_program(gamma_of(a) - gamma_of(b), a.din(), a.dout());
  return 2.0 * solve_checked(p, "diamond_dist").primal;
}

double sdp_c_beta(const QuantumChannel& ch) {
  return log2_checked(beta_program(gamma_of(ch), ch.din(), ch.dout()), "sdp_c_beta");
}

double sdp_c_zeta(const QuantumChannel& ch) {
  return log2_checked(zeta_program(gamma_of(ch), ch.din(), ch.dout()), "sdp_c_zeta");
}

double sdp_delta_rmax(const QuantumChannel& ch) {
  return log2_checked(rmax_program(gamma_of(ch), ch.din(), ch.dout()), "sdp_delta_rmax");
}

double sdp_sigma_emax(const QuantumChannel& ch) {
  if (ch.din() != 2 || ch.dout() != 2) throw std::invalid_argument("sdp_sigma_emax: qubit channel required");
  return log2_checked(emax_program(gamma_of(ch), 2, 2), "sdp_sigma_emax");
}

ApproxResult sdp_eps_deg(const QuantumChannel& ch) {
  const QuantumChannel comp = complementary(ch);
  const int da = ch.din(), db = ch.dout(), de = comp.dout();
  const ComplexMatrix g = gamma_of(ch), gc = gamma_of(comp);
  ConeProgram p;
  AffineMatrix jd = p.add_hermitian(db * de, "J_D");
  p.add_psd(jd);
  p.add_zero(partial_trace(jd, {db, de}, {0}) - identity(db));
  AffineMatrix composed = jd.map([&](const ComplexMatrix& m) { return compose_choi(m, db, de, g, da); });
  p.minimize(add_diamond_epigraph(p, gc - composed, da, de));
  ConeSolution s = solve_checked(p, "sdp_eps_deg");
  return {s.primal, ChoiMatrix::from_gamma(db, de, hermitize(s.values[0]))};
}

double sdp_eps_adeg(const QuantumChannel& ch) {
  const QuantumChannel comp = complementary(ch);
  const int da = ch.din(), db = ch.dout(), de = comp.dout();
  const ComplexMatrix g = gamma_of(ch), gc = gamma_of(comp);
  ConeProgram p;
  AffineMatrix je = p.add_hermitian(de * db, "J_E");
  p.add_psd(je);
  p.add_zero(partial_trace(je, {de, db}, {0}) - identity(de));
  AffineMatrix composed = je.map([&](const ComplexMatrix& m) { return compose_choi(m, de, db, gc, da); });
  p.minimize(add_diamond_epigraph(p, g - composed, da, db));
  return solve_checked(p, "sdp_eps_adeg").primal;
}

ApproxResult sdp_eps_eb(const QuantumChannel& ch) {
  if (ch.din() != 2 || ch.dout() != 2) throw std::invalid_argument("sdp_eps_eb: qubit channel required");
  const ComplexMatrix g = gamma_of(ch);
  ConeProgram p;
  AffineMatrix jm = p.add_hermitian(4, "J_M");
  p.add_psd(jm);
  p.add_psd(pt_b(jm, 2, 2));
  p.add_zero(tr_b(jm, 2, 2) - identity(2));
  p.minimize(add_diamond_epigraph(p, g - jm, 2, 2));
  ConeSolution s = solve_checked(p, "sdp_eps_eb");
  return {s.primal, ChoiMatrix::from_gamma(2, 2, hermitize(s.values[0]))};
}

bool WitnessReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

namespace {

double min_eig(const ComplexMatrix& m) { return eigvalsh(m).minCoeff(); }

ComplexMatrix mat4(std::initializer_list<double> v) {
  ComplexMatrix m(4, 4);
  auto it = v.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return m;
}

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

struct Checker {
  WitnessReport& r;
  double psd_tol, value_tol;
  void psd(const std::string& name, const ComplexMatrix& m) {
    const double v = min_eig(m);
    r.checks.push_back({name, v, v >= -psd_tol});
  }
  void value(const std::string& name, double got) {
    const double err = std::abs(got - r.expected);
    r.checks.push_back({name, err, err <= value_tol});
  }
};

// Mixes an N = 0 witness with its sigma_x (x) sigma_x conjugate.
ComplexMatrix flip_mix(const ComplexMatrix& m, double n) {
  const ComplexMatrix x = m.rows() == 4 ? tensor(pauli_x(), pauli_x()) : pauli_x();
  return (1.0 - n) * m + n * x * m * x;
}

}  // namespace

WitnessReport verify_cbeta_witness(const GadcParams& p, bool inject_fault) {
  require_domain(p);
  const double g = p.gamma, n = p.n, s = std::sqrt(1.0 - g);
  const double a = 0.5 * (s - (1.0 - g));
  WitnessReport r;
  r.expected = 1.0 + s;
  Checker c{r, 1e-10, 1e-12};
  const ComplexMatrix gam = gadc_choi(p).gamma(), gt = pt_b(gam, 2, 2), i2 = identity(2);

  ComplexMatrix R = flip_mix(mat4({1, 0, 0, 0, 0, 1 - g + a, a, 0, 0, a, 1 + a, 0, 0, 0, 0, 1 - g}), n);
  ComplexMatrix S = flip_mix(diag2(1 + a, 1 - g + a), n);
  if (inject_fault) S(0, 0) -= 0.05;
  c.psd("beta primal R - Gamma^T", R - gt);
  c.psd("beta primal R + Gamma^T", R + gt);
  c.psd("beta primal I(x)S - R^T", tensor(i2, S) - pt_b(R, 2, 2));
  c.psd("beta primal I(x)S + R^T", tensor(i2, S) + pt_b(R, 2, 2));
  c.value("beta primal Tr S", S.trace().real());

  const ComplexMatrix K = 0.5 * mat4({1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 1});
  const ComplexMatrix E = 0.5 * mat4({1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1});
  c.psd("beta dual K", K);
  c.psd("beta dual E", E);
  c.psd("beta dual E^T - K", pt_b(E, 2, 2) - K);
  c.psd("beta dual I - E_B", i2 - partial_trace(E, {2, 2}, {1}));
  c.value("beta dual objective", (gam * pt_b(K, 2, 2)).trace().real());

  const double v = s - a;
  ComplexMatrix V = flip_mix(mat4({1 + a, 0, 0, v, 0, 0, 0, 0, 0, 0, g, 0, v, 0, 0, 1 - g + a}), n);
  ComplexMatrix Sz = flip_mix(diag2(1 + a, 1 - g + a), n);
  c.psd("zeta primal V - Gamma", V - gam);
  c.psd("zeta primal I(x)S - V^T", tensor(i2, Sz) - pt_b(V, 2, 2));
  c.psd("zeta primal I(x)S + V^T", tensor(i2, Sz) + pt_b(V, 2, 2));
  c.value("zeta primal Tr S", Sz.trace().real());

  const ComplexMatrix Kz = E, Ez = K;
  c.psd("zeta dual K", Kz);
  c.psd("zeta dual E", Ez);
  c.psd("zeta dual E^T - K", pt_b(Ez, 2, 2) - Kz);
  c.psd("zeta dual I - Tr_A E", i2 - partial_trace(Ez, {2, 2}, {1}));
  c.value("zeta dual objective", (Kz * gam).trace().real());
  return r;
}

WitnessReport verify_emax_witness(const GadcParams& p, bool inject_fault) {
  require_domain(p);
  const double g = p.gamma, n = p.n, s = std::sqrt(1.0 - g);
  const double c3 = std::sqrt(std::pow(g * (2.0 * n - 1.0), 2) + 4.0 * (1.0 - g));
  const double lminus = 0.5 * (g - c3);
  const bool eb = lminus > 0.0;
  WitnessReport r;
  r.expected = eb ? 1.0 : 1.0 - 0.5 * g + 0.5 * c3;
  Checker c{r, 1e-9, 1e-10};
  const ComplexMatrix gam = gadc_choi(p).gamma(), i2 = identity(2);

  ComplexMatrix Y = gam;
  if (!eb) {
    Y(1, 1) -= lminus;
    Y(2, 2) -= lminus;
  }
  if (inject_fault) Y(0, 3) = Y(3, 0) = Y(0, 3) + 0.05;
  c.psd("Sigma primal Y - Gamma", Y - gam);
  c.psd("Sigma primal Y^T", pt_b(Y, 2, 2));
  c.value("Sigma primal ||Tr_B Y||", spectral_norm(partial_trace(Y, {2, 2}, {0})));

  ComplexMatrix rho, P, Q, R, rho_r;
  if (eb) {
    rho = i2 / 2.0;
    P = tensor(rho, i2);
    Q = ComplexMatrix::Zero(4, 4);
    R = tensor(rho, i2);
    rho_r = rho;
  } else {
    const double b = (c3 - (2.0 * n - 1.0) * g) / (2.0 * c3), w = s / c3;
    rho = diag2(b, 1.0 - b);
    P = mat4({b, 0, 0, w, 0, 0, 0, 0, 0, 0, 0, 0, w, 0, 0, 1 - b});
    Q = mat4({0, 0, 0, 0, 0, b, -w, 0, 0, -w, 1 - b, 0, 0, 0, 0, 0});
    const double c1 = 4.0 * (s + g * (1.0 - n)), c2 = 4.0 * (2.0 * s + g);
    const double disc = std::sqrt(std::max(0.0, c1 * c1 + c2 * ((4.0 * n - 3.0) * g - c3)));
    double ar = (c1 - disc) / c2;
    if (ar < 0.0 || ar > 1.0) ar = (c1 + disc) / c2;
    const double q = 2.0 * ar * (1.0 - ar);
    R = mat4({ar, 0, 0, q, 0, ar * (1 - 2 * ar), 0, 0, 0, 0, -(1 - ar) * (1 - 2 * ar), 0, q, 0, 0, 1 - ar});
    rho_r = diag2(ar, 1.0 - ar);
    r.checks.push_back({"Delta dual a in [0,1]", ar, ar >= 0.0 && ar <= 1.0});
  }
  c.psd("Sigma dual P", P);
  c.psd("Sigma dual Q", Q);
  c.psd("Sigma dual rho(x)I - P - Q^T", tensor(rho, i2) - P - pt_b(Q, 2, 2));
  c.psd("Sigma dual rho", rho);
  c.value("Sigma dual objective", (gam * P).trace().real());
  const double tr = rho.trace().real();
  r.checks.push_back({"Sigma dual Tr rho <= 1", tr, tr <= 1.0 + 1e-12});

  const ComplexMatrix rt = pt_b(R, 2, 2);
  c.psd("Delta dual rho(x)I - R^T", tensor(rho_r, i2) - rt);
  c.psd("Delta dual rho(x)I + R^T", tensor(rho_r, i2) + rt);
  c.value("Delta dual objective", (gam * R).trace().real());
  return r;
}

}  // namespace gadc
