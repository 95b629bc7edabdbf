#include <cmath>
#include <random>

#include "doctest.h"
#include "gadc/gadc.hpp"
#include "gadc/mathcore.hpp"
#include "gadc/optimize.hpp"

using namespace gadc;

namespace {

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  return qr.householderQ();
}

ComplexMatrix random_density(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = cplx(nd(rng), nd(rng));
  ComplexMatrix r = z * z.adjoint();
  return r / r.trace().real();
}

}  // namespace

TEST_CASE("tensor products") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);
  ComplexMatrix zz = tensor(pauli_z(), pauli_z());
  CHECK(zz(0, 0).real() == 1.0);
  CHECK(zz(1, 1).real() == -1.0);
  CHECK(zz(2, 2).real() == -1.0);
  CHECK(zz(3, 3).real() == 1.0);
  ComplexMatrix p = tensor(projector(2, 0), projector(2, 1));
  CHECK(p(1, 1).real() == 1.0);
  CHECK(std::abs(p.sum() - cplx(1.0)) < 1e-15);
}

TEST_CASE("partial trace") {
  CHECK(max_abs(partial_trace(max_entangled(2), {2, 2}, {0}) - identity(2) / 2.0) < 1e-15);
  std::mt19937_64 rng(7);
  ComplexMatrix ra = random_density(2, rng), sb = random_density(3, rng);
  CHECK(max_abs(partial_trace(tensor(ra, sb), {2, 3}, {1}) - sb) < 1e-14);
  CHECK(max_abs(partial_trace(tensor(ra, sb), {2, 3}, {0}) - ra) < 1e-14);

  // Three factors, middle kept, checked against an explicit index sum.
  ComplexMatrix r3 = random_density(12, rng);
  ComplexMatrix mid = partial_trace(r3, {2, 3, 2}, {1});
  ComplexMatrix ref = ComplexMatrix::Zero(3, 3);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int b = 0; b < 3; ++b)
        for (int b2 = 0; b2 < 3; ++b2) ref(b, b2) += r3(a * 6 + b * 2 + c, a * 6 + b2 * 2 + c);
  CHECK(max_abs(mid - ref) < 1e-14);
  CHECK(std::abs(partial_trace(r3, {2, 3, 2}, {0, 2}).trace() - r3.trace()) < 1e-12);

  for (double gm : {0.0, 0.3, 1.0})
    for (double n : {0.0, 0.4, 1.0}) {
      ComplexMatrix s = gadc_choi({gm, n}).state;
      CHECK(max_abs(partial_trace(s, {2, 2}, {0}) - identity(2) / 2.0) < 1e-15);
    }
  CHECK_THROWS(partial_trace(identity(4), {2, 3}, {0}));
}

TEST_CASE("partial transpose") {
  RealVector w = eigvalsh(partial_transpose(max_entangled(2), {2, 2}, 1));
  CHECK(w(3) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(w(2) == doctest::Approx(0.5).epsilon(1e-14));
  std::mt19937_64 rng(3);
  ComplexMatrix r = random_density(8, rng);
  CHECK(max_abs(partial_transpose(partial_transpose(r, {2, 4}, 1), {2, 4}, 1) - r) < 1e-14);
  // Entry-level check of the transpose on the second factor.
  ComplexMatrix pt = partial_transpose(r, {2, 4}, 1);
  CHECK(std::abs(pt(0 * 4 + 1, 1 * 4 + 3) - r(0 * 4 + 3, 1 * 4 + 1)) < 1e-15);

  const double gm = 0.9, n = 0.5;
  ComplexMatrix c = gadc_choi({gm, n}).state;
  const double det = partial_transpose(c, {2, 2}, 1).determinant().real();
  const double expect = (-1 + 2 * gm - gm * gm + std::pow(gm, 4) * (1 - n) * (1 - n) * n * n) / 16.0;
  CHECK(det == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("entropies and scalar functions") {
  CHECK(entropy_vn(identity(2) / 2.0) == doctest::Approx(1.0));
  CHECK(std::abs(entropy_vn(max_entangled(2))) < 1e-12);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  CHECK(entropy_vn(d) == doctest::Approx(-0.25 * std::log2(0.25) - 0.75 * std::log2(0.75)));
  CHECK(entropy_vn(d) == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK(h2(0.5) == 1.0);
  CHECK(h2(0.0) == 0.0);
  CHECK(g(0.0) == 0.0);
  CHECK(g(1.0) == doctest::Approx(2.0));
  CHECK(g(0.5) == doctest::Approx(1.5 * std::log2(1.5) + 0.5).epsilon(1e-14));
  CHECK(g(0.5) == doctest::Approx(1.377444).epsilon(1e-6));
  CHECK_THROWS(h2(1.5));
  CHECK_THROWS(g(-0.1));
  CHECK_THROWS(entropy_vn(identity(2)));
}

TEST_CASE("relative entropy") {
  std::mt19937_64 rng(11);
  ComplexMatrix r = random_density(3, rng);
  CHECK(std::abs(relative_entropy(r, r)) < 1e-10);
  CHECK(relative_entropy(projector(2, 0), identity(2) / 2.0) == doctest::Approx(1.0));
  CHECK(std::isinf(relative_entropy(projector(2, 0), projector(2, 1))));
  for (int t = 0; t < 20; ++t) {
    ComplexMatrix a = random_density(4, rng), b = random_density(4, rng);
    CHECK(relative_entropy(a, b) >= 0.0);
  }
  // Commuting case reduces to the classical divergence.
  ComplexMatrix p = ComplexMatrix::Zero(2, 2), q = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 0.3;
  p(1, 1) = 0.7;
  q(0, 0) = 0.6;
  q(1, 1) = 0.4;
  CHECK(relative_entropy(p, q) ==
        doctest::Approx(0.3 * std::log2(0.3 / 0.6) + 0.7 * std::log2(0.7 / 0.4)).epsilon(1e-12));
}

TEST_CASE("conditional mutual information") {
  std::mt19937_64 rng(5);
  ComplexMatrix ra = random_density(2, rng), rb = random_density(2, rng), re = random_density(2, rng);
  const std::vector<Part> abe = {Part::A, Part::B, Part::E};
  CHECK(std::abs(cmi(tensor({ra, rb, re}), {2, 2, 2}, abe)) < 1e-10);
  CHECK(cmi(tensor(max_entangled(2), re), {2, 2, 2}, abe) == doctest::Approx(2.0));

  // Pure tripartite state: I(A;B|E) equals I(A;B) of the AB marginal.
  std::normal_distribution<double> nd;
  ComplexMatrix psi(8, 1);
  for (int i = 0; i < 8; ++i) psi(i, 0) = cplx(nd(rng), nd(rng));
  psi /= psi.norm();
  ComplexMatrix pure = psi * psi.adjoint();
  ComplexMatrix ab = partial_trace(pure, {2, 2, 2}, {0, 1});
  CHECK(cmi(pure, {2, 2, 2}, abe) == doctest::Approx(mutual_info(ab, 2, 2)).epsilon(1e-10));

  for (int t = 0; t < 20; ++t) {
    ComplexMatrix r = random_density(8, rng);
    const double v = cmi(r, {2, 2, 2}, abe);
    CHECK(v >= -1e-8);
    ComplexMatrix u = tensor({random_unitary(2, rng), random_unitary(2, rng), random_unitary(2, rng)});
    CHECK(cmi(u * r * u.adjoint(), {2, 2, 2}, abe) == doctest::Approx(v).epsilon(1e-9));
  }
}

TEST_CASE("norms") {
  CHECK(trace_norm(identity(4)) == doctest::Approx(4.0));
  CHECK(spectral_norm(identity(4)) == doctest::Approx(1.0));
  CHECK(trace_norm(pauli_z()) == doctest::Approx(2.0));
  CHECK(trace_norm(partial_transpose(max_entangled(2), {2, 2}, 1)) == doctest::Approx(2.0));
}

TEST_CASE("entropy is unitarily invariant") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 7;
    ComplexMatrix r = random_density(n, rng);
    ComplexMatrix u = random_unitary(n, rng);
    CHECK(std::abs(entropy_vn(u * r * u.adjoint()) - entropy_vn(r)) < 1e-10);
  }
}

TEST_CASE("spectrum ordering and density sums") {
  std::mt19937_64 rng(17);
  ComplexMatrix r = random_density(6, rng);
  Spectrum s = eigh(r);
  for (int i = 0; i + 1 < 6; ++i) CHECK(s.eigenvalues(i) >= s.eigenvalues(i + 1));
  CHECK(s.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs(s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint() - r) < 1e-12);
}

TEST_CASE("scalar and vector optimizers") {
  auto f = [](double x) { return -(x - 0.3) * (x - 0.3); };
  CHECK(golden_section_max(f, 0.0, 1.0).x == doctest::Approx(0.3).epsilon(1e-8));
  // A bimodal function: the seeding grid must find the higher peak.
  auto bi = [](double x) { return std::exp(-100 * (x - 0.2) * (x - 0.2)) + 2 * std::exp(-100 * (x - 0.8) * (x - 0.8)); };
  CHECK(maximize_scalar(bi, 0.0, 1.0).x == doctest::Approx(0.8).epsilon(1e-6));
  auto rosen = [](const RealVector& v) {
    return (1 - v(0)) * (1 - v(0)) + 100 * (v(1) - v(0) * v(0)) * (v(1) - v(0) * v(0));
  };
  RealVector x0(2);
  x0 << -1.2, 1.0;
  VectorOptimum r = minimize_bfgs(rosen, x0);
  CHECK(r.x(0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x(1) == doctest::Approx(1.0).epsilon(1e-4));
}
