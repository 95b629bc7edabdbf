#pragma once

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace gadc {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenvalues sorted descending, eigenvectors as matching columns.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

Spectrum eigh(const ComplexMatrix& m);
RealVector eigvalsh(const ComplexMatrix& m);

ComplexMatrix identity(int n);
ComplexMatrix ket(int n, int i);
ComplexMatrix projector(int n, int i);
ComplexMatrix dagger(const ComplexMatrix& m);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix max_entangled(int d);  // |Phi+><Phi+|, unit trace

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
ComplexMatrix hermitize(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(const std::vector<ComplexMatrix>& factors);

// dims lists subsystem dimensions in tensor order; keep holds the retained
// subsystem indices (any order, result keeps tensor order).
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);
ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<int>& dims, int sys);

// Matrix function on a Hermitian matrix through its eigendecomposition.
template <typename F>
ComplexMatrix hermitian_apply(const ComplexMatrix& m, F f) {
  Spectrum s = eigh(m);
  RealVector v = s.eigenvalues.unaryExpr(f);
  return s.eigenvectors * v.asDiagonal() * s.eigenvectors.adjoint();
}
ComplexMatrix sqrtm_psd(const ComplexMatrix& m);

double h2(double x);
double g(double x);
double xlog2x(double x);

double entropy_vn(const ComplexMatrix& rho);
// Same functional without the density-matrix precondition checks.
double entropy_of_eigenvalues(const RealVector& w);

// Returns kInf when supp(rho) is not contained in supp(sigma).
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

enum class Part { A, B, E };
// I(A;B|E) for a state on the tensor product of dims, with part[i] naming
// which party owns subsystem i.
double cmi(const ComplexMatrix& rho, const std::vector<int>& dims, const std::vector<Part>& part);
double mutual_info(const ComplexMatrix& rho, int da, int db);

double trace_norm(const ComplexMatrix& m);
double spectral_norm(const ComplexMatrix& m);

void require_density(const ComplexMatrix& rho, const char* what);

}  // namespace gadc
