#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gadc/mathcore.hpp"

namespace gadc {

// Affine matrix expression: constant + sum_k x_k coeff_k over real coordinates x.
class AffineMatrix {
 public:
  AffineMatrix() = default;
  explicit AffineMatrix(const ComplexMatrix& constant);

  int rows() const { return static_cast<int>(constant_.rows()); }
  int cols() const { return static_cast<int>(constant_.cols()); }
  const ComplexMatrix& constant() const { return constant_; }
  const std::map<int, ComplexMatrix>& terms() const { return terms_; }

  void add_term(int coord, const ComplexMatrix& coeff);

  // Applies a linear map to the constant and to every coefficient.
  AffineMatrix map(const std::function<ComplexMatrix(const ComplexMatrix&)>& f) const;
  ComplexMatrix evaluate(const RealVector& x) const;

  AffineMatrix& operator+=(const AffineMatrix& o);
  AffineMatrix& operator-=(const AffineMatrix& o);
  AffineMatrix& operator*=(double s);

 private:
  ComplexMatrix constant_;
  std::map<int, ComplexMatrix> terms_;
};

AffineMatrix operator+(AffineMatrix a, const AffineMatrix& b);
AffineMatrix operator-(AffineMatrix a, const AffineMatrix& b);
AffineMatrix operator+(AffineMatrix a, const ComplexMatrix& b);
AffineMatrix operator-(AffineMatrix a, const ComplexMatrix& b);
AffineMatrix operator-(const ComplexMatrix& a, const AffineMatrix& b);
AffineMatrix operator*(double s, AffineMatrix a);
AffineMatrix operator-(AffineMatrix a);

AffineMatrix tensor(const ComplexMatrix& a, const AffineMatrix& b);
AffineMatrix tensor(const AffineMatrix& a, const ComplexMatrix& b);
AffineMatrix partial_trace(const AffineMatrix& m, const std::vector<int>& dims, const std::vector<int>& keep);
AffineMatrix partial_transpose(const AffineMatrix& m, const std::vector<int>& dims, int sys);

// Linear-plus-PSD cone program over Hermitian matrix and real scalar variables.
class ConeProgram {
 public:
  // Hermitian d x d variable with d^2 real coordinates.
  AffineMatrix add_hermitian(int d, const std::string& name = "");
  // Real scalar variable as a 1 x 1 expression.
  AffineMatrix add_scalar(const std::string& name = "");
  // Scalar variable times the d x d identity.
  AffineMatrix scalar_identity(const AffineMatrix& scalar, int d) const;

  void add_psd(const AffineMatrix& m);
  // Hermitian equality m == 0.
  void add_zero(const AffineMatrix& m);
  // Minimizes Re Tr[objective].
  void minimize(const AffineMatrix& objective);

  int num_coords() const { return num_coords_; }
  // True for coordinates that carry an imaginary off-diagonal part.
  bool imag_coord(int k) const { return imag_[k]; }
  const std::vector<AffineMatrix>& psd() const { return psd_; }
  const std::vector<AffineMatrix>& zeros() const { return zeros_; }
  const AffineMatrix& objective() const { return objective_; }
  const std::vector<std::pair<std::string, AffineMatrix>>& variables() const { return vars_; }

 private:
  int num_coords_ = 0;
  std::vector<bool> imag_;
  std::vector<AffineMatrix> psd_;
  std::vector<AffineMatrix> zeros_;
  AffineMatrix objective_;
  std::vector<std::pair<std::string, AffineMatrix>> vars_;
};

enum class ConeStatus { optimal, infeasible, unbounded, max_iter };
const char* to_string(ConeStatus s);

struct SolverOptions {
  double feas_tol = 1e-8;
  double gap_tol = 1e-7;
  int max_iter = 200;
};

struct ConeSolution {
  ConeStatus status = ConeStatus::max_iter;
  double primal = 0.0;  // objective at the returned variables
  double dual = 0.0;    // dual bound
  double gap = 0.0;
  double infeasibility = 0.0;
  int iterations = 0;
  RealVector x;                        // coordinate values
  std::vector<ComplexMatrix> values;   // variable values, in creation order
  std::vector<ComplexMatrix> multipliers;  // dual matrices of the PSD constraints

  bool ok() const { return status == ConeStatus::optimal; }
};

// Dense primal-dual interior point method (HKM direction, Mehrotra
// predictor-corrector). Complex blocks use the real embedding
// [[Re, -Im], [Im, Re]]; equalities are eliminated through a null-space basis.
ConeSolution solve(const ConeProgram& p, const SolverOptions& opt = {});

}  // namespace gadc
