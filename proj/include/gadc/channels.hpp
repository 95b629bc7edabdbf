#pragma once

#include <vector>

#include "gadc/mathcore.hpp"

namespace gadc {

// CPTP map stored as Kraus operators, each dout x din.
class QuantumChannel {
 public:
  QuantumChannel(int din, int dout, std::vector<ComplexMatrix> kraus);

  int din() const { return din_; }
  int dout() const { return dout_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  ComplexMatrix operator()(const ComplexMatrix& rho) const;

 private:
  int din_;
  int dout_;
  std::vector<ComplexMatrix> kraus_;
};

// Choi state on A (input copy) x B (output), unit trace.
struct ChoiMatrix {
  int din = 0;
  int dout = 0;
  ComplexMatrix state;

  ComplexMatrix gamma() const { return static_cast<double>(din) * state; }
  static ChoiMatrix from_gamma(int din, int dout, const ComplexMatrix& gamma);
};

ChoiMatrix choi(const QuantumChannel& ch);

// din -> dout*denv isometry V = sum_k K_k (x) |k>_E, output ordered B (x) E.
ComplexMatrix isometric_extension(const QuantumChannel& ch);
QuantumChannel complementary(const QuantumChannel& ch);

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);
QuantumChannel channel_from_choi(const ChoiMatrix& c);
QuantumChannel pauli_twirl(const QuantumChannel& ch);
ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho);

QuantumChannel identity_channel(int d);
QuantumChannel unitary_channel(const ComplexMatrix& u);
// Partial trace as a channel on the tensor product of dims, keeping `keep`.
QuantumChannel partial_trace_channel(const std::vector<int>& dims, const std::vector<int>& keep);

// Largest entrywise deviation between two Choi states.
double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);
double choi_distance(const QuantumChannel& a, const QuantumChannel& b);

// Phi(X) = Tr_A[(X^T (x) I_B) J] for a Choi matrix J on A (x) B.
ComplexMatrix apply_choi(const ComplexMatrix& j, int din, int dout, const ComplexMatrix& x);

// Choi matrix of D o N given J(D) on B (x) C and Gamma(N) on A (x) B. Linear
// in J(D), so it can be applied to SDP variables.
ComplexMatrix compose_choi(const ComplexMatrix& j_second, int db, int dc,
                           const ComplexMatrix& gamma_first, int da);

}  // namespace gadc
