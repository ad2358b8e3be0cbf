// SPDX-License-Identifier: Apache-2.0
#pragma once

// Truncated Fock-basis state container plus a deliberately literal dense
// operator toolbox: ladder matrices, a series matrix exponential, and the
// brute-force displacement / ladder-pipeline / expectation oracles used to
// cross-check every closed form in the library.

#include <span>
#include <vector>

#include "pasdfs/types.hpp"

namespace pasdfs::fock {

// Contiguous span of Fock amplitudes starting at photon number `offset`.
struct FockAmplitudes {
  int offset = 0;
  std::vector<Complex> amps;
  // Bound on the discarded tail weight accepted when the vector was built.
  double truncation_eps = 0.0;

  int size() const noexcept { return static_cast<int>(amps.size()); }
  int max_photon() const noexcept { return offset + size() - 1; }

  // Amplitude of |w>; exact zero outside the stored window.
  Complex at_photon(int w) const;
  // |<w|psi>|^2; exact zero outside the stored window.
  double probability(int w) const;

  double norm_sq() const;
  // Scales to unit norm; throws AnnihilationError when the norm is below
  // the annihilation threshold 1e-14.
  void normalize();
};

// |n> as a single stored amplitude.
FockAmplitudes fock_state(int n);

// Dense complex matrix in the number basis spanning photon numbers
// [0, dim).  Row-major; deliberately naive arithmetic.
class DenseOperator {
 public:
  explicit DenseOperator(int dim);
  static DenseOperator identity(int dim);

  int dim() const noexcept { return dim_; }
  Complex& at(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * dim_ + c];
  }

  DenseOperator operator*(const DenseOperator& rhs) const;
  // this += scale * rhs
  void add_scaled(const DenseOperator& rhs, Complex scale);
  void scale(Complex factor);
  std::vector<Complex> apply(std::span<const Complex> v) const;
  // Maximum absolute column sum.
  double one_norm() const;

 private:
  int dim_;
  std::vector<Complex> data_;
};

// Annihilation operator a with <w|a|w+1> = sqrt(w+1).
DenseOperator ladder_lower(int dim);
// Creation operator a^dag, the transpose of ladder_lower.
DenseOperator ladder_raise(int dim);

// exp(A) by scaling and squaring with a Taylor series whose remainder is
// bounded by the geometric tail ||B||^k / k! * 1/(1 - ||B||/(k+1)).
DenseOperator matrix_exp(const DenseOperator& a, double series_tol = 5e-17);

// Dense dimension large enough that displacing a state supported up to
// max_photon_in loses negligible norm.
int suggested_displace_dim(Complex alpha, int max_photon_in);

// D(alpha)|psi> by dense matrix exponential in a basis of size dim.  The
// result is renormalized; the measured norm defect is stored in
// truncation_eps.  A defect above 1e-8 throws TruncationError carrying a
// suggested doubled dimension.
FockAmplitudes displace_oracle(Complex alpha, const FockAmplitudes& psi, int dim);

// As above with the dimension chosen by suggested_displace_dim, doubling it
// on truncation failure at most twice before rethrowing.
FockAmplitudes displace_oracle(Complex alpha, const FockAmplitudes& psi);

// a^subtracted a^dag^added |psi> by repeated dense ladder application,
// renormalized.  Throws AnnihilationError when the pipeline annihilates the
// state (squared norm below 1e-14).
FockAmplitudes apply_add_subtract_oracle(const FockAmplitudes& psi, int added,
                                         int subtracted);

// <a^dag^raised a^lowered> evaluated as the inner product
// <a^raised psi | a^lowered psi> with dense ladder matrices.
Complex expectation_oracle(const FockAmplitudes& psi, int raised, int lowered);

}  // namespace pasdfs::fock
