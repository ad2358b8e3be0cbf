// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>

#include "doctest.h"
#include "pasdfs/errors.hpp"
#include "pasdfs/fock.hpp"
#include "test_helpers.hpp"

namespace fk = pasdfs::fock;
using pasdfs::Complex;
using test_helpers::max_amp_diff;
using test_helpers::reference_coherent;

TEST_CASE("ladder matrices carry sqrt weights on the right diagonals") {
  const int dim = 6;
  const fk::DenseOperator a = fk::ladder_lower(dim);
  const fk::DenseOperator ad = fk::ladder_raise(dim);
  for (int w = 0; w + 1 < dim; ++w) {
    CHECK(a.at(w, w + 1).real() == doctest::Approx(std::sqrt(w + 1.0)).epsilon(1e-15));
    CHECK(ad.at(w + 1, w).real() == doctest::Approx(std::sqrt(w + 1.0)).epsilon(1e-15));
  }
  // Number operator on interior basis states.
  const fk::DenseOperator n_op = ad * a;
  for (int w = 0; w < dim; ++w)
    CHECK(n_op.at(w, w).real() == doctest::Approx(static_cast<double>(w)).epsilon(1e-15));
  // Commutator [a, a^dag] = 1 away from the truncation edge.
  fk::DenseOperator comm = a * ad;
  comm.add_scaled(n_op, Complex{-1.0, 0.0});
  for (int w = 0; w + 1 < dim; ++w)
    CHECK(std::abs(comm.at(w, w) - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("matrix_exp reproduces identities and inverses") {
  const int dim = 8;
  const fk::DenseOperator zero(dim);
  const fk::DenseOperator expz = fk::matrix_exp(zero);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      CHECK(std::abs(expz.at(i, j) - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) <
            1e-15);

  // Diagonal generator: exp acts entrywise on the diagonal.
  fk::DenseOperator diag(dim);
  for (int i = 0; i < dim; ++i) diag.at(i, i) = Complex{0.0, 0.3 * i};
  const fk::DenseOperator expd = fk::matrix_exp(diag);
  for (int i = 0; i < dim; ++i)
    CHECK(std::abs(expd.at(i, i) - std::polar(1.0, 0.3 * i)) < 1e-14);

  // exp(A) exp(-A) = 1 for a generic displacement generator.
  const Complex alpha{0.7, -0.4};
  fk::DenseOperator gen = fk::ladder_raise(dim);
  gen.scale(alpha);
  gen.add_scaled(fk::ladder_lower(dim), -std::conj(alpha));
  fk::DenseOperator neg = gen;
  neg.scale(Complex{-1.0, 0.0});
  const fk::DenseOperator prod = fk::matrix_exp(gen) * fk::matrix_exp(neg);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      CHECK(std::abs(prod.at(i, j) - (i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0})) <
            1e-12);
}

TEST_CASE("displace_oracle agrees with the coherent series and inverts") {
  const fk::FockAmplitudes vac = fk::fock_state(0);
  const Complex alpha{1.0, 0.0};
  const fk::FockAmplitudes coh = fk::displace_oracle(alpha, vac);
  CHECK(coh.truncation_eps < 1e-10);
  CHECK(max_amp_diff(coh, reference_coherent(alpha, coh.max_photon())) < 1e-12);

  const Complex beta{0.6, -0.8};
  const fk::FockAmplitudes psi = fk::displace_oracle(beta, fk::fock_state(2));
  const fk::FockAmplitudes back = fk::displace_oracle(-beta, psi);
  CHECK(max_amp_diff(back, fk::fock_state(2)) < 1e-10);

  // Zero displacement is the identity.
  const fk::FockAmplitudes same = fk::displace_oracle(Complex{0.0, 0.0}, fk::fock_state(3));
  CHECK(max_amp_diff(same, fk::fock_state(3)) < 1e-14);

  // A dimension far too small for the displaced support must be reported.
  CHECK_THROWS_AS(fk::displace_oracle(Complex{3.0, 0.0}, vac, 8), pasdfs::TruncationError);
}

TEST_CASE("apply_add_subtract_oracle walks the ladder pipeline") {
  const fk::FockAmplitudes one = fk::apply_add_subtract_oracle(fk::fock_state(0), 1, 0);
  CHECK(max_amp_diff(one, fk::fock_state(1)) < 1e-14);

  // Subtraction leaves a coherent state unchanged up to the global phase
  // alpha/|alpha| that renormalization strips.
  const Complex alpha{0.9, 0.4};
  const fk::FockAmplitudes coh = fk::displace_oracle(alpha, fk::fock_state(0));
  const fk::FockAmplitudes sub = fk::apply_add_subtract_oracle(coh, 0, 1);
  CHECK(test_helpers::max_amp_diff_aligned(sub, coh) < 1e-9);

  CHECK_THROWS_AS(fk::apply_add_subtract_oracle(fk::fock_state(0), 0, 1),
                  pasdfs::AnnihilationError);
  CHECK_THROWS_AS(fk::apply_add_subtract_oracle(fk::fock_state(1), 0, 2),
                  pasdfs::AnnihilationError);
}

TEST_CASE("expectation_oracle reproduces coherent and Fock moments") {
  const Complex alpha{0.8, -0.3};
  const fk::FockAmplitudes coh = fk::displace_oracle(alpha, fk::fock_state(0));
  CHECK(std::abs(fk::expectation_oracle(coh, 0, 1) - alpha) < 1e-10);
  CHECK(std::abs(fk::expectation_oracle(coh, 1, 0) - std::conj(alpha)) < 1e-10);
  CHECK(std::abs(fk::expectation_oracle(coh, 1, 1) - Complex{std::norm(alpha), 0.0}) <
        1e-10);

  const fk::FockAmplitudes two = fk::fock_state(2);
  CHECK(std::abs(fk::expectation_oracle(two, 1, 1) - Complex{2.0, 0.0}) < 1e-14);
  CHECK(std::abs(fk::expectation_oracle(two, 2, 2) - Complex{2.0, 0.0}) < 1e-14);
  CHECK(std::abs(fk::expectation_oracle(two, 0, 1)) < 1e-14);

  // Hermiticity of the moment pair.
  const fk::FockAmplitudes psi = fk::displace_oracle(Complex{0.5, 0.7}, fk::fock_state(1));
  for (int t = 0; t <= 3; ++t)
    for (int j = 0; j <= 3; ++j)
      CHECK(std::abs(fk::expectation_oracle(psi, t, j) -
                     std::conj(fk::expectation_oracle(psi, j, t))) < 1e-12);
}
