// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pasdfs/errors.hpp"

namespace pasdfs::fock {

namespace {

constexpr double kAnnihilationThreshold = 1e-14;
constexpr double kDisplaceNormTol = 1e-8;
constexpr int kMaxOracleDim = 4096;

std::vector<Complex> embed(const FockAmplitudes& psi, int dim) {
  std::vector<Complex> v(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
  for (int i = 0; i < psi.size(); ++i)
    v[static_cast<std::size_t>(psi.offset + i)] = psi.amps[static_cast<std::size_t>(i)];
  return v;
}

double norm_sq_of(std::span<const Complex> v) {
  long double acc = 0.0L;
  for (const Complex& c : v)
    acc += static_cast<long double>(c.real()) * c.real() +
           static_cast<long double>(c.imag()) * c.imag();
  return static_cast<double>(acc);
}

}  // namespace

Complex FockAmplitudes::at_photon(int w) const {
  const int i = w - offset;
  if (i < 0 || i >= size()) return Complex{0.0, 0.0};
  return amps[static_cast<std::size_t>(i)];
}

double FockAmplitudes::probability(int w) const { return std::norm(at_photon(w)); }

double FockAmplitudes::norm_sq() const { return norm_sq_of(amps); }

void FockAmplitudes::normalize() {
  const double n2 = norm_sq();
  if (n2 < kAnnihilationThreshold)
    throw AnnihilationError("normalize: squared norm " + std::to_string(n2) +
                            " below annihilation threshold");
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& c : amps) c *= inv;
}

FockAmplitudes fock_state(int n) {
  if (n < 0) throw std::invalid_argument("fock_state: negative photon number");
  return FockAmplitudes{n, {Complex{1.0, 0.0}}, 0.0};
}

DenseOperator::DenseOperator(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("DenseOperator: dimension must be >= 1");
  data_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

DenseOperator DenseOperator::identity(int dim) {
  DenseOperator id(dim);
  for (int i = 0; i < dim; ++i) id.at(i, i) = Complex{1.0, 0.0};
  return id;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("DenseOperator: dimension mismatch");
  DenseOperator out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (int j = 0; j < dim_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  }
  return out;
}

void DenseOperator::add_scaled(const DenseOperator& rhs, Complex s) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("DenseOperator: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * rhs.data_[i];
}

void DenseOperator::scale(Complex factor) {
  for (Complex& c : data_) c *= factor;
}

std::vector<Complex> DenseOperator::apply(std::span<const Complex> v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("DenseOperator: vector length mismatch");
  std::vector<Complex> out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    std::complex<long double> acc{0.0L, 0.0L};
    for (int j = 0; j < dim_; ++j) {
      const Complex t = at(i, j) * v[static_cast<std::size_t>(j)];
      acc += std::complex<long double>{t.real(), t.imag()};
    }
    out[static_cast<std::size_t>(i)] =
        Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

double DenseOperator::one_norm() const {
  double best = 0.0;
  for (int j = 0; j < dim_; ++j) {
    double col = 0.0;
    for (int i = 0; i < dim_; ++i) col += std::abs(at(i, j));
    if (col > best) best = col;
  }
  return best;
}

DenseOperator ladder_lower(int dim) {
  DenseOperator a(dim);
  for (int w = 0; w + 1 < dim; ++w)
    a.at(w, w + 1) = Complex{std::sqrt(static_cast<double>(w + 1)), 0.0};
  return a;
}

DenseOperator ladder_raise(int dim) {
  DenseOperator ad(dim);
  for (int w = 0; w + 1 < dim; ++w)
    ad.at(w + 1, w) = Complex{std::sqrt(static_cast<double>(w + 1)), 0.0};
  return ad;
}

DenseOperator matrix_exp(const DenseOperator& a, double series_tol) {
  const int dim = a.dim();
  const double nrm = a.one_norm();
  // Scale ||B|| below 1/2 so the factorial series converges like 2^-k.
  int squarings = 0;
  double scaled = nrm;
  while (scaled > 0.5 && squarings < 64) {
    scaled *= 0.5;
    ++squarings;
  }
  DenseOperator b = a;
  b.scale(Complex{std::ldexp(1.0, -squarings), 0.0});

  DenseOperator result = DenseOperator::identity(dim);
  DenseOperator term = DenseOperator::identity(dim);
  const double b_norm = b.one_norm();
  for (int k = 1; k <= 64; ++k) {
    term = term * b;
    term.scale(Complex{1.0 / static_cast<double>(k), 0.0});
    result.add_scaled(term, Complex{1.0, 0.0});
    const double term_norm = term.one_norm();
    const double ratio = b_norm / static_cast<double>(k + 1);
    if (ratio < 1.0 && term_norm * ratio / (1.0 - ratio) < series_tol) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

int suggested_displace_dim(Complex alpha, int max_photon_in) {
  const double a2 = std::norm(alpha);
  const double center = a2 + static_cast<double>(max_photon_in);
  const int dim =
      static_cast<int>(std::ceil(center + 6.0 * std::sqrt(center + 1.0) + 20.0));
  return std::min(dim, kMaxOracleDim);
}

FockAmplitudes displace_oracle(Complex alpha, const FockAmplitudes& psi, int dim) {
  if (dim < 2) throw std::invalid_argument("displace_oracle: dimension must be >= 2");
  if (psi.max_photon() >= dim)
    throw std::invalid_argument("displace_oracle: state does not fit in dimension");
  DenseOperator gen = ladder_raise(dim);
  gen.scale(alpha);
  gen.add_scaled(ladder_lower(dim), -std::conj(alpha));
  const DenseOperator d = matrix_exp(gen);
  std::vector<Complex> v = d.apply(embed(psi, dim));
  const double n2 = norm_sq_of(v);
  // The truncated generator is still skew-Hermitian, so its exponential is
  // exactly unitary and norm loss cannot flag truncation.  Weight trapped in
  // the top band of the basis is the observable symptom instead.
  double edge_band = 0.0;
  for (int w = std::max(0, dim - 3); w < dim; ++w)
    edge_band += std::norm(v[static_cast<std::size_t>(w)]);
  const double defect = edge_band + std::abs(1.0 - n2);
  if (defect > kDisplaceNormTol)
    throw TruncationError("displace_oracle: truncation defect " + std::to_string(defect) +
                              " at dimension " + std::to_string(dim),
                          std::min(2 * dim, kMaxOracleDim));
  FockAmplitudes out{0, std::move(v), defect};
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& c : out.amps) c *= inv;
  return out;
}

FockAmplitudes displace_oracle(Complex alpha, const FockAmplitudes& psi) {
  int dim = suggested_displace_dim(alpha, psi.max_photon());
  for (int attempt = 0;; ++attempt) {
    try {
      return displace_oracle(alpha, psi, dim);
    } catch (const TruncationError& err) {
      if (attempt >= 2 || err.suggested_dim() <= dim) throw;
      dim = err.suggested_dim();
    }
  }
}

FockAmplitudes apply_add_subtract_oracle(const FockAmplitudes& psi, int added,
                                         int subtracted) {
  if (added < 0 || subtracted < 0)
    throw std::invalid_argument("apply_add_subtract_oracle: negative ladder count");
  const int dim = psi.max_photon() + added + 1;
  std::vector<Complex> v = embed(psi, dim);
  const DenseOperator raise = ladder_raise(dim);
  const DenseOperator lower = ladder_lower(dim);
  for (int i = 0; i < added; ++i) v = raise.apply(v);
  for (int i = 0; i < subtracted; ++i) v = lower.apply(v);
  const double n2 = norm_sq_of(v);
  if (n2 < kAnnihilationThreshold)
    throw AnnihilationError(
        "apply_add_subtract_oracle: ladder pipeline annihilated the state");
  FockAmplitudes out{0, std::move(v), psi.truncation_eps};
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& c : out.amps) c *= inv;
  return out;
}

Complex expectation_oracle(const FockAmplitudes& psi, int raised, int lowered) {
  if (raised < 0 || lowered < 0 || raised > 10 || lowered > 10)
    throw std::invalid_argument("expectation_oracle: ladder powers must be in [0, 10]");
  const int dim = psi.max_photon() + 1;
  const DenseOperator lower = ladder_lower(dim);
  std::vector<Complex> bra = embed(psi, dim);
  std::vector<Complex> ket = bra;
  for (int i = 0; i < raised; ++i) bra = lower.apply(bra);
  for (int i = 0; i < lowered; ++i) ket = lower.apply(ket);
  std::complex<long double> acc{0.0L, 0.0L};
  for (int i = 0; i < dim; ++i) {
    const Complex t = std::conj(bra[static_cast<std::size_t>(i)]) *
                      ket[static_cast<std::size_t>(i)];
    acc += std::complex<long double>{t.real(), t.imag()};
  }
  return Complex{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace pasdfs::fock
