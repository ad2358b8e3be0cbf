// SPDX-License-Identifier: Apache-2.0
#include "pasdfs/witnesses.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pasdfs/errors.hpp"
#include "pasdfs/numerics.hpp"

namespace pasdfs::witnesses {

namespace {

using LComplex = std::complex<long double>;

constexpr double kDegradedTruncation = 1e-8;
constexpr double kQuietNan = std::numeric_limits<double>::quiet_NaN();

void validate_order(int l, int lo) {
  if (l < lo || l > kMaxWitnessOrder)
    throw std::domain_error("witness order must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxWitnessOrder) + "]");
}

// Residual imaginary parts of Hermitian expressions must sit at rounding
// level; anything larger signals a broken moment pipeline.
void assert_real(long double imag, long double real, const char* where) {
  if (std::abs(static_cast<double>(imag)) >
      1e-9 * (1.0 + std::abs(static_cast<double>(real))))
    throw std::runtime_error(std::string(where) + ": non-negligible imaginary residue");
}

WitnessReport make_report(Criterion c, int argument, double value,
                          const moments::StateMoments& m) {
  WitnessReport r;
  r.criterion = c;
  r.argument = argument;
  r.value = value;
  r.nonclassical = value < -kSignTolerance;
  r.truncation_warning = m.state().truncation_eps > kDegradedTruncation;
  return r;
}

LComplex to_lcomplex(Complex c) { return LComplex{c.real(), c.imag()}; }

long double det3(const LComplex a[3][3], long double* imag_residue) {
  const LComplex det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                       a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                       a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (imag_residue != nullptr) *imag_residue = det.imag();
  return det.real();
}

}  // namespace

std::string_view name(Criterion c) {
  switch (c) {
    case Criterion::antibunching: return "antibunching";
    case Criterion::hosps: return "hosps";
    case Criterion::hong_mandel: return "hong_mandel";
    case Criterion::klyshko: return "klyshko";
    case Criterion::agarwal_tara: return "agarwal_tara";
    case Criterion::vogel: return "vogel";
  }
  return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view text) {
  for (const Criterion c :
       {Criterion::antibunching, Criterion::hosps, Criterion::hong_mandel,
        Criterion::klyshko, Criterion::agarwal_tara, Criterion::vogel}) {
    if (text == name(c)) return c;
  }
  return std::nullopt;
}

WitnessReport antibunching(const moments::StateMoments& m, int l) {
  validate_order(l, 2);
  const long double mean = m.moment(1, 1).real();
  const long double high = m.moment(l, l).real();
  const long double value = high - std::pow(mean, static_cast<long double>(l));
  return make_report(Criterion::antibunching, l - 1, static_cast<double>(value), m);
}

WitnessReport hosps(const moments::StateMoments& m, int l) {
  validate_order(l, 2);
  using numerics::binomial;
  using numerics::stirling2;
  const long double mean = m.moment(1, 1).real();
  long double acc = 0.0L;
  for (int e = 1; e <= l; ++e) {
    const long double outer = static_cast<long double>(binomial(l, e)) *
                              (e % 2 != 0 ? -1.0L : 1.0L) *
                              std::pow(mean, static_cast<long double>(l - e));
    for (int f = 1; f <= e; ++f) {
      const long double excess = static_cast<long double>(m.moment(f, f).real()) -
                                 std::pow(mean, static_cast<long double>(f));
      acc += outer * static_cast<long double>(stirling2(e, f)) * excess;
    }
  }
  return make_report(Criterion::hosps, l - 1, static_cast<double>(acc), m);
}

double quadrature_central_moment(const moments::StateMoments& m, int l) {
  validate_order(l, 2);
  if (l % 2 != 0) throw std::domain_error("quadrature_central_moment: order must be even");
  const fock::FockAmplitudes& psi = m.state();
  const int dim = psi.max_photon() + l / 2 + 2;
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  fock::DenseOperator x = fock::ladder_lower(dim);
  x.add_scaled(fock::ladder_raise(dim), Complex{1.0, 0.0});
  x.scale(Complex{inv_rt2, 0.0});

  std::vector<Complex> base(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
  for (int i = 0; i < psi.size(); ++i)
    base[static_cast<std::size_t>(psi.offset + i)] = psi.amps[static_cast<std::size_t>(i)];

  const std::vector<Complex> xb = x.apply(base);
  LComplex mean{0.0L, 0.0L};
  for (int i = 0; i < dim; ++i)
    mean += to_lcomplex(std::conj(base[static_cast<std::size_t>(i)]) *
                        xb[static_cast<std::size_t>(i)]);
  assert_real(mean.imag(), mean.real(), "quadrature_central_moment");
  const Complex xbar{static_cast<double>(mean.real()), 0.0};

  // <(dX)^l> = || (X - <X>)^{l/2} psi ||^2 for even l.
  std::vector<Complex> u = base;
  for (int half = 0; half < l / 2; ++half) {
    std::vector<Complex> xu = x.apply(u);
    for (int i = 0; i < dim; ++i)
      xu[static_cast<std::size_t>(i)] -= xbar * u[static_cast<std::size_t>(i)];
    u = std::move(xu);
  }
  long double norm2 = 0.0L;
  for (const Complex& c : u)
    norm2 += static_cast<long double>(c.real()) * c.real() +
             static_cast<long double>(c.imag()) * c.imag();
  return static_cast<double>(norm2);
}

double quadrature_central_moment_expansion(const moments::StateMoments& m, int l) {
  validate_order(l, 2);
  if (l % 2 != 0) throw std::domain_error("quadrature_central_moment: order must be even");
  using numerics::binomial;
  using numerics::odd_double_factorial;
  const long double a_sum = 2.0L * static_cast<long double>(m.moment(0, 1).real());
  LComplex acc{0.0L, 0.0L};
  for (int r = 0; r <= l; ++r) {
    const long double prefix = static_cast<long double>(binomial(l, r)) *
                               (r % 2 != 0 ? -1.0L : 1.0L) *
                               std::pow(a_sum, static_cast<long double>(l - r));
    for (int i = 0; 2 * i <= r; ++i) {
      const long double pair_weight = static_cast<long double>(binomial(r, 2 * i)) *
                                      static_cast<long double>(odd_double_factorial(i));
      const int rest = r - 2 * i;
      LComplex ordered{0.0L, 0.0L};
      for (int k = 0; k <= rest; ++k)
        ordered += static_cast<long double>(binomial(rest, k)) *
                   to_lcomplex(m.moment(k, rest - k));
      acc += prefix * pair_weight * ordered;
    }
  }
  assert_real(acc.imag(), acc.real(), "quadrature_central_moment_expansion");
  const long double scale = std::pow(2.0L, -0.5L * static_cast<long double>(l));
  return static_cast<double>(acc.real() * scale);
}

WitnessReport hong_mandel(const moments::StateMoments& m, int l) {
  validate_order(l, 2);
  if (l % 2 != 0) throw std::domain_error("hong_mandel: order must be even");
  const double central = quadrature_central_moment(m, l);
  const double baseline = numerics::pochhammer_half(l);
  const double value = (central - baseline) / baseline;
  return make_report(Criterion::hong_mandel, l, value, m);
}

WitnessReport klyshko(const moments::StateMoments& m, int z) {
  if (z < 0) throw std::domain_error("klyshko: photon number must be >= 0");
  const fock::FockAmplitudes& psi = m.state();
  const long double pz = psi.probability(z);
  const long double pz1 = psi.probability(z + 1);
  const long double pz2 = psi.probability(z + 2);
  const long double value =
      static_cast<long double>(z + 2) * pz * pz2 - static_cast<long double>(z + 1) * pz1 * pz1;
  return make_report(Criterion::klyshko, z, static_cast<double>(value), m);
}

WitnessReport agarwal_tara(const moments::StateMoments& m) {
  // Factorial moments through the moment source; raw photon-number moments
  // exactly from the stored distribution.
  long double fm[5] = {1.0L, 0.0L, 0.0L, 0.0L, 0.0L};
  for (int i = 1; i <= 4; ++i) fm[i] = m.moment(i, i).real();
  long double mu[5] = {1.0L, 0.0L, 0.0L, 0.0L, 0.0L};
  const fock::FockAmplitudes& psi = m.state();
  for (int i = 0; i < psi.size(); ++i) {
    const int w = psi.offset + i;
    const Complex c = psi.amps[static_cast<std::size_t>(i)];
    const long double p = static_cast<long double>(c.real()) * c.real() +
                          static_cast<long double>(c.imag()) * c.imag();
    long double wp = 1.0L;
    for (int j = 1; j <= 4; ++j) {
      wp *= static_cast<long double>(w);
      mu[j] += wp * p;
    }
  }

  const auto fill = [](const long double v[5], LComplex out[3][3]) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out[r][c] = LComplex{v[r + c], 0.0L};
  };
  LComplex mat_m[3][3], mat_mu[3][3];
  fill(fm, mat_m);
  fill(mu, mat_mu);
  const long double det_m = det3(mat_m, nullptr);
  const long double det_mu = det3(mat_mu, nullptr);

  const long double denom = det_mu - det_m;
  const long double scale =
      std::max({std::abs(det_m), std::abs(det_mu), static_cast<long double>(1e-300)});
  if (std::abs(denom) < 1e-12L * scale) {
    WitnessReport r = make_report(Criterion::agarwal_tara, 0, kQuietNan, m);
    r.nonclassical = false;
    r.denominator_small = true;
    return r;
  }
  return make_report(Criterion::agarwal_tara, 0, static_cast<double>(det_m / denom), m);
}

WitnessReport vogel(const moments::StateMoments& m) {
  const LComplex a = to_lcomplex(m.moment(0, 1));
  const LComplex ad = to_lcomplex(m.moment(1, 0));
  const LComplex nbar = to_lcomplex(m.moment(1, 1));
  const LComplex a2 = to_lcomplex(m.moment(0, 2));
  const LComplex ad2 = to_lcomplex(m.moment(2, 0));
  const LComplex mat[3][3] = {
      {LComplex{1.0L, 0.0L}, a, ad},
      {ad, nbar, ad2},
      {a, a2, nbar},
  };
  long double imag = 0.0L;
  const long double det = det3(mat, &imag);
  assert_real(imag, det, "vogel");
  return make_report(Criterion::vogel, 0, static_cast<double>(det), m);
}

}  // namespace pasdfs::witnesses
