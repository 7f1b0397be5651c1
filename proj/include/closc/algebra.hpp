#pragma once

/**
 * @file algebra.hpp
 * @brief C_lambda-extended oscillator algebras as generalized deformed
 *        oscillator algebras, in exact rational arithmetic.
 *
 * The algebra A^(lambda) is generated by {I, a, a+, N, T} with T the
 * generator of a cyclic group of order lambda and
 *
 *     [a, a+] = I + sum_mu alpha_mu P_mu,          sum_mu alpha_mu = 0,
 *
 * where P_mu projects on the Fock sector {|k*lambda + mu>}. Realized with
 * T = exp(2*pi*i*N/lambda) this is a GDOA with structure function
 *
 *     F(N) = N + sum_mu beta_mu P_mu,   beta_mu = alpha_0 + ... + alpha_{mu-1},
 *
 * so a+a = F(N), aa+ = F(N+1), and the Fock representation exists iff
 * F(mu) > 0 for mu = 1..lambda-1.
 *
 * The equivalent parametrization [a, a+] = I + sum_{mu>=1} kappa_mu T^mu
 * (kappa_mu* = kappa_{lambda-mu}) is related by a discrete Fourier map whose
 * phases are exact over Q(sqrt(3)) for lambda in {2, 3, 4, 6}; those cases
 * are computed symbolically, all others in extended floating point.
 */

#include "closc/errors.hpp"
#include "closc/rational.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace closc {

// ---------------------------------------------------------------------------
// Exact numbers of the form a + b*sqrt(3)
// ---------------------------------------------------------------------------

// Closed under +, -, *; enough for the root-of-unity maps at
// lambda in {2, 3, 4, 6}. Zero test is exact: sqrt(3) is irrational, so
// a + b*sqrt(3) = 0 with rational a, b forces a = b = 0.
struct QuadRational {
  Rational a{};  // rational part
  Rational b{};  // coefficient of sqrt(3)

  QuadRational() = default;
  QuadRational(Rational ra) : a(std::move(ra)) {}  // NOLINT(google-explicit-constructor)
  QuadRational(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  double value() const {
    return to_double(a) + to_double(b) * std::sqrt(3.0);
  }

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadRational operator-(const QuadRational& x, const QuadRational& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadRational operator-(const QuadRational& x) { return {-x.a, -x.b}; }
  friend QuadRational operator*(const QuadRational& x, const QuadRational& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadRational& x, const QuadRational& y) {
    return x.a == y.a && x.b == y.b;
  }
};

struct QuadComplex {
  QuadRational re{};
  QuadRational im{};

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  QuadComplex conj() const { return {re, -im}; }
  std::complex<double> value() const { return {re.value(), im.value()}; }

  friend QuadComplex operator+(const QuadComplex& x, const QuadComplex& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend QuadComplex operator*(const QuadComplex& x, const QuadComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const QuadComplex& x, const QuadComplex& y) {
    return x.re == y.re && x.im == y.im;
  }
};

// e^{2*pi*i*k/lambda} as an exact QuadComplex, when representable.
inline std::optional<QuadComplex> exact_unit_phase(int lambda, long k) {
  if (lambda <= 0) return std::nullopt;
  long r = k % lambda;
  if (r < 0) r += lambda;
  const Rational half(1, 2);
  switch (lambda) {
    case 1:
      return QuadComplex{{1}, {0}};
    case 2:
      return r == 0 ? QuadComplex{{1}, {0}} : QuadComplex{{-1}, {0}};
    case 3: {
      if (r == 0) return QuadComplex{{1}, {0}};
      const QuadRational cos{-half, 0};
      const QuadRational sin{0, r == 1 ? half : -half};
      return QuadComplex{cos, sin};
    }
    case 4: {
      switch (r) {
        case 0: return QuadComplex{{1}, {0}};
        case 1: return QuadComplex{{0}, {1}};
        case 2: return QuadComplex{{-1}, {0}};
        default: return QuadComplex{{0}, {-1}};
      }
    }
    case 6: {
      static const int cos_num[6] = {2, 1, -1, -2, -1, 1};
      static const int sin_num[6] = {0, 1, 1, 0, -1, -1};
      return QuadComplex{{Rational(cos_num[r], 2), 0},
                         {0, Rational(sin_num[r], 2)}};
    }
    default:
      return std::nullopt;
  }
}

inline bool phase_resolvable(int lambda) {
  return lambda == 2 || lambda == 3 || lambda == 4 || lambda == 6;
}

// ---------------------------------------------------------------------------
// Parameter records
// ---------------------------------------------------------------------------

/// Algebra parameters (lambda, alpha_0..alpha_{lambda-1}) with the zero-sum
/// constraint built in: construction takes the lambda-1 independent values
/// and derives alpha_{lambda-1} = -(alpha_0 + ... + alpha_{lambda-2}).
class AlgebraParams {
 public:
  AlgebraParams(int lambda, std::vector<Rational> independent_alpha)
      : lambda_(lambda), alpha_(std::move(independent_alpha)) {
    if (lambda_ < 2) throw std::invalid_argument("lambda must be >= 2");
    if (alpha_.size() != static_cast<std::size_t>(lambda_ - 1))
      throw std::invalid_argument("expected lambda-1 independent alpha values");
    Rational last = 0;
    for (const auto& a : alpha_) last -= a;
    alpha_.push_back(last);
  }

  int lambda() const { return lambda_; }

  /// All lambda values, alpha_{lambda-1} included; sums to zero exactly.
  const std::vector<Rational>& alpha() const { return alpha_; }

  /// alpha_mu with cyclic index convention (alpha_{mu+lambda} = alpha_mu).
  const Rational& alpha_mod(long mu) const {
    long r = mu % lambda_;
    if (r < 0) r += lambda_;
    return alpha_[static_cast<std::size_t>(r)];
  }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  int lambda_;
  std::vector<Rational> alpha_;
};

/// T-form parameters kappa_1..kappa_{lambda-1}, kept exactly over Q(sqrt(3))
/// and restricted by kappa_mu* = kappa_{lambda-mu}.
class KappaParams {
 public:
  KappaParams(int lambda, std::vector<QuadComplex> kappa)
      : lambda_(lambda), kappa_(std::move(kappa)) {
    if (lambda_ < 2) throw std::invalid_argument("lambda must be >= 2");
    if (kappa_.size() != static_cast<std::size_t>(lambda_ - 1))
      throw std::invalid_argument("expected lambda-1 kappa values");
    for (int mu = 1; mu < lambda_; ++mu) {
      if (!(at(mu).conj() == at(lambda_ - mu)))
        throw ConjugacyViolation(
            "kappa_" + std::to_string(mu) +
            "* != kappa_" + std::to_string(lambda_ - mu));
    }
  }

  int lambda() const { return lambda_; }

  /// kappa_mu for mu in [1, lambda-1].
  const QuadComplex& at(int mu) const {
    return kappa_.at(static_cast<std::size_t>(mu - 1));
  }

  const std::vector<QuadComplex>& kappa() const { return kappa_; }

  friend bool operator==(const KappaParams&, const KappaParams&) = default;

 private:
  int lambda_;
  std::vector<QuadComplex> kappa_;
};

/// Quantities derived from alpha: cumulative sums beta, sector shifts gamma,
/// and the scaled offsets beta_bar entering the gamma-function norm formula.
struct DerivedParams {
  std::vector<Rational> beta;      // beta_mu = sum_{nu<mu} alpha_nu, beta_0 = 0
  std::vector<Rational> gamma;     // gamma_mu = beta_mu + alpha_mu/2
  std::vector<Rational> beta_bar;  // (beta_nu + nu) / lambda

  static DerivedParams from(const AlgebraParams& p) {
    const int lambda = p.lambda();
    DerivedParams d;
    d.beta.resize(lambda);
    d.gamma.resize(lambda);
    d.beta_bar.resize(lambda);
    Rational acc = 0;
    for (int mu = 0; mu < lambda; ++mu) {
      d.beta[mu] = acc;
      d.gamma[mu] = acc + p.alpha()[mu] / 2;
      d.beta_bar[mu] = (acc + mu) / lambda;
      acc += p.alpha()[mu];
    }
    return d;
  }
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// F(n) = n + beta_{n mod lambda}; satisfies F(0) = 0 and
/// F(n+1) - F(n) = 1 + alpha_{n mod lambda}.
inline Rational structure_function(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("structure_function: n must be >= 0");
  Rational beta = 0;
  const long r = n % p.lambda();
  for (long nu = 0; nu < r; ++nu) beta += p.alpha()[nu];
  return Rational(n) + beta;
}

struct FockExistence {
  bool exists = true;
  std::vector<int> violated_mu;  // each mu in [1, lambda-1] with F(mu) <= 0

  explicit operator bool() const { return exists; }
};

/// Representation existence test: F(mu) > 0 for mu = 1..lambda-1,
/// equivalently sum_{nu<mu} alpha_nu > -mu. The boundary F(mu) = 0 is
/// rejected (strict positivity).
inline FockExistence fock_space_exists(const AlgebraParams& p) {
  FockExistence result;
  for (int mu = 1; mu < p.lambda(); ++mu) {
    if (structure_function(p, mu) <= 0) {
      result.exists = false;
      result.violated_mu.push_back(mu);
    }
  }
  return result;
}

namespace detail {
inline void require_fock(const AlgebraParams& p, const char* where) {
  const auto existence = fock_space_exists(p);
  if (!existence.exists) {
    std::string msg = std::string(where) + ": no Fock representation; F(mu) <= 0 for mu in {";
    for (std::size_t i = 0; i < existence.violated_mu.size(); ++i) {
      if (i) msg += ", ";
      msg += std::to_string(existence.violated_mu[i]);
    }
    msg += "}";
    throw RepresentationMissing(msg);
  }
}
}  // namespace detail

/// Vacuum-to-n norm as the exact product prod_{i=1..n} F(i); 1 for n = 0.
inline Rational norm_product(const AlgebraParams& p, long n) {
  detail::require_fock(p, "norm_product");
  if (n < 0) throw std::invalid_argument("norm_product: n must be >= 0");
  Rational acc = 1;
  for (long i = 1; i <= n; ++i) acc *= structure_function(p, i);
  return acc;
}

/// Same norm through the gamma-function form
///   N_{k*lambda+mu} = lambda^n * prod_{nu<=mu} Gamma(k+1+beta_bar_nu)
///                   * prod_{nu>mu} Gamma(k+beta_bar_nu)
///                   / prod_{nu>=1} Gamma(beta_bar_nu),
/// evaluated via lgamma. Throws GammaPole when any Gamma argument is a
/// nonpositive integer (boundary or degenerate parameters).
inline double norm_gamma(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("norm_gamma: n must be >= 0");
  const auto d = DerivedParams::from(p);
  const int lambda = p.lambda();
  const long k = n / lambda;
  const int mu = static_cast<int>(n % lambda);

  auto checked_lgamma = [](const Rational& arg) -> double {
    if (arg <= 0 && boost::multiprecision::denominator(arg) == 1)
      throw GammaPole("gamma function pole at " + format_rational(arg));
    return std::lgamma(to_double(arg));
  };

  double log_acc = static_cast<double>(n) * std::log(static_cast<double>(lambda));
  for (int nu = 0; nu <= mu; ++nu)
    log_acc += checked_lgamma(Rational(k + 1) + d.beta_bar[nu]);
  for (int nu = mu + 1; nu < lambda; ++nu)
    log_acc += checked_lgamma(Rational(k) + d.beta_bar[nu]);
  for (int nu = 1; nu < lambda; ++nu)
    log_acc -= checked_lgamma(d.beta_bar[nu]);
  return std::exp(log_acc);
}

/// Oscillator level E_n = n + gamma_{n mod lambda} + 1/2 (units hbar*omega=1).
inline Rational energy_level(const AlgebraParams& p, long n) {
  if (n < 0) throw std::invalid_argument("energy_level: n must be >= 0");
  const auto d = DerivedParams::from(p);
  return Rational(n) + d.gamma[static_cast<std::size_t>(n % p.lambda())] +
         Rational(1, 2);
}

namespace detail {

inline Rational rationalize(double x) {
  if (!std::isfinite(x)) throw NonRealAlpha("non-finite value in parameter map");
  return Rational(x);  // exact binary expansion
}

}  // namespace detail

/// alpha_mu = sum_{nu=1..lambda-1} e^{2*pi*i*mu*nu/lambda} kappa_nu.
/// Exact over Q(sqrt(3)) for lambda in {2, 3, 4, 6}; extended floats
/// otherwise with |Im alpha| certified below 1e-12.
inline AlgebraParams from_kappa(const KappaParams& k) {
  const int lambda = k.lambda();
  std::vector<Rational> alpha(static_cast<std::size_t>(lambda));

  if (phase_resolvable(lambda)) {
    for (int mu = 0; mu < lambda; ++mu) {
      QuadComplex acc{};
      for (int nu = 1; nu < lambda; ++nu)
        acc = acc + *exact_unit_phase(lambda, static_cast<long>(mu) * nu) * k.at(nu);
      if (!acc.im.is_zero())
        throw NonRealAlpha("alpha_" + std::to_string(mu) +
                           " has a nonzero imaginary part");
      alpha[mu] = acc.re.is_rational() ? acc.re.a
                                       : detail::rationalize(acc.re.value());
    }
  } else {
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (int mu = 0; mu < lambda; ++mu) {
      long double re = 0.0L, im = 0.0L;
      for (int nu = 1; nu < lambda; ++nu) {
        const long r = (static_cast<long>(mu) * nu) % lambda;
        const long double c = std::cos(two_pi * r / lambda);
        const long double s = std::sin(two_pi * r / lambda);
        const std::complex<double> kv = k.at(nu).value();
        re += c * kv.real() - s * kv.imag();
        im += c * kv.imag() + s * kv.real();
      }
      if (std::abs(static_cast<double>(im)) >= 1e-12)
        throw NonRealAlpha("alpha_" + std::to_string(mu) +
                           " has imaginary residue above 1e-12");
      alpha[mu] = detail::rationalize(static_cast<double>(re));
    }
  }

  alpha.pop_back();  // last value re-derived from the zero-sum constraint
  return AlgebraParams(lambda, std::move(alpha));
}

/// Inverse map kappa_nu = (1/lambda) sum_mu e^{-2*pi*i*mu*nu/lambda} alpha_mu.
inline KappaParams to_kappa(const AlgebraParams& p) {
  const int lambda = p.lambda();
  std::vector<QuadComplex> kappa(static_cast<std::size_t>(lambda - 1));

  if (phase_resolvable(lambda)) {
    const QuadRational inv_lambda{Rational(1, lambda), 0};
    for (int nu = 1; nu < lambda; ++nu) {
      QuadComplex acc{};
      for (int mu = 0; mu < lambda; ++mu) {
        const QuadComplex phase =
            *exact_unit_phase(lambda, -static_cast<long>(mu) * nu);
        acc = acc + phase * QuadComplex{{p.alpha()[mu], 0}, {}};
      }
      kappa[nu - 1] = QuadComplex{inv_lambda, {}} * acc;
    }
  } else {
    constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (int nu = 1; nu <= lambda / 2; ++nu) {
      long double re = 0.0L, im = 0.0L;
      for (int mu = 0; mu < lambda; ++mu) {
        long r = (-static_cast<long>(mu) * nu) % lambda;
        if (r < 0) r += lambda;
        const long double av = static_cast<long double>(to_double(p.alpha()[mu]));
        re += std::cos(two_pi * r / lambda) * av;
        im += std::sin(two_pi * r / lambda) * av;
      }
      QuadComplex value{{detail::rationalize(static_cast<double>(re / lambda)), 0},
                        {detail::rationalize(static_cast<double>(im / lambda)), 0}};
      if (2 * nu == lambda) value.im = QuadRational{};  // kappa_{lambda/2} is real
      kappa[nu - 1] = value;
      if (nu != lambda - nu) kappa[lambda - nu - 1] = value.conj();
    }
  }

  return KappaParams(lambda, std::move(kappa));
}

}  // namespace closc
