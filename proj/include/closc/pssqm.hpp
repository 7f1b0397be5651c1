#pragma once

/**
 * @file pssqm.hpp
 * @brief Order-2 parasupersymmetric quantum mechanics built on the
 *        C_3-extended oscillator: parasupercharges, Hamiltonians, and
 *        machine verification of the closure relations.
 *
 * A parasupercharge family indexed by mu in {0, 1, 2},
 *
 *   Q_mu = a+ (eta_{mu+1} P_{mu+1} + e^{i*phi} eta_{mu+2} P_{mu+2}),
 *   H_mu = N + (2*gamma_{mu+2} + r_{mu+2} - 1)/2 + 2 P_{mu+1} + P_{mu+2},
 *
 * satisfies Q^3 = 0 (Q^2 != 0) and [H, Q] = 0 structurally, and the
 * trilinear closure
 *
 *   u Q^2 Q+ + v Q Q+ Q + w Q+ Q^2 = 4 Q H
 *
 * for two coefficient branches:
 *   sol1: u = v = w = 4/(|eta_{mu+2}|^2 + |eta_{mu+1}|^2), any algebra,
 *         provided r_{mu+2} = (1 + alpha_{mu+2}) *
 *         (|eta_{mu+2}|^2 - |eta_{mu+1}|^2)/(|eta_{mu+2}|^2 + |eta_{mu+1}|^2);
 *   sol2: free u with v = (4 - |eta_{mu+1}|^2 u)/|eta_{mu+2}|^2 and
 *         w = (4(|eta_{mu+2}|^2 - |eta_{mu+1}|^2) + |eta_{mu+1}|^4 u) /
 *         |eta_{mu+2}|^4, existing only when 1 + alpha_{mu+2} = r_{mu+2} = 0.
 *
 * u = v = w = 1 under the normalization |eta_{mu+2}|^2 = 4 - |eta_{mu+1}|^2
 * is the Rubakov-Spiridonov relation; u = w = -2, v = 4 is Beckers-Debergh,
 * equivalent to [Q, [Q+, Q]] = 2 Q H.
 */

#include "closc/fock.hpp"

#include <array>
#include <complex>
#include <optional>
#include <utility>

namespace closc {

enum class SusyStatus { unbroken, broken };

inline const char* susy_status_name(SusyStatus s) {
  return s == SusyStatus::unbroken ? "unbroken" : "broken";
}

/// Canonical configuration: eta_{mu+2}^2 is implied as 4 - eta_{mu+1}^2 and
/// r_{mu+2} = (1 + alpha_{mu+2}) (1 - eta_{mu+1}^2/2). Eta is carried by its
/// square so that sqrt(2) and rational choices stay exact in H.
struct PssqmConfig {
  AlgebraParams params;
  int mu = 0;
  Rational eta1_sq = 2;  // eta_{mu+1}^2, in (0, 4)
  double phi = 0.0;      // relative phase, radians
  int dim = 16;
};

struct PssqmSystem {
  AlgebraParams params;
  int mu = 0;
  Rational eta1_sq;
  Rational eta2_sq;
  double phi = 0.0;
  int dim = 0;

  FockRep fock;
  Eigen::MatrixXcd q_mat;          // parasupercharge Q_mu
  Eigen::MatrixXd h_mat;           // PSSQM Hamiltonian (diagonal)
  std::vector<Rational> h_exact;   // exact diagonal of h_mat
  std::array<Rational, 3> r;       // sector shifts r_0, r_1, r_2
  Rational ground_energy;          // min of h_exact
  SusyStatus susy = SusyStatus::broken;
};

/// General constructor with free (eta_{mu+1}, eta_{mu+2}, r_{mu+2}); the
/// sector shifts close via r_mu = -2 + alpha_{mu+1} + r_{mu+2} and
/// r_{mu+1} = 2 - alpha_mu + r_{mu+2}.
inline PssqmSystem build_charge_general(const AlgebraParams& p, int mu,
                                        const Rational& eta1_sq,
                                        const Rational& eta2_sq,
                                        const Rational& r_mu2, double phi,
                                        int dim) {
  if (p.lambda() != 3)
    throw UnsupportedLambda("build_charge_general: requires lambda = 3");
  if (mu < 0 || mu > 2)
    throw std::invalid_argument("build_charge_general: mu must be in {0,1,2}");
  if (eta1_sq <= 0 || eta2_sq <= 0)
    throw EtaOutOfRange("build_charge_general: eta coefficients must be nonzero");
  if (dim < 8)
    throw DimensionTooSmall("build_charge_general: dim must be >= 8");

  FockRep fock = build_fock(p, dim);

  PssqmSystem s{p,  mu, eta1_sq, eta2_sq, phi, dim, std::move(fock),
                {}, {}, {},      {},      {},  SusyStatus::broken};

  s.r[mu % 3] = -2 + p.alpha_mod(mu + 1) + r_mu2;
  s.r[(mu + 1) % 3] = 2 - p.alpha_mod(mu) + r_mu2;
  s.r[(mu + 2) % 3] = r_mu2;

  const auto d = DerivedParams::from(p);
  const Rational shift = d.gamma[(mu + 2) % 3] + (r_mu2 - 1) / 2;
  s.h_exact.reserve(dim);
  for (int n = 0; n < dim; ++n) {
    Rational value = Rational(n) + shift;
    if (n % 3 == (mu + 1) % 3) value += 2;
    if (n % 3 == (mu + 2) % 3) value += 1;
    s.h_exact.push_back(std::move(value));
  }
  s.ground_energy = *std::min_element(s.h_exact.begin(), s.h_exact.end());
  s.susy = (mu == 0) ? SusyStatus::unbroken : SusyStatus::broken;

  s.h_mat = Eigen::MatrixXd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) s.h_mat(n, n) = to_double(s.h_exact[n]);

  const double eta1 = std::sqrt(to_double(eta1_sq));
  const double eta2 = std::sqrt(to_double(eta2_sq));
  const std::complex<double> phase(std::cos(phi), std::sin(phi));
  Eigen::MatrixXcd mixer =
      eta1 * s.fock.p_mats[(mu + 1) % 3].cast<std::complex<double>>() +
      (phase * eta2) * s.fock.p_mats[(mu + 2) % 3].cast<std::complex<double>>();
  s.q_mat = s.fock.adag_mat.cast<std::complex<double>>() * mixer;
  return s;
}

/// Canonical Rubakov-Spiridonov-normalized charge: eta_{mu+2}^2 implied as
/// 4 - eta_{mu+1}^2, r_{mu+2} = (1 + alpha_{mu+2})(1 - eta_{mu+1}^2/2).
inline PssqmSystem build_charge(const PssqmConfig& c) {
  if (c.eta1_sq <= 0 || c.eta1_sq >= 4)
    throw EtaOutOfRange("build_charge: eta_{mu+1} must lie in (0, 2)");
  const Rational eta2_sq = 4 - c.eta1_sq;
  const Rational r_mu2 =
      (1 + c.params.alpha_mod(c.mu + 2)) * (1 - c.eta1_sq / 2);
  return build_charge_general(c.params, c.mu, c.eta1_sq, eta2_sq, r_mu2, c.phi,
                              c.dim);
}

namespace detail {

// Trilinear products reach three ladder steps; elements with row/column
// index <= dim-4 are unaffected by the truncation.
inline double pssqm_windowed(const Eigen::MatrixXcd& m, int dim) {
  return m.topLeftCorner(dim - 3, dim - 3).cwiseAbs().maxCoeff();
}

}  // namespace detail

struct Q2Witness {
  long row = 0;
  long col = 0;
  double magnitude = 0.0;
};

struct PssqmReport {
  double tol = 0.0;
  double q3_residual = 0.0;
  double commutator_residual = 0.0;
  double rs_residual = 0.0;
  double bd_residual = 0.0;
  Q2Witness q2_witness;
  bool q3_pass = false;
  bool q2_nonzero = false;
  bool commutator_pass = false;
  bool rs_pass = false;
  bool bd_pass = false;
  bool bd_expected = false;  // alpha_{mu+2} == -1
};

/// Checks Q^3 = 0 (full window), Q^2 != 0 (certified by a structural
/// nonzero entry), [H, Q] = 0, the Rubakov-Spiridonov relation, and the
/// Beckers-Debergh relation, all at the given tolerance. BD is expected to
/// pass iff alpha_{mu+2} = -1.
inline PssqmReport verify_pssqm(const PssqmSystem& s, double tol) {
  const Eigen::MatrixXcd& q = s.q_mat;
  const Eigen::MatrixXcd qdag = q.adjoint();
  const Eigen::MatrixXcd h = s.h_mat.cast<std::complex<double>>();

  const Eigen::MatrixXcd q2 = q * q;
  const Eigen::MatrixXcd qqdq = q * qdag * q;
  const Eigen::MatrixXcd q2qd = q2 * qdag;
  const Eigen::MatrixXcd qdq2 = qdag * q2;
  const Eigen::MatrixXcd qh = q * h;

  PssqmReport rep;
  rep.tol = tol;
  rep.q3_residual = (q2 * q).cwiseAbs().maxCoeff();
  rep.commutator_residual = detail::pssqm_windowed(h * q - q * h, s.dim);
  rep.rs_residual = detail::pssqm_windowed(q2qd + qqdq + qdq2 - 4.0 * qh, s.dim);
  rep.bd_residual =
      detail::pssqm_windowed(2.0 * qqdq - q2qd - qdq2 - 2.0 * qh, s.dim);

  // Q^2 takes |n> with n = mu+1 (mod 3) to |n+2>; the lowest such column
  // inside the safe window certifies Q^2 != 0 structurally.
  const long n0 = (s.mu + 1) % 3;
  rep.q2_witness = {n0 + 2, n0, std::abs(q2(n0 + 2, n0))};

  rep.q3_pass = rep.q3_residual < tol;
  rep.q2_nonzero = rep.q2_witness.magnitude > 0.0;
  rep.commutator_pass = rep.commutator_residual < tol;
  rep.rs_pass = rep.rs_residual < tol;
  rep.bd_pass = rep.bd_residual < tol;
  rep.bd_expected = (s.params.alpha_mod(s.mu + 2) == -1);
  return rep;
}

/// Max-entry residual of u Q^2 Q+ + v Q Q+ Q + w Q+ Q^2 - 4 Q H on the
/// truncation-safe window.
inline double general_trilinear_check(const PssqmSystem& s,
                                      std::complex<double> u,
                                      std::complex<double> v,
                                      std::complex<double> w) {
  const Eigen::MatrixXcd& q = s.q_mat;
  const Eigen::MatrixXcd qdag = q.adjoint();
  const Eigen::MatrixXcd h = s.h_mat.cast<std::complex<double>>();
  const Eigen::MatrixXcd lhs =
      u * (q * q * qdag) + v * (q * qdag * q) + w * (qdag * q * q);
  return detail::pssqm_windowed(lhs - 4.0 * (q * h), s.dim);
}

struct TrilinearCoefficients {
  std::complex<double> u, v, w;
};

/// sol1 branch: u = v = w = 4/(|eta2|^2 + |eta1|^2).
inline TrilinearCoefficients sol1_coefficients(const Rational& eta1_sq,
                                               const Rational& eta2_sq) {
  const double c = 4.0 / to_double(eta1_sq + eta2_sq);
  return {c, c, c};
}

/// sol1 branch sector shift r_{mu+2}.
inline Rational sol1_shift(const Rational& alpha_mu2, const Rational& eta1_sq,
                           const Rational& eta2_sq) {
  return (1 + alpha_mu2) * (eta2_sq - eta1_sq) / (eta2_sq + eta1_sq);
}

/// sol2 branch coefficients for a free u (requires alpha_{mu+2} = -1 and
/// r_{mu+2} = 0 to satisfy the trilinear condition).
inline TrilinearCoefficients sol2_coefficients(std::complex<double> u,
                                               const Rational& eta1_sq,
                                               const Rational& eta2_sq) {
  const double e1 = to_double(eta1_sq);
  const double e2 = to_double(eta2_sq);
  return {u, (4.0 - e1 * u) / e2, (4.0 * (e2 - e1) + e1 * e1 * u) / (e2 * e2)};
}

/// The two real linear combinations Q_mu(0) and Q_mu(pi) at eta = sqrt(2):
/// Q1 = sqrt(2) a+ (P_{mu+1} + P_{mu+2}), Q2 = sqrt(2) a+ (P_{mu+1} - P_{mu+2}).
inline std::pair<PssqmSystem, PssqmSystem> khare_charges(const PssqmConfig& c) {
  PssqmConfig base = c;
  base.eta1_sq = 2;
  base.phi = 0.0;
  PssqmSystem q1 = build_charge(base);
  base.phi = std::numbers::pi;
  PssqmSystem q2 = build_charge(base);
  return {std::move(q1), std::move(q2)};
}

// ---------------------------------------------------------------------------
// Level diagram of H_mu with the charge action
// ---------------------------------------------------------------------------

struct Figure2Level {
  long n = 0;
  long k = 0;
  Rational energy;                  // exact H_mu eigenvalue
  Rational offset;                  // energy - panel ground energy
  std::optional<long> qdag_target;  // state reached by Q+_mu, if nonzero
};

struct Figure2Column {
  int sector = 0;
  std::vector<Figure2Level> levels;
};

/// One panel: three sector columns ordered along the Q+ chain
/// (sector mu, then mu+2, then mu+1, indices mod 3). Offsets are relative
/// to the panel ground state; the true ground energy rides along.
struct Figure2Panel {
  AlgebraParams params;
  int mu = 0;
  Rational ground_energy;
  SusyStatus susy = SusyStatus::broken;
  std::array<Figure2Column, 3> columns;
};

/// Canonical (eta = sqrt(2), phi = 0) level table with the Q+_mu action:
/// Q+ annihilates |n> with n = mu+1 (mod 3) and lowers every other state by
/// one, landing on a degenerate partner level.
inline Figure2Panel spectrum_figure2(const AlgebraParams& p, int mu,
                                     int levels) {
  if (levels < 1)
    throw std::invalid_argument("spectrum_figure2: levels must be >= 1");
  PssqmConfig config{p, mu, 2, 0.0, std::max(3 * levels + 3, 8)};
  const PssqmSystem system = build_charge(config);

  Figure2Panel panel{p, mu, system.ground_energy, system.susy, {}};
  const int order[3] = {mu % 3, (mu + 2) % 3, (mu + 1) % 3};
  for (int col = 0; col < 3; ++col) {
    Figure2Column column{order[col], {}};
    for (int k = 0; k < levels; ++k) {
      const long n = 3L * k + order[col];
      Figure2Level level{n, k, system.h_exact[n],
                         system.h_exact[n] - panel.ground_energy,
                         std::nullopt};
      const long below = (n - 1) % 3;
      if (n >= 1 && (below == (mu + 1) % 3 || below == (mu + 2) % 3))
        level.qdag_target = n - 1;
      column.levels.push_back(std::move(level));
    }
    panel.columns[col] = std::move(column);
  }
  return panel;
}

}  // namespace closc
