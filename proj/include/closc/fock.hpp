#pragma once

/**
 * @file fock.hpp
 * @brief Dense matrix realization of {a, a+, N, T, P_mu, H_0} on a truncated
 *        Fock space, and machine verification of the defining relations.
 *
 * Truncation policy: relations containing a single ladder operator are
 * checked on matrix elements with row/column index <= dim-2 (a finite
 * truncation necessarily breaks [a, a+] on the top state); relations built
 * from T and P_mu alone are checked on the full window.
 */

#include "closc/algebra.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace closc {

struct RelationCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct RelationReport {
  double tol = 0.0;
  bool pass = false;
  std::vector<RelationCheck> checks;

  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
};

/// Matrices are stored dense and real where possible (only T is complex).
/// Treat instances as immutable after build_fock; all fields are plain data
/// so tests can fault-inject copies.
struct FockRep {
  AlgebraParams params;
  int dim = 0;

  Eigen::MatrixXd a_mat;                 // (a)_{n-1,n} = sqrt(F(n))
  Eigen::MatrixXd adag_mat;              // transpose of a_mat
  Eigen::MatrixXd n_mat;                 // diag(0..dim-1)
  Eigen::MatrixXcd t_mat;                // diag(e^{2*pi*i*n/lambda})
  std::vector<Eigen::MatrixXd> p_mats;   // P_mu, 0/1 diagonals
  Eigen::MatrixXd h0_mat;                // diag(E_n)

  std::vector<Rational> f_exact;         // F(0..dim), exact
  std::vector<Rational> energy_exact;    // E_0..E_{dim-1}, exact
};

inline FockRep build_fock(const AlgebraParams& p, int dim) {
  detail::require_fock(p, "build_fock");
  const int lambda = p.lambda();
  if (dim < lambda + 2)
    throw DimensionTooSmall("build_fock: dim must be >= lambda + 2 = " +
                            std::to_string(lambda + 2));

  FockRep rep{p, dim, {}, {}, {}, {}, {}, {}, {}, {}};
  rep.a_mat = Eigen::MatrixXd::Zero(dim, dim);
  rep.adag_mat = Eigen::MatrixXd::Zero(dim, dim);
  rep.n_mat = Eigen::MatrixXd::Zero(dim, dim);
  rep.t_mat = Eigen::MatrixXcd::Zero(dim, dim);
  rep.p_mats.assign(lambda, Eigen::MatrixXd::Zero(dim, dim));
  rep.h0_mat = Eigen::MatrixXd::Zero(dim, dim);

  rep.f_exact.reserve(dim + 1);
  for (long n = 0; n <= dim; ++n) rep.f_exact.push_back(structure_function(p, n));
  rep.energy_exact.reserve(dim);
  for (long n = 0; n < dim; ++n) rep.energy_exact.push_back(energy_level(p, n));

  for (int n = 0; n < dim; ++n) {
    rep.n_mat(n, n) = n;
    rep.h0_mat(n, n) = to_double(rep.energy_exact[n]);
    rep.p_mats[n % lambda](n, n) = 1.0;
    if (const auto phase = exact_unit_phase(lambda, n)) {
      rep.t_mat(n, n) = phase->value();
    } else {
      const double angle = 2.0 * std::numbers::pi * (n % lambda) / lambda;
      rep.t_mat(n, n) = std::polar(1.0, angle);
    }
    if (n + 1 < dim) {
      const double root = std::sqrt(to_double(rep.f_exact[n + 1]));
      rep.a_mat(n, n + 1) = root;
      rep.adag_mat(n + 1, n) = root;
    }
  }
  return rep;
}

/// Runs the eight defining-relation checks. The report carries the maximum
/// absolute residual per relation; pass iff every residual < tol.
inline RelationReport verify_relations(const FockRep& r, double tol) {
  const int dim = r.dim;
  const int lambda = r.params.lambda();
  const int w = dim - 1;  // indices <= dim-2

  using Eigen::MatrixXcd;
  using Eigen::MatrixXd;

  const MatrixXcd a = r.a_mat.cast<std::complex<double>>();
  const MatrixXcd adag = r.adag_mat.cast<std::complex<double>>();
  const MatrixXcd num = r.n_mat.cast<std::complex<double>>();
  const MatrixXcd& t = r.t_mat;
  const MatrixXcd identity = MatrixXcd::Identity(dim, dim);

  auto windowed = [&](const MatrixXcd& m) {
    return m.topLeftCorner(w, w).cwiseAbs().maxCoeff();
  };
  auto full = [](const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); };

  RelationReport report;
  report.tol = tol;
  auto add = [&](std::string name, double residual) {
    report.checks.push_back({std::move(name), residual, residual < tol});
  };

  // (i) [N, a+] = a+
  add("n_adag_commutator", windowed(num * adag - adag * num - adag));

  // (ii) [N, T] = 0
  add("n_t_commutator", full(num * t - t * num));

  // (iii) T^lambda = I
  MatrixXcd t_pow = identity;
  for (int i = 0; i < lambda; ++i) t_pow = t_pow * t;
  add("t_power_identity", full(t_pow - identity));

  // (iv) [a, a+] = I + sum_mu alpha_mu P_mu
  MatrixXcd g = identity;
  for (int mu = 0; mu < lambda; ++mu)
    g += to_double(r.params.alpha()[mu]) *
         r.p_mats[mu].cast<std::complex<double>>();
  add("a_adag_commutator", windowed(a * adag - adag * a - g));

  // (v) a+ T = e^{-2*pi*i/lambda} T a+
  const std::complex<double> twist =
      exact_unit_phase(lambda, -1)
          ? exact_unit_phase(lambda, -1)->value()
          : std::polar(1.0, -2.0 * std::numbers::pi / lambda);
  add("adag_t_twist", windowed(adag * t - twist * (t * adag)));

  // (vi) a+ P_mu = P_{mu+1} a+
  double shift_res = 0.0;
  for (int mu = 0; mu < lambda; ++mu) {
    const MatrixXcd lhs = adag * r.p_mats[mu].cast<std::complex<double>>();
    const MatrixXcd rhs =
        r.p_mats[(mu + 1) % lambda].cast<std::complex<double>>() * adag;
    shift_res = std::max(shift_res, windowed(lhs - rhs));
  }
  add("adag_projector_shift", shift_res);

  // (vii) sum_mu P_mu = I
  MatrixXd p_sum = MatrixXd::Zero(dim, dim);
  for (const auto& p : r.p_mats) p_sum += p;
  add("projector_completeness",
      full((p_sum - MatrixXd::Identity(dim, dim)).cast<std::complex<double>>()));

  // (viii) a+ a = F(N) and a a+ = F(N+1)
  MatrixXcd f_n = MatrixXcd::Zero(dim, dim);
  MatrixXcd f_np1 = MatrixXcd::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    f_n(n, n) = to_double(r.f_exact[n]);
    f_np1(n, n) = to_double(r.f_exact[n + 1]);
  }
  const double struct_res = std::max(windowed(adag * a - f_n),
                                     windowed(a * adag - f_np1));
  add("structure_function_diagonal", struct_res);

  report.pass = true;
  for (const auto& c : report.checks) report.pass = report.pass && c.pass;
  return report;
}

}  // namespace closc
