#include "closc/pssqm.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

using namespace closc;
using testsupport::rand_in_open;

namespace {

AlgebraParams figure_params() { return AlgebraParams(3, {Rational(0), Rational(1)}); }

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// lambda=3 sampler on the alpha_{mu+2} = -1 surface (mu in {0, 2}; mu = 1
// would force alpha_0 = -1, which has no Fock representation).
AlgebraParams on_bd_surface(std::mt19937& gen, int mu) {
  const Rational a0 = rand_in_open(gen, -1, 6, 97);
  if (mu == 0) return AlgebraParams(3, {a0, 1 - a0});  // alpha_2 = -1
  return AlgebraParams(3, {a0, Rational(-1)});         // mu = 2: alpha_1 = -1
}

}  // namespace

TEST_CASE("build_charge canonical structure") {
  PssqmConfig config{figure_params(), 0, 2, 0.0, 14};
  const PssqmSystem s = build_charge(config);

  SECTION("Q_0 = sqrt(2) a+ (P_1 + P_2)") {
    const Eigen::MatrixXcd expected =
        std::sqrt(2.0) * (s.fock.adag_mat * (s.fock.p_mats[1] + s.fock.p_mats[2]))
            .cast<std::complex<double>>();
    CHECK(max_abs(s.q_mat - expected) < 1e-14);
  }
  SECTION("r closes via the sector-shift recursion") {
    // r_mu = -2 + alpha_{mu+1} + r_{mu+2}, r_{mu+1} = 2 - alpha_mu + r_{mu+2}
    CHECK(s.r[2] == 0);  // eta = sqrt(2) makes r_{mu+2} vanish
    CHECK(s.r[0] == -2 + s.params.alpha_mod(1) + s.r[2]);
    CHECK(s.r[1] == 2 - s.params.alpha_mod(0) + s.r[2]);
  }
  SECTION("H = H_0 + (1/2) sum_nu r_nu P_nu") {
    for (int n = 0; n < s.dim; ++n) {
      const Rational expected =
          s.fock.energy_exact[n] + s.r[n % 3] / 2;
      CHECK(s.h_exact[n] == expected);
    }
  }
  SECTION("ground energy and susy status") {
    CHECK(s.ground_energy == 0);  // (2*gamma_2 - 1)/2 with gamma_2 = 1/2
    CHECK(s.susy == SusyStatus::unbroken);
  }
}

TEST_CASE("ground energies match the closed forms in the canonical case") {
  std::mt19937 gen(11001);
  for (int trial = 0; trial < 30; ++trial) {
    const AlgebraParams p = testsupport::rand_admissible_l3(gen);
    const auto d = DerivedParams::from(p);
    const Rational closed[3] = {(2 * d.gamma[2] - 1) / 2,
                                (2 * d.gamma[0] + 1) / 2,
                                (2 * d.gamma[1] + 3) / 2};
    for (int mu = 0; mu < 3; ++mu) {
      PssqmConfig config{p, mu, 2, 0.0, 10};
      const PssqmSystem s = build_charge(config);
      CHECK(s.ground_energy == closed[mu]);
      CHECK((s.susy == SusyStatus::unbroken) == (mu == 0));
      if (mu == 1) CHECK(s.ground_energy > 0);  // gamma_0 > -1/2
      if (mu == 2) CHECK(s.ground_energy > 0);  // gamma_1 > -3/2
    }
  }
}

TEST_CASE("general eta shifts the ground energy by r_{mu+2}/2") {
  std::mt19937 gen(11002);
  for (int trial = 0; trial < 20; ++trial) {
    const AlgebraParams p = testsupport::rand_admissible_l3(gen);
    const auto d = DerivedParams::from(p);
    const Rational eta1_sq = rand_in_open(gen, 0, 4, 83);
    PssqmConfig config{p, 0, eta1_sq, 0.0, 10};
    const PssqmSystem s = build_charge(config);
    const Rational r2 = (1 + p.alpha_mod(2)) * (1 - eta1_sq / 2);
    CHECK(s.r[2] == r2);
    CHECK(s.ground_energy == (2 * d.gamma[2] - 1) / 2 + r2 / 2);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(build_charge(PssqmConfig{figure_params(), 0, Rational(4), 0.0, 14}),
                  EtaOutOfRange);
  CHECK_THROWS_AS(build_charge(PssqmConfig{figure_params(), 0, Rational(0), 0.0, 14}),
                  EtaOutOfRange);
  CHECK_THROWS_AS(build_charge(PssqmConfig{figure_params(), 0, 2, 0.0, 6}),
                  DimensionTooSmall);
  CHECK_THROWS_AS(
      build_charge(PssqmConfig{AlgebraParams(2, {Rational(1)}), 0, 2, 0.0, 14}),
      UnsupportedLambda);
  // mu=1 needs alpha_0 = -1 for the second trilinear branch, but that
  // parameter point has no Fock representation at all.
  CHECK_THROWS_AS(
      build_charge(PssqmConfig{AlgebraParams(3, {Rational(-1), Rational(2)}), 1,
                               2, 0.0, 14}),
      RepresentationMissing);
}

TEST_CASE("verification on the pinned examples") {
  SECTION("alpha=(0,1,-1), mu=0: alpha_2 = -1, so BD holds alongside RS") {
    const PssqmSystem s = build_charge(PssqmConfig{figure_params(), 0, 2, 0.0, 14});
    const PssqmReport rep = verify_pssqm(s, 1e-10);
    CHECK(rep.q3_residual < 1e-13);
    CHECK(rep.q2_nonzero);
    CHECK(rep.commutator_pass);
    CHECK(rep.rs_pass);
    CHECK(rep.bd_expected);
    CHECK(rep.bd_pass);
  }
  SECTION("alpha=(0,0,0), mu=0: BD fails off the constraint surface") {
    const PssqmSystem s = build_charge(
        PssqmConfig{AlgebraParams(3, {Rational(0), Rational(0)}), 0, 2, 0.0, 14});
    const PssqmReport rep = verify_pssqm(s, 1e-10);
    CHECK(rep.rs_pass);
    CHECK_FALSE(rep.bd_expected);
    CHECK_FALSE(rep.bd_pass);
  }
  SECTION("alpha=(1,0,-1), mu=0: both relations, Q Q+ Q = Q^2 Q+ + Q+ Q^2 = 2QH") {
    const PssqmSystem s = build_charge(
        PssqmConfig{AlgebraParams(3, {Rational(1), Rational(0)}), 0, 2, 0.0, 14});
    const PssqmReport rep = verify_pssqm(s, 1e-10);
    CHECK(rep.rs_pass);
    CHECK(rep.bd_pass);
    const Eigen::MatrixXcd q = s.q_mat;
    const Eigen::MatrixXcd qdag = q.adjoint();
    const Eigen::MatrixXcd h = s.h_mat.cast<std::complex<double>>();
    const int w = s.dim - 3;
    const auto window = [&](const Eigen::MatrixXcd& m) {
      return m.topLeftCorner(w, w).cwiseAbs().maxCoeff();
    };
    CHECK(window(q * qdag * q - 2.0 * q * h) < 1e-10);
    CHECK(window(q * q * qdag + qdag * q * q - 2.0 * q * h) < 1e-10);
  }
}

TEST_CASE("property: canonical suite over random parameters") {
  std::mt19937 gen(11003);
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraParams p = testsupport::rand_admissible_l3(gen);
    std::uniform_int_distribution<int> mus(0, 2);
    const int mu = mus(gen);
    const double phi = std::uniform_real_distribution<double>(0.0, 6.28)(gen);
    const PssqmSystem s = build_charge(PssqmConfig{p, mu, 2, phi, 16});
    const PssqmReport rep = verify_pssqm(s, 1e-10);
    INFO("mu=" << mu << " phi=" << phi);
    CHECK(rep.q3_residual < 1e-13);
    CHECK(rep.q2_nonzero);
    CHECK(rep.commutator_residual < 1e-10);
    CHECK(rep.rs_residual < 1e-10);
  }
}

TEST_CASE("BD relation passes exactly on the alpha_{mu+2} = -1 surface") {
  std::mt19937 gen(11004);
  for (int mu : {0, 2}) {
    for (int trial = 0; trial < 5; ++trial) {
      const AlgebraParams p = on_bd_surface(gen, mu);
      const PssqmSystem s = build_charge(PssqmConfig{p, mu, 2, 0.3, 16});
      const PssqmReport rep = verify_pssqm(s, 1e-10);
      CHECK(rep.bd_expected);
      CHECK(rep.bd_pass);
      CHECK(rep.rs_pass);
    }
  }
  // off the surface (|1 + alpha_{mu+2}| kept away from zero)
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraParams p = testsupport::rand_admissible_l3(gen);
    std::uniform_int_distribution<int> mus(0, 2);
    const int mu = mus(gen);
    if (abs(1 + p.alpha_mod(mu + 2)) < Rational(1, 4)) continue;
    const PssqmSystem s = build_charge(PssqmConfig{p, mu, 2, 0.0, 16});
    const PssqmReport rep = verify_pssqm(s, 1e-10);
    CHECK_FALSE(rep.bd_expected);
    CHECK_FALSE(rep.bd_pass);
  }
}

TEST_CASE("general trilinear condition") {
  std::mt19937 gen(11005);
  SECTION("sol1 with the canonical normalization: u=v=w=1") {
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraParams p = testsupport::rand_admissible_l3(gen);
      const Rational eta1_sq = rand_in_open(gen, 0, 4, 83);
      const PssqmSystem s = build_charge(PssqmConfig{p, 0, eta1_sq, 0.9, 16});
      const auto coeffs = sol1_coefficients(s.eta1_sq, s.eta2_sq);
      CHECK(std::abs(coeffs.u - std::complex<double>(1.0)) < 1e-14);
      CHECK(general_trilinear_check(s, coeffs.u, coeffs.v, coeffs.w) < 1e-10);
    }
  }
  SECTION("sol1 with free (eta_1, eta_2) and the matching shift") {
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraParams p = testsupport::rand_admissible_l3(gen);
      const Rational eta1_sq = rand_in_open(gen, 0, 3, 83);
      const Rational eta2_sq = rand_in_open(gen, 0, 3, 79);
      const Rational r2 = sol1_shift(p.alpha_mod(2), eta1_sq, eta2_sq);
      const PssqmSystem s =
          build_charge_general(p, 0, eta1_sq, eta2_sq, r2, 0.4, 16);
      const auto coeffs = sol1_coefficients(eta1_sq, eta2_sq);
      CHECK(general_trilinear_check(s, coeffs.u, coeffs.v, coeffs.w) < 1e-10);
    }
  }
  SECTION("sol2 on the constraint surface with a free complex u") {
    for (int trial = 0; trial < 10; ++trial) {
      const int mu = (trial % 2 == 0) ? 0 : 2;
      const AlgebraParams p = on_bd_surface(gen, mu);
      const Rational eta1_sq = rand_in_open(gen, 0, 4, 83);
      const PssqmSystem s = build_charge(PssqmConfig{p, mu, eta1_sq, 1.1, 16});
      REQUIRE(s.r[(mu + 2) % 3] == 0);  // (1 + alpha_{mu+2}) = 0
      const std::complex<double> u(0.7, -0.3);
      const auto coeffs = sol2_coefficients(u, s.eta1_sq, s.eta2_sq);
      CHECK(general_trilinear_check(s, coeffs.u, coeffs.v, coeffs.w) < 1e-10);
    }
  }
  SECTION("degenerate coefficients reproduce the 4QH scale") {
    const PssqmSystem s = build_charge(PssqmConfig{figure_params(), 0, 2, 0.0, 14});
    const Eigen::MatrixXcd qh =
        s.q_mat * s.h_mat.cast<std::complex<double>>();
    const int w = s.dim - 3;
    const double expected = 4.0 * qh.topLeftCorner(w, w).cwiseAbs().maxCoeff();
    CHECK(general_trilinear_check(s, 0.0, 0.0, 0.0) ==
          Catch::Approx(expected));
  }
}

TEST_CASE("Khare charges") {
  PssqmConfig config{figure_params(), 0, 2, 0.0, 14};
  const auto [q1, q2] = khare_charges(config);

  SECTION("linear combinations isolate single projectors") {
    const Eigen::MatrixXcd sum = q1.q_mat + q2.q_mat;
    const Eigen::MatrixXcd diff = q1.q_mat - q2.q_mat;
    const Eigen::MatrixXcd p1_term =
        2.0 * std::sqrt(2.0) *
        (q1.fock.adag_mat * q1.fock.p_mats[1]).cast<std::complex<double>>();
    const Eigen::MatrixXcd p2_term =
        2.0 * std::sqrt(2.0) *
        (q1.fock.adag_mat * q1.fock.p_mats[2]).cast<std::complex<double>>();
    CHECK(max_abs(sum - p1_term) < 1e-12);
    CHECK(max_abs(diff - p2_term) < 1e-12);
  }
  SECTION("both satisfy the nilpotency and RS relations") {
    for (const PssqmSystem* s : {&q1, &q2}) {
      const PssqmReport rep = verify_pssqm(*s, 1e-10);
      CHECK(rep.q3_residual < 1e-13);
      CHECK(rep.q2_nonzero);
      CHECK(rep.commutator_pass);
      CHECK(rep.rs_pass);
    }
  }
  SECTION("Q1 Q2 is nonzero although both cubes vanish") {
    CHECK(max_abs(q1.q_mat * q2.q_mat) > 1.0);
    CHECK(max_abs(q1.q_mat * q1.q_mat * q1.q_mat) == 0.0);
    CHECK(max_abs(q2.q_mat * q2.q_mat * q2.q_mat) < 1e-13);
  }
}

TEST_CASE("spectra are independent of the phase phi") {
  std::mt19937 gen(11006);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraParams p = testsupport::rand_admissible_l3(gen);
    const PssqmSystem a = build_charge(PssqmConfig{p, 1, 2, 0.0, 12});
    const PssqmSystem b = build_charge(PssqmConfig{p, 1, 2, 1.3, 12});
    CHECK(a.h_exact == b.h_exact);
    CHECK(verify_pssqm(b, 1e-10).rs_pass);
  }
}

TEST_CASE("figure-2 panels") {
  SECTION("mu=0: excited levels triply aligned, ground column alone") {
    const Figure2Panel panel = spectrum_figure2(figure_params(), 0, 4);
    CHECK(panel.columns[0].sector == 0);
    CHECK(panel.columns[1].sector == 2);
    CHECK(panel.columns[2].sector == 1);
    CHECK(panel.ground_energy == 0);
    CHECK(panel.susy == SusyStatus::unbroken);
    // offsets: column 0 starts at 0, the other two at one period (3)
    CHECK(panel.columns[0].levels[0].offset == 0);
    CHECK(panel.columns[1].levels[0].offset == 3);
    CHECK(panel.columns[2].levels[0].offset == 3);
    // the chain |3> -> |2> -> |1> sits at the first excited row
    CHECK(panel.columns[0].levels[1].qdag_target == 2);
    CHECK(panel.columns[1].levels[0].qdag_target == 1);
    CHECK_FALSE(panel.columns[2].levels[0].qdag_target.has_value());
  }
  SECTION("mu=1: two aligned ground columns") {
    const Figure2Panel panel = spectrum_figure2(figure_params(), 1, 4);
    CHECK(panel.columns[0].sector == 1);
    CHECK(panel.columns[1].sector == 0);
    CHECK(panel.columns[2].sector == 2);
    CHECK(panel.columns[0].levels[0].offset == 0);
    CHECK(panel.columns[1].levels[0].offset == 0);
    CHECK(panel.columns[2].levels[0].offset == 3);
    CHECK(panel.susy == SusyStatus::broken);
    CHECK(panel.ground_energy > 0);
  }
  SECTION("mu=2: three aligned ground columns") {
    const Figure2Panel panel = spectrum_figure2(figure_params(), 2, 4);
    CHECK(panel.columns[0].levels[0].offset == 0);
    CHECK(panel.columns[1].levels[0].offset == 0);
    CHECK(panel.columns[2].levels[0].offset == 0);
    CHECK(panel.ground_energy > 0);
  }
  SECTION("charge action lands on degenerate partners") {
    for (int mu = 0; mu < 3; ++mu) {
      const Figure2Panel panel = spectrum_figure2(figure_params(), mu, 5);
      const PssqmSystem s =
          build_charge(PssqmConfig{figure_params(), mu, 2, 0.0, 18});
      for (const auto& column : panel.columns) {
        for (const auto& level : column.levels) {
          if (!level.qdag_target) continue;
          const long target = *level.qdag_target;
          CHECK(s.h_exact[target] == level.energy);
          // nonzero matrix element of Q+ between the two states
          CHECK(std::abs(s.q_mat.adjoint()(target, level.n)) > 0.0);
        }
      }
    }
  }
}
