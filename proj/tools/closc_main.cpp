// closc: command-line front end for the C_lambda-extended oscillator library.
//
// Subcommands: spectrum, classify, verify-algebra, cyclic (extract|match),
// pssqm, figure. Output formats: json (default), csv, ascii; the default can
// be overridden with the CLAMBDA_OUTPUT environment variable.
//
// Exit codes: 0 success, 1 domain error (machine-readable JSON on stderr),
// 2 usage error.

#include "closc/serialize.hpp"

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using closc::AlgebraParams;
using closc::Json;
using closc::Rational;

struct ParamsCli {
  int lambda = 0;
  std::vector<std::string> alpha;
  std::string params_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "cyclic group order (>= 2)");
    cmd->add_option("--alpha", alpha,
                    "independent algebra parameters alpha_0..alpha_{lambda-2} "
                    "as p/q rationals (repeat the flag)");
    cmd->add_option("--params", params_file,
                    "JSON file {\"lambda\": int, \"alpha\": [\"p/q\", ...]}");
  }

  AlgebraParams resolve() const {
    const bool inline_given = lambda != 0 || !alpha.empty();
    if (!params_file.empty()) {
      if (inline_given)
        throw std::invalid_argument(
            "give either --params or --lambda/--alpha, not both");
      std::ifstream in(params_file);
      if (!in)
        throw std::invalid_argument("cannot read params file: " + params_file);
      Json j = Json::parse(in);
      return closc::params_from_json(j);
    }
    if (lambda == 0)
      throw std::invalid_argument("missing --lambda (or --params file)");
    std::vector<Rational> values;
    values.reserve(alpha.size());
    for (const auto& a : alpha) values.push_back(closc::parse_rational(a));
    return AlgebraParams(lambda, std::move(values));
  }
};

std::string resolve_format(const std::string& flag_value) {
  std::string format = flag_value;
  if (format.empty()) {
    if (const char* env = std::getenv("CLAMBDA_OUTPUT"); env && *env)
      format = env;
    else
      format = "json";
  }
  if (format != "json" && format != "csv" && format != "ascii")
    throw std::invalid_argument("unknown output format: " + format);
  return format;
}

void emit(const Json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else if (format == "csv")
    std::cout << closc::json_to_csv(report);
  else
    std::cout << closc::json_to_ascii(report);
}

int run(int argc, char** argv) {
  CLI::App app{"C_lambda-extended oscillator algebras: exact spectra, Fock "
               "matrices, cyclic level-spacing matching, and order-2 PSSQM "
               "verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_flag;
  app.add_option("--format", format_flag, "output format: json|csv|ascii");

  // --- spectrum ---
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "exact oscillator spectrum of H_0");
  ParamsCli spectrum_params;
  spectrum_params.attach(spectrum_cmd);
  long levels = 24;
  spectrum_cmd->add_option("--levels", levels, "number of levels (default 24)");

  // --- classify ---
  auto* classify_cmd = app.add_subcommand(
      "classify", "lambda=3 spectrum taxonomy (ground order + subclass)");
  ParamsCli classify_params;
  classify_params.attach(classify_cmd);
  int max_n = 8;
  classify_cmd->add_option("--max-n", max_n,
                           "largest subclass index searched (default 8)");

  // --- verify-algebra ---
  auto* verify_cmd = app.add_subcommand(
      "verify-algebra", "build the truncated Fock matrices and check the "
                        "defining relations");
  ParamsCli verify_params;
  verify_params.attach(verify_cmd);
  int dim = 32;
  double tol = 1e-10;
  std::string dump_dir;
  verify_cmd->add_option("--dim", dim, "truncation dimension (default 32)");
  verify_cmd->add_option("--tol", tol, "residual tolerance (default 1e-10)");
  verify_cmd->add_option("--dump", dump_dir,
                         "directory for CSV matrix dumps + JSON header");

  // --- cyclic ---
  auto* cyclic_cmd = app.add_subcommand(
      "cyclic", "cyclic shape-invariance level spacings (extract|match)");
  cyclic_cmd->require_subcommand(1);
  auto* extract_cmd =
      cyclic_cmd->add_subcommand("extract", "spacing pattern of a spectrum");
  ParamsCli extract_params;
  extract_params.attach(extract_cmd);
  auto* match_cmd = cyclic_cmd->add_subcommand(
      "match", "solve for algebra parameters with a given spacing pattern");
  std::vector<std::string> omega_flags;
  match_cmd->add_option("--omega", omega_flags,
                        "level spacings omega_0 omega_1 omega_2 as p/q "
                        "(repeat the flag; must sum to 3)");

  // --- pssqm ---
  auto* pssqm_cmd = app.add_subcommand(
      "pssqm", "build an order-2 parasupercharge family and verify the "
               "closure relations");
  ParamsCli pssqm_params;
  pssqm_params.attach(pssqm_cmd);
  int mu = 0;
  std::string eta = "sqrt2";
  double phi = 0.0;
  int pssqm_dim = 16;
  double pssqm_tol = 1e-10;
  std::string checks = "rs,bd";
  double general_u = -2.0;
  pssqm_cmd->add_option("--mu", mu, "charge family index in {0,1,2}");
  pssqm_cmd->add_option("--eta", eta,
                        "eta_{mu+1}: 'sqrt2' or a p/q rational in (0,2)");
  pssqm_cmd->add_option("--phi", phi, "relative phase in radians");
  pssqm_cmd->add_option("--dim", pssqm_dim, "truncation dimension (default 16)");
  pssqm_cmd->add_option("--tol", pssqm_tol, "residual tolerance (default 1e-10)");
  pssqm_cmd->add_option("--check", checks,
                        "comma list of rs,bd,general (default rs,bd)");
  pssqm_cmd->add_option("--u", general_u,
                        "free trilinear coefficient u for --check general "
                        "(default -2)");

  // --- figure ---
  auto* figure_cmd = app.add_subcommand(
      "figure", "exact data behind the bundled level diagrams");
  std::string which;
  int figure_mu = 0;
  long figure_levels = 0;
  figure_cmd->add_option("--which", which, "1a|1b|1c|2")->required();
  figure_cmd->add_option("--mu", figure_mu, "charge family for --which 2");
  figure_cmd->add_option("--levels", figure_levels,
                         "levels to emit (default 10 for 1a/1b/1c, 4 per "
                         "column for 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  }
  const std::string format = resolve_format(format_flag);

  if (*spectrum_cmd) {
    const AlgebraParams p = spectrum_params.resolve();
    if (levels < p.lambda())
      throw std::invalid_argument("--levels must be >= lambda");
    const closc::Spectrum s =
        closc::compute_spectrum(p, closc::detail::stable_level_count(p, levels));
    if (format == "csv") {
      std::cout << closc::spectrum_to_csv(s, levels);
    } else if (format == "ascii") {
      std::cout << closc::spectrum_to_ascii(s, levels);
    } else {
      std::optional<closc::SpectrumClass> cls;
      if (p.lambda() == 3) cls = closc::classify_subclass(p);
      emit(closc::spectrum_report(s, levels, cls ? &*cls : nullptr), format);
    }
    return 0;
  }

  if (*classify_cmd) {
    const AlgebraParams p = classify_params.resolve();
    const closc::SpectrumClass cls = closc::classify_subclass(p, max_n);
    emit(closc::classification_report(p, cls), format);
    return 0;
  }

  if (*verify_cmd) {
    const AlgebraParams p = verify_params.resolve();
    const closc::FockRep rep = closc::build_fock(p, dim);
    const closc::RelationReport report = closc::verify_relations(rep, tol);
    if (!dump_dir.empty()) closc::dump_fock_matrices(rep, dump_dir);
    emit(closc::relation_report_to_json(rep, report), format);
    return 0;
  }

  if (*extract_cmd) {
    const AlgebraParams p = extract_params.resolve();
    const auto spec = closc::extract_omegas(p);
    emit(closc::cyclic_extract_report(p, spec), format);
    return 0;
  }

  if (*match_cmd) {
    if (omega_flags.size() != 3)
      throw std::invalid_argument("cyclic match needs exactly three --omega");
    std::vector<Rational> omega;
    for (const auto& w : omega_flags) omega.push_back(closc::parse_rational(w));
    const closc::CyclicSpectrumSpec spec(3, std::move(omega));
    const auto result = closc::match_omegas(spec);
    emit(closc::cyclic_match_report(spec, result), format);
    return 0;
  }

  if (*pssqm_cmd) {
    const AlgebraParams p = pssqm_params.resolve();
    if (mu < 0 || mu > 2)
      throw std::invalid_argument("--mu must be in {0,1,2}");
    Rational eta1_sq;
    if (eta == "sqrt2") {
      eta1_sq = 2;
    } else {
      const Rational value = closc::parse_rational(eta);
      eta1_sq = value * value;
    }
    const closc::PssqmConfig config{p, mu, eta1_sq, phi, pssqm_dim};
    const closc::PssqmSystem system = closc::build_charge(config);
    const closc::PssqmReport report = closc::verify_pssqm(system, pssqm_tol);
    Json j = closc::pssqm_report_to_json(system, report);
    if (checks.find("general") != std::string::npos) {
      Json general;
      const auto sol1 =
          closc::sol1_coefficients(system.eta1_sq, system.eta2_sq);
      general["sol1_u"] = sol1.u.real();
      general["sol1_residual"] =
          closc::general_trilinear_check(system, sol1.u, sol1.v, sol1.w);
      if (report.bd_expected) {
        const auto sol2 = closc::sol2_coefficients(general_u, system.eta1_sq,
                                                   system.eta2_sq);
        general["sol2_u"] = general_u;
        general["sol2_v"] = sol2.v.real();
        general["sol2_w"] = sol2.w.real();
        general["sol2_residual"] =
            closc::general_trilinear_check(system, sol2.u, sol2.v, sol2.w);
      } else {
        general["sol2_residual"] = nullptr;
        general["sol2_note"] = "sol2 branch requires alpha_{mu+2} = -1";
      }
      j["general"] = std::move(general);
    }
    emit(j, format);
    return 0;
  }

  if (*figure_cmd) {
    if (which == "1a" || which == "1b" || which == "1c") {
      const long n_levels = figure_levels > 0 ? figure_levels : 10;
      std::vector<Rational> alpha;
      if (which == "1a") alpha = {Rational(0), Rational(1)};
      if (which == "1b") alpha = {Rational(4), Rational(-3)};
      if (which == "1c") alpha = {Rational(6), Rational(-7)};
      const AlgebraParams p(3, std::move(alpha));
      if (format == "ascii") {
        std::cout << closc::figure1_to_ascii(p, n_levels);
      } else {
        const Json fig = closc::figure1_report(which, p, n_levels);
        if (format == "csv")
          std::cout << closc::figure1_to_csv(fig);
        else
          emit(fig, format);
      }
      return 0;
    }
    if (which == "2") {
      const int rows = figure_levels > 0 ? static_cast<int>(figure_levels) : 4;
      // The canonical PSSQM diagrams use the same algebra as figure 1a.
      const AlgebraParams p(3, {Rational(0), Rational(1)});
      const closc::Figure2Panel panel =
          closc::spectrum_figure2(p, figure_mu, rows);
      if (format == "ascii")
        std::cout << closc::figure2_to_ascii(panel);
      else if (format == "csv")
        std::cout << closc::figure2_to_csv(panel);
      else
        emit(closc::figure2_report(panel), format);
      return 0;
    }
    throw std::invalid_argument("--which must be one of 1a, 1b, 1c, 2");
  }

  return 0;
}

Json error_json(const std::string& code, const std::string& message) {
  Json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << error_json("UsageError", e.what()).dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_json("UsageError", e.what()).dump() << "\n";
    return 2;
  } catch (const closc::Error& e) {
    std::cerr << error_json(e.code(), e.what()).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << error_json("InternalError", e.what()).dump() << "\n";
    return 1;
  }
}
