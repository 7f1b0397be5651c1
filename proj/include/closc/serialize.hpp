#pragma once

/**
 * @file serialize.hpp
 * @brief JSON/CSV/ASCII serialization shared by the CLI and the tests.
 *
 * All output is deterministic: insertion-ordered JSON keys, rationals as
 * canonical "p/q" strings, and fixed column layouts. ASCII renders level
 * diagrams with one column per Fock sector.
 */

#include "closc/cyclic.hpp"
#include "closc/fock.hpp"
#include "closc/pssqm.hpp"
#include "closc/spectrum.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace closc {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// {"lambda": int, "alpha": ["p/q", ... lambda-1 independent entries ...]}
inline Json params_to_json(const AlgebraParams& p) {
  Json j;
  j["lambda"] = p.lambda();
  Json alpha = Json::array();
  for (int mu = 0; mu + 1 < p.lambda(); ++mu)
    alpha.push_back(format_rational(p.alpha()[mu]));
  j["alpha"] = std::move(alpha);
  return j;
}

inline AlgebraParams params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("alpha"))
    throw std::invalid_argument(
        "params json must be {\"lambda\": int, \"alpha\": [..]}");
  if (!j["lambda"].is_number_integer())
    throw std::invalid_argument("params json: lambda must be an integer");
  const int lambda = j["lambda"].get<int>();
  if (!j["alpha"].is_array())
    throw std::invalid_argument("params json: alpha must be an array");
  std::vector<Rational> alpha;
  for (const auto& entry : j["alpha"]) {
    if (entry.is_string())
      alpha.push_back(parse_rational(entry.get<std::string>()));
    else if (entry.is_number_integer())
      alpha.push_back(Rational(entry.get<long long>()));
    else
      throw std::invalid_argument(
          "params json: alpha entries must be \"p/q\" strings or integers");
  }
  return AlgebraParams(lambda, std::move(alpha));
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

namespace detail {

inline Json level_to_json(const SpectrumLevel& level) {
  Json j;
  j["n"] = level.n;
  j["k"] = level.k;
  j["mu"] = level.mu;
  j["energy"] = format_rational(level.energy);
  return j;
}

}  // namespace detail

/// Spectrum export over the leading `count` sorted levels. The signature is
/// computed at that prefix; degeneracy groups fully inside the prefix are
/// listed.
inline Json spectrum_report(const Spectrum& s, long count,
                            const SpectrumClass* cls = nullptr) {
  count = std::min<long>(count, static_cast<long>(s.levels.size()));
  Json j;
  j["params"] = params_to_json(s.params);
  Json levels = Json::array();
  std::set<long> shown;
  for (long i = 0; i < count; ++i) {
    levels.push_back(detail::level_to_json(s.levels[i]));
    shown.insert(s.levels[i].n);
  }
  j["levels"] = std::move(levels);
  j["signature"] = ordering_signature(s, count);
  Json groups = Json::array();
  for (const auto& group : s.degeneracy_groups) {
    bool inside = true;
    for (long n : group) inside = inside && shown.count(n) > 0;
    if (inside) groups.push_back(group);
  }
  j["degeneracy_groups"] = std::move(groups);
  if (cls) {
    Json c;
    c["ground_order"] = ground_order_name(cls->ground_order);
    c["subclass"] = cls->subclass;
    c["degeneracy_profile"] = degeneracy_profile_name(cls->profile);
    j["class"] = std::move(c);
  }
  return j;
}

inline std::string spectrum_to_csv(const Spectrum& s, long count) {
  count = std::min<long>(count, static_cast<long>(s.levels.size()));
  std::string out = "n,k,mu,energy\n";
  for (long i = 0; i < count; ++i) {
    const auto& level = s.levels[i];
    out += std::to_string(level.n) + ',' + std::to_string(level.k) + ',' +
           std::to_string(level.mu) + ',' + format_rational(level.energy) +
           '\n';
  }
  return out;
}

namespace detail {

struct DiagramRow {
  std::string label;
  std::vector<std::string> cells;  // one per column, possibly empty
};

inline std::string render_columns(const std::string& label_header,
                                  const std::vector<std::string>& headers,
                                  const std::vector<DiagramRow>& rows,
                                  const std::vector<std::vector<bool>>* arrows
                                  = nullptr) {
  std::size_t label_w = label_header.size();
  for (const auto& r : rows) label_w = std::max(label_w, r.label.size());
  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& r : rows)
      if (c < r.cells.size()) widths[c] = std::max(widths[c], r.cells[c].size());
  }

  auto pad_left = [](const std::string& s, std::size_t w) {
    return std::string(w - std::min(w, s.size()), ' ') + s;
  };
  auto pad_right = [](const std::string& s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  auto trim_right = [](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
  };

  std::string out;
  {
    std::string line = pad_left(label_header, label_w) + " |";
    for (std::size_t c = 0; c < headers.size(); ++c) {
      line += ' ' + pad_right(headers[c], widths[c]);
      if (c + 1 < headers.size()) line += "   ";
    }
    out += trim_right(line) + '\n';
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string line = pad_left(r.label, label_w) + " |";
    for (std::size_t c = 0; c < headers.size(); ++c) {
      const std::string cell = c < r.cells.size() ? r.cells[c] : "";
      line += ' ' + pad_right(cell, widths[c]);
      if (c + 1 < headers.size()) {
        const bool arrow = arrows && (*arrows)[i][c];
        line += arrow ? " ->" : "   ";
      }
    }
    out += trim_right(line) + '\n';
  }
  return out;
}

}  // namespace detail

/// Level diagram with one column per Fock sector, energies descending.
inline std::string spectrum_to_ascii(const Spectrum& s, long count) {
  count = std::min<long>(count, static_cast<long>(s.levels.size()));
  const int lambda = s.params.lambda();

  std::vector<detail::DiagramRow> rows;
  for (long i = count - 1; i >= 0;) {
    long j = i;
    while (j >= 0 && s.levels[j].energy == s.levels[i].energy) --j;
    detail::DiagramRow row{format_rational(s.levels[i].energy),
                           std::vector<std::string>(lambda)};
    for (long q = j + 1; q <= i; ++q)
      row.cells[s.levels[q].mu] = "n=" + std::to_string(s.levels[q].n);
    rows.push_back(std::move(row));
    i = j;
  }
  std::vector<std::string> headers;
  for (int mu = 0; mu < lambda; ++mu) headers.push_back("F" + std::to_string(mu));
  return detail::render_columns("energy", headers, rows);
}

// ---------------------------------------------------------------------------
// Classification / relation reports
// ---------------------------------------------------------------------------

inline Json classification_report(const AlgebraParams& p,
                                  const SpectrumClass& cls) {
  Json j;
  j["params"] = params_to_json(p);
  j["ground_order"] = ground_order_name(cls.ground_order);
  j["subclass"] = cls.subclass;
  j["degeneracy_profile"] = degeneracy_profile_name(cls.profile);
  j["signature"] = cls.signature;
  return j;
}

inline Json relation_report_to_json(const FockRep& rep,
                                    const RelationReport& report) {
  Json j;
  j["params"] = params_to_json(rep.params);
  j["dim"] = rep.dim;
  j["tol"] = report.tol;
  Json rels = Json::array();
  for (const auto& c : report.checks) {
    Json r;
    r["name"] = c.name;
    r["residual"] = c.residual;
    r["pass"] = c.pass;
    rels.push_back(std::move(r));
  }
  j["relations"] = std::move(rels);
  j["pass"] = report.pass;
  return j;
}

// ---------------------------------------------------------------------------
// Cyclic shape-invariance reports
// ---------------------------------------------------------------------------

inline Json omega_to_json(const CyclicSpectrumSpec& spec) {
  Json arr = Json::array();
  for (const auto& w : spec.omega) arr.push_back(format_rational(w));
  return arr;
}

inline Json cyclic_extract_report(const AlgebraParams& p,
                                  const std::optional<CyclicSpectrumSpec>& spec) {
  Json j;
  j["params"] = params_to_json(p);
  j["periodic"] = spec.has_value();
  if (spec) {
    j["omega"] = omega_to_json(*spec);
    j["Omega"] = format_rational(spec->omega_sum);
  }
  if (p.lambda() == 2) j["warning"] = kLambda2SpacingCaveat;
  return j;
}

inline Json cyclic_match_report(const CyclicSpectrumSpec& spec,
                                const std::optional<OmegaMatchResult>& result,
                                long verification_levels = 12) {
  Json j;
  Json omega = Json::array();
  for (const auto& w : spec.omega) omega.push_back(format_rational(w));
  j["omega"] = std::move(omega);
  j["status"] = result ? "ok" : "NoMatch";
  if (result) {
    auto match_json = [](const OmegaMatch& m) {
      Json mj;
      mj["params"] = params_to_json(m.params);
      mj["branch"] = ground_order_name(m.branch);
      return mj;
    };
    j["matched"] = match_json(result->primary);
    Json alts = Json::array();
    for (const auto& alt : result->alternatives) alts.push_back(match_json(alt));
    j["alternatives"] = std::move(alts);
    Json verified = Json::array();
    for (const auto& e :
         rescaled_spectrum(result->primary.params, verification_levels))
      verified.push_back(format_rational(e));
    j["verified_spectrum"] = std::move(verified);
  }
  return j;
}

// ---------------------------------------------------------------------------
// PSSQM reports
// ---------------------------------------------------------------------------

inline Json pssqm_report_to_json(const PssqmSystem& s, const PssqmReport& rep) {
  Json j;
  j["params"] = params_to_json(s.params);
  j["mu"] = s.mu;
  j["eta1_sq"] = format_rational(s.eta1_sq);
  j["eta2_sq"] = format_rational(s.eta2_sq);
  j["phi"] = s.phi;
  j["dim"] = s.dim;
  Json r = Json::array();
  for (const auto& rv : s.r) r.push_back(format_rational(rv));
  j["r"] = std::move(r);
  j["ground_energy"] = format_rational(s.ground_energy);
  j["susy_status"] = susy_status_name(s.susy);
  Json residuals;
  residuals["q3"] = rep.q3_residual;
  residuals["commutator"] = rep.commutator_residual;
  residuals["rs"] = rep.rs_residual;
  residuals["bd"] = rep.bd_residual;
  j["residuals"] = std::move(residuals);
  Json witness;
  witness["row"] = rep.q2_witness.row;
  witness["col"] = rep.q2_witness.col;
  witness["magnitude"] = rep.q2_witness.magnitude;
  j["q2_nonzero"] = std::move(witness);
  Json checks;
  checks["q3"] = rep.q3_pass;
  checks["q2_nonzero"] = rep.q2_nonzero;
  checks["commutator"] = rep.commutator_pass;
  checks["rs"] = rep.rs_pass;
  checks["bd"] = rep.bd_pass;
  j["checks"] = std::move(checks);
  j["bd_expected"] = rep.bd_expected;
  j["tol"] = rep.tol;
  return j;
}

// ---------------------------------------------------------------------------
// Figure payloads
// ---------------------------------------------------------------------------

/// Shifted-spectrum dataset in the style of the period-3 level diagrams:
/// sorted distinct levels with their sector labels, ground state at zero.
inline Json figure1_report(const std::string& which, const AlgebraParams& p,
                           long levels) {
  const Spectrum s =
      compute_spectrum(p, detail::stable_level_count(p, levels + p.lambda()));
  Json j;
  j["which"] = which;
  j["params"] = params_to_json(p);
  j["ground_energy"] = format_rational(s.levels.front().energy);
  j["normalization"] = "ground_state_zero";
  Json arr = Json::array();
  const Rational ground = s.levels.front().energy;
  for (long i = 0; i < levels; ++i) {
    const auto& level = s.levels[i];
    Json lj;
    lj["index"] = i;
    lj["n"] = level.n;
    lj["k"] = level.k;
    lj["mu"] = level.mu;
    lj["energy"] = format_rational(level.energy - ground);
    arr.push_back(std::move(lj));
  }
  j["levels"] = std::move(arr);
  if (const auto spec = extract_omegas(p)) {
    j["omega"] = omega_to_json(*spec);
  }
  return j;
}

inline std::string figure1_to_csv(const Json& fig) {
  std::string out = "index,n,k,mu,energy\n";
  for (const auto& level : fig["levels"]) {
    out += std::to_string(level["index"].get<long>()) + ',' +
           std::to_string(level["n"].get<long>()) + ',' +
           std::to_string(level["k"].get<long>()) + ',' +
           std::to_string(level["mu"].get<int>()) + ',' +
           level["energy"].get<std::string>() + '\n';
  }
  return out;
}

inline std::string figure1_to_ascii(const AlgebraParams& p, long levels) {
  const Spectrum s =
      compute_spectrum(p, detail::stable_level_count(p, levels + p.lambda()));
  Spectrum shifted = s;
  const Rational ground = s.levels.front().energy;
  shifted.levels.resize(levels);
  for (auto& level : shifted.levels) level.energy -= ground;
  return spectrum_to_ascii(shifted, levels);
}

inline Json figure2_report(const Figure2Panel& panel) {
  Json j;
  j["params"] = params_to_json(panel.params);
  j["mu"] = panel.mu;
  j["ground_energy"] = format_rational(panel.ground_energy);
  j["susy_status"] = susy_status_name(panel.susy);
  j["normalization"] =
      "offsets are relative to the panel ground state; panels with different "
      "mu have different true ground energies";
  Json cols = Json::array();
  for (const auto& column : panel.columns) {
    Json cj;
    cj["sector"] = column.sector;
    Json levels = Json::array();
    for (const auto& level : column.levels) {
      Json lj;
      lj["n"] = level.n;
      lj["k"] = level.k;
      lj["energy"] = format_rational(level.energy);
      lj["offset"] = format_rational(level.offset);
      if (level.qdag_target)
        lj["qdag_target"] = *level.qdag_target;
      else
        lj["qdag_target"] = nullptr;
      levels.push_back(std::move(lj));
    }
    cj["levels"] = std::move(levels);
    cols.push_back(std::move(cj));
  }
  j["columns"] = std::move(cols);
  return j;
}

inline std::string figure2_to_csv(const Figure2Panel& panel) {
  std::string out = "column,sector,k,n,energy,offset,qdag_target\n";
  for (std::size_t c = 0; c < panel.columns.size(); ++c) {
    for (const auto& level : panel.columns[c].levels) {
      out += std::to_string(c) + ',' +
             std::to_string(panel.columns[c].sector) + ',' +
             std::to_string(level.k) + ',' + std::to_string(level.n) + ',' +
             format_rational(level.energy) + ',' +
             format_rational(level.offset) + ',' +
             (level.qdag_target ? std::to_string(*level.qdag_target) : "") +
             '\n';
    }
  }
  return out;
}

/// Three sector columns in charge-chain order; "->"" marks the Q+_mu action
/// between horizontally aligned (degenerate) levels.
inline std::string figure2_to_ascii(const Figure2Panel& panel) {
  // Collect distinct offsets, descending.
  std::vector<Rational> offsets;
  for (const auto& column : panel.columns)
    for (const auto& level : column.levels) offsets.push_back(level.offset);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  std::reverse(offsets.begin(), offsets.end());

  std::vector<detail::DiagramRow> rows;
  std::vector<std::vector<bool>> arrows;
  for (const auto& offset : offsets) {
    detail::DiagramRow row{format_rational(offset), std::vector<std::string>(3)};
    std::array<const Figure2Level*, 3> at{nullptr, nullptr, nullptr};
    for (int c = 0; c < 3; ++c) {
      for (const auto& level : panel.columns[c].levels) {
        if (level.offset == offset) {
          at[c] = &level;
          row.cells[c] = "n=" + std::to_string(level.n);
        }
      }
    }
    std::vector<bool> arrow_row(2, false);
    for (int c = 0; c < 2; ++c) {
      arrow_row[c] = at[c] && at[c + 1] && at[c]->qdag_target &&
                     *at[c]->qdag_target == at[c + 1]->n;
    }
    rows.push_back(std::move(row));
    arrows.push_back(std::move(arrow_row));
  }

  std::vector<std::string> headers;
  for (const auto& column : panel.columns)
    headers.push_back("n%3=" + std::to_string(column.sector));

  std::string head = "mu=" + std::to_string(panel.mu) +
                     " ground_energy=" + format_rational(panel.ground_energy) +
                     " susy=" + susy_status_name(panel.susy) +
                     " (offsets from panel ground)\n";
  return head + detail::render_columns("offset", headers, rows, &arrows);
}

// ---------------------------------------------------------------------------
// Matrix dumps
// ---------------------------------------------------------------------------

namespace detail {

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace detail

/// Dense CSV matrix dump (row-major; complex entries flattened to
/// re,im pairs) plus a JSON header describing the representation.
inline void dump_fock_matrices(const FockRep& rep,
                               const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary);
    out << body;
  };

  Json header;
  header["lambda"] = rep.params.lambda();
  header["alpha"] = params_to_json(rep.params)["alpha"];
  header["dim"] = rep.dim;
  write("header.json", header.dump(2) + "\n");

  auto real_csv = [&](const Eigen::MatrixXd& m) {
    std::string body;
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (j) body += ',';
        body += detail::format_double(m(i, j));
      }
      body += '\n';
    }
    return body;
  };
  auto complex_csv = [&](const Eigen::MatrixXcd& m) {
    std::string body;
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (j) body += ',';
        body += detail::format_double(m(i, j).real()) + ',' +
                detail::format_double(m(i, j).imag());
      }
      body += '\n';
    }
    return body;
  };

  write("a.csv", real_csv(rep.a_mat));
  write("adag.csv", real_csv(rep.adag_mat));
  write("n.csv", real_csv(rep.n_mat));
  write("t.csv", complex_csv(rep.t_mat));
  for (int mu = 0; mu < rep.params.lambda(); ++mu)
    write("p" + std::to_string(mu) + ".csv", real_csv(rep.p_mats[mu]));
  write("h0.csv", real_csv(rep.h0_mat));
}

// ---------------------------------------------------------------------------
// Generic flattening (CSV/ASCII fallback for object reports)
// ---------------------------------------------------------------------------

namespace detail {

inline void flatten_json(const Json& j, const std::string& path,
                         std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_json(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array()) {
    long i = 0;
    for (const auto& value : j)
      flatten_json(value, path + "[" + std::to_string(i++) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

inline std::string json_to_csv(const Json& j) {
  std::vector<std::pair<std::string, std::string>> fields;
  detail::flatten_json(j, "", fields);
  std::string out = "key,value\n";
  for (const auto& [key, value] : fields)
    out += detail::csv_quote(key) + ',' + detail::csv_quote(value) + '\n';
  return out;
}

inline std::string json_to_ascii(const Json& j) {
  std::vector<std::pair<std::string, std::string>> fields;
  detail::flatten_json(j, "", fields);
  std::size_t width = 0;
  for (const auto& [key, value] : fields) width = std::max(width, key.size());
  std::string out;
  for (const auto& [key, value] : fields) {
    out += key + std::string(width - key.size(), ' ') + "  " + value + '\n';
  }
  return out;
}

}  // namespace closc
