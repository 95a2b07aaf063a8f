#include "qring/run.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qring/eigensolver.hpp"
#include "qring/errors.hpp"
#include "qring/gauge_checks.hpp"
#include "qring/ring_operator.hpp"
#include "qring/spectrum_analysis.hpp"
#include "qring/state.hpp"

namespace qring::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

constexpr const char* kRowHeader =
    "delta_alpha,idx,lambda_numeric,n_label,lambda_continuum,lambda_discrete,"
    "aliased,residual";

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct LabeledRow {
  std::size_t idx;
  double lambda_numeric;
  int n_label;
  double lambda_continuum;
  double lambda_discrete;
  bool aliased;
  double residual;
};

std::vector<LabeledRow> labeled_rows(const RingOperator& op,
                                     const Spectrum& spec,
                                     const std::vector<SpectrumLabel>& labels) {
  std::vector<LabeledRow> rows;
  rows.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::vector<cplx> v = spec.eigenvector(i);
    rows.push_back({i, spec.eigenvalues[i], labels[i].mode,
                    labels[i].lambda_continuum, labels[i].lambda_discrete,
                    labels[i].aliased,
                    residual(op.entries, spec.eigenvalues[i], v)});
  }
  return rows;
}

void write_csv_row(std::ostream& out, double delta_alpha, const LabeledRow& r) {
  out << fmt12(delta_alpha) << ',' << r.idx << ',' << fmt12(r.lambda_numeric)
      << ',' << r.n_label << ',' << fmt12(r.lambda_continuum) << ','
      << fmt12(r.lambda_discrete) << ',' << bool_str(r.aliased) << ','
      << fmt12(r.residual);
}

ordered_json row_json(const LabeledRow& r) {
  return ordered_json{{"idx", r.idx},
                      {"lambda_numeric", r.lambda_numeric},
                      {"n_label", r.n_label},
                      {"lambda_continuum", r.lambda_continuum},
                      {"lambda_discrete", r.lambda_discrete},
                      {"aliased", r.aliased},
                      {"residual", r.residual}};
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j{{"command", to_string(cfg.command)},
                 {"r", cfg.ring_points},
                 {"delta_alpha", cfg.delta_alpha},
                 {"steps", cfg.steps},
                 {"gauge", cfg.gauge},
                 {"sign", to_string(cfg.sign)},
                 {"format", cfg.format == OutputFormat::Csv ? "csv" : "json"},
                 {"tol", cfg.tol}};
  switch (cfg.command) {
    case Command::Superpose:
      j["q"] = cfg.band_offset;
      j["coeffs"] = cfg.coeffs;
      break;
    case Command::Bands:
      j["q"] = cfg.band_offset;
      j["n_range"] = ordered_json::array({cfg.n_min, cfg.n_max});
      break;
    case Command::Flux:
      j["n_range"] = ordered_json::array({cfg.n_min, cfg.n_max});
      j["charge"] = cfg.charge;
      j["flux"] = cfg.flux;
      j["radius"] = cfg.radius;
      j["gamma"] = cfg.gamma;
      break;
    default:
      break;
  }
  return j;
}

RingGrid grid_from(const RunConfig& cfg) {
  if (cfg.ring_points < 0)
    throw InvalidGridError("ring grid needs at least 3 points, got " +
                           std::to_string(cfg.ring_points));
  return make_grid(static_cast<std::size_t>(cfg.ring_points));
}

std::vector<SuperpositionTerm> parse_coeffs(const std::string& text) {
  if (text.empty()) throw UsageError("empty coefficient list");
  std::vector<SuperpositionTerm> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty coefficient entry");
    std::vector<std::string> fields;
    std::stringstream fs(item);
    std::string f;
    while (std::getline(fs, f, ':')) fields.push_back(f);
    if (fields.empty() || fields.size() > 3)
      throw UsageError("coefficient entry '" + item +
                       "' is not of the form n[:re[:im]]");
    const auto num = [](const std::string& s) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(s, &used);
      } catch (const std::exception&) {
        throw UsageError("bad number '" + s + "' in coefficient list");
      }
      if (used != s.size())
        throw UsageError("bad number '" + s + "' in coefficient list");
      return v;
    };
    const double mode = num(fields[0]);
    const double re = fields.size() > 1 ? num(fields[1]) : 1.0;
    const double im = fields.size() > 2 ? num(fields[2]) : 0.0;
    terms.push_back({mode, cplx(re, im)});
  }
  return terms;
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::FigureB1: return "figure-b1";
    case Command::Spectrum: return "spectrum";
    case Command::GaugeCheck: return "gauge-check";
    case Command::Superpose: return "superpose";
    case Command::Bands: return "bands";
    case Command::Flux: return "flux";
  }
  return "?";
}

const char* to_string(BoundarySign s) {
  return s == BoundarySign::FigureB1 ? "figureb1" : "paperliteral";
}

int run_figure_b1(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (cfg.steps < 2) throw UsageError("a sweep needs at least 2 steps");
  const RingGrid grid = grid_from(cfg);
  bool ok = true;
  ordered_json doc;
  if (cfg.format == OutputFormat::Json) {
    doc["config"] = config_json(cfg);
    doc["sweep"] = ordered_json::array();
  } else {
    out << kRowHeader << '\n';
  }
  for (int step = 0; step < cfg.steps; ++step) {
    const double delta_alpha =
        kPi * (static_cast<double>(step) / (cfg.steps - 1));
    const RingOperator op = build_twisted(grid, delta_alpha, cfg.sign);
    const Spectrum spec = eigh(op.entries, cfg.tol);
    std::vector<SpectrumLabel> labels;
    try {
      labels = match_labels(analytic_spectrum(grid, delta_alpha, cfg.sign),
                            spec.eigenvalues, kMatchTol);
    } catch (const ClassificationError& e) {
      diag << "classification failed at delta_alpha=" << fmt12(delta_alpha)
           << ": " << e.what() << '\n';
      ok = false;
      continue;
    }
    const std::vector<LabeledRow> rows = labeled_rows(op, spec, labels);
    if (cfg.format == OutputFormat::Json) {
      ordered_json point{{"delta_alpha", delta_alpha}};
      point["eigenvalues"] = spec.eigenvalues;
      point["labels"] = ordered_json::array();
      for (const auto& r : rows) point["labels"].push_back(row_json(r));
      point["diagnostics"] =
          ordered_json{{"max_residual", spec.max_residual},
                       {"max_offdiag_overlap", spec.max_offdiag_overlap}};
      doc["sweep"].push_back(std::move(point));
    } else {
      for (const auto& r : rows) {
        write_csv_row(out, delta_alpha, r);
        out << '\n';
      }
    }
  }
  if (cfg.format == OutputFormat::Json) out << doc.dump(2) << '\n';
  return ok ? 0 : 1;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  const RingGrid grid = grid_from(cfg);
  const GaugeSpec gauge = parse_gauge(grid, cfg.gauge);
  const RingOperator op = build_twisted(grid, cfg.delta_alpha, cfg.sign);
  const RingOperator gauged = apply_gauge(op, gauge);
  const Spectrum plain = eigh(op.entries, cfg.tol);
  const Spectrum spec = eigh(gauged.entries, cfg.tol);
  double drift = 0.0;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
    drift = std::max(drift,
                     std::abs(spec.eigenvalues[i] - plain.eigenvalues[i]));
  bool ok = drift <= kGaugeTol;
  if (!ok)
    diag << "gauge invariance violated: spectral drift " << fmt12(drift)
         << " exceeds " << fmt12(kGaugeTol) << '\n';
  std::vector<SpectrumLabel> labels;
  try {
    labels = match_labels(analytic_spectrum(grid, cfg.delta_alpha, cfg.sign),
                          spec.eigenvalues, kMatchTol);
  } catch (const ClassificationError& e) {
    diag << "classification failed: " << e.what() << '\n';
    return 1;
  }
  const std::vector<LabeledRow> rows = labeled_rows(gauged, spec, labels);
  if (cfg.format == OutputFormat::Json) {
    ordered_json doc{{"config", config_json(cfg)}};
    doc["eigenvalues"] = spec.eigenvalues;
    doc["labels"] = ordered_json::array();
    for (const auto& r : rows) doc["labels"].push_back(row_json(r));
    doc["diagnostics"] =
        ordered_json{{"max_residual", spec.max_residual},
                     {"max_offdiag_overlap", spec.max_offdiag_overlap},
                     {"gauge_invariance", drift},
                     {"hermiticity_defect", hermiticity_defect(gauged)}};
    out << doc.dump(2) << '\n';
  } else {
    out << kRowHeader << ",gauge_invariance\n";
    for (const auto& r : rows) {
      write_csv_row(out, cfg.delta_alpha, r);
      out << ',' << fmt12(drift) << '\n';
    }
  }
  return ok ? 0 : 1;
}

int run_gauge_check(const RunConfig& cfg, std::ostream& out,
                    std::ostream& diag) {
  const RingGrid grid = grid_from(cfg);
  const GaugeSpec gauge = parse_gauge(grid, cfg.gauge);
  const BoundarySpec boundary =
      cfg.delta_alpha != 0.0
          ? BoundarySpec::twisted(cfg.delta_alpha, cfg.sign)
          : BoundarySpec::linear();
  const double drift = verify_gauge_invariance(grid, boundary, gauge, cfg.tol);
  const WindingShift shift = winding_shift_demo(grid, gauge, 0, cfg.tol);
  const double lambda_drift =
      std::abs(shift.lambda_after - shift.lambda_before);
  const bool ok = drift <= kGaugeTol && lambda_drift <= kGaugeTol;

  diag << "gauge '" << cfg.gauge << "' on r=" << cfg.ring_points
       << ": spectral drift " << fmt12(drift) << ", lowest eigenvector winding "
       << shift.winding_before << " -> " << shift.winding_after
       << " at eigenvalue " << fmt12(shift.lambda_before) << '\n';

  if (cfg.format == OutputFormat::Json) {
    ordered_json doc{{"config", config_json(cfg)}};
    doc["results"] = ordered_json{{"spectral_drift", drift},
                                  {"winding_before", shift.winding_before},
                                  {"winding_after", shift.winding_after},
                                  {"lambda_before", shift.lambda_before},
                                  {"lambda_after", shift.lambda_after},
                                  {"eigenvalue_drift", lambda_drift},
                                  {"pass", ok}};
    out << doc.dump(2) << '\n';
  } else {
    out << "check,value,threshold,pass\n";
    out << "spectral_drift," << fmt12(drift) << ',' << fmt12(kGaugeTol) << ','
        << bool_str(drift <= kGaugeTol) << '\n';
    out << "winding_before," << shift.winding_before << ",,true\n";
    out << "winding_after," << shift.winding_after << ",,true\n";
    out << "eigenvalue_drift," << fmt12(lambda_drift) << ',' << fmt12(kGaugeTol)
        << ',' << bool_str(lambda_drift <= kGaugeTol) << '\n';
  }
  return ok ? 0 : 1;
}

int run_checks(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  switch (cfg.command) {
    case Command::Superpose: {
      const std::vector<SuperpositionTerm> terms = parse_coeffs(cfg.coeffs);
      std::vector<double> eigenvalues;
      eigenvalues.reserve(terms.size());
      for (const auto& t : terms)
        eigenvalues.push_back(cfg.band_offset + t.mode);
      const bool admissible = superposition_admissible(eigenvalues);
      const SuperpositionSpec spec{cfg.band_offset, terms};
      const double defect = periodicity_defect(spec);
      diag << (admissible ? "superposable set" : "not superposable")
           << "; observable seam mismatch " << fmt12(defect) << '\n';
      if (cfg.format == OutputFormat::Json) {
        ordered_json doc{{"config", config_json(cfg)}};
        doc["results"] = ordered_json{{"eigenvalues", eigenvalues},
                                      {"admissible", admissible},
                                      {"periodicity_defect", defect}};
        out << doc.dump(2) << '\n';
      } else {
        out << "quantity,value\n";
        out << "admissible," << bool_str(admissible) << '\n';
        out << "periodicity_defect," << fmt12(defect) << '\n';
      }
      return 0;
    }
    case Command::Bands: {
      const std::vector<BandPoint> pts =
          energy_bands(cfg.band_offset, cfg.n_min, cfg.n_max);
      const auto transition = degenerate_transition(cfg.band_offset);
      if (transition)
        diag << "degenerate pair (" << transition->modes.first << ","
             << transition->modes.second << "): momentum transfer "
             << fmt12(transition->momentum_transfer) << '\n';
      else
        diag << "no degenerate pair at q=" << fmt12(cfg.band_offset) << '\n';
      if (cfg.format == OutputFormat::Json) {
        ordered_json doc{{"config", config_json(cfg)}};
        ordered_json points = ordered_json::array();
        for (const auto& p : pts)
          points.push_back(ordered_json{{"n", p.mode},
                                        {"momentum", p.momentum},
                                        {"energy", p.energy}});
        ordered_json res{{"points", std::move(points)}};
        if (transition)
          res["transition"] =
              ordered_json{{"modes", ordered_json::array(
                                         {transition->modes.first,
                                          transition->modes.second})},
                           {"momentum_transfer",
                            transition->momentum_transfer}};
        else
          res["transition"] = nullptr;
        doc["results"] = std::move(res);
        out << doc.dump(2) << '\n';
      } else {
        out << "n,momentum,energy\n";
        for (const auto& p : pts)
          out << p.mode << ',' << fmt12(p.momentum) << ',' << fmt12(p.energy)
              << '\n';
      }
      return 0;
    }
    case Command::Flux: {
      const FluxConfig fc{cfg.charge, cfg.flux, cfg.radius, cfg.gamma};
      if (cfg.n_min > cfg.n_max)
        throw UsageError("empty mode range for flux table");
      diag << "flux table for charge=" << fmt12(cfg.charge)
           << " flux=" << fmt12(cfg.flux) << " radius=" << fmt12(cfg.radius)
           << '\n';
      if (cfg.format == OutputFormat::Json) {
        ordered_json doc{{"config", config_json(cfg)}};
        ordered_json rows = ordered_json::array();
        for (int n = cfg.n_min; n <= cfg.n_max; ++n)
          rows.push_back(
              ordered_json{{"n", n}, {"lambda", flux_eigenvalue(n, fc)}});
        doc["results"] = ordered_json{{"rows", std::move(rows)}};
        out << doc.dump(2) << '\n';
      } else {
        out << "n,lambda\n";
        for (int n = cfg.n_min; n <= cfg.n_max; ++n)
          out << n << ',' << fmt12(flux_eigenvalue(n, fc)) << '\n';
      }
      return 0;
    }
    default:
      throw UsageError("run_checks dispatches superpose, bands, flux only");
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  switch (cfg.command) {
    case Command::FigureB1: return run_figure_b1(cfg, out, diag);
    case Command::Spectrum: return run_spectrum(cfg, out, diag);
    case Command::GaugeCheck: return run_gauge_check(cfg, out, diag);
    case Command::Superpose:
    case Command::Bands:
    case Command::Flux: return run_checks(cfg, out, diag);
  }
  throw UsageError("unknown command");
}

}  // namespace qring::cli
