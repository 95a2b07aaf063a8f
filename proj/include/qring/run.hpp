#pragma once

#include <iosfwd>
#include <string>

#include "qring/boundary.hpp"

namespace qring::cli {

enum class Command { FigureB1, Spectrum, GaugeCheck, Superpose, Bands, Flux };
enum class OutputFormat { Csv, Json };

// Tolerances pinned by the output contracts (not user-tunable).
inline constexpr double kMatchTol = 1e-9;
inline constexpr double kGaugeTol = 1e-9;

struct RunConfig {
  Command command = Command::FigureB1;
  int ring_points = 20;     // --r
  double delta_alpha = 0.0; // --delta-alpha
  int steps = 11;           // --steps, sweep points on [0, pi] inclusive
  std::string gauge = "zero";
  BoundarySign sign = BoundarySign::FigureB1;
  OutputFormat format = OutputFormat::Csv;
  double tol = 1e-10;       // eigensolver tolerance
  std::string output_path;  // empty = stdout

  std::string coeffs;       // --coeffs "n[:re[:im]],..."
  double band_offset = 0.0; // --q
  int n_min = -5;           // --n-range a..b
  int n_max = 5;

  double charge = 0.0;
  double flux = 0.0;
  double radius = 1.0;
  double gamma = 0.0;
};

// Data rows go to `out`, human-readable diagnostics to `diag`. Returns the
// process exit code: 0 unless a contract (classification, residual, gauge
// invariance) failed. Configuration problems throw.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

int run_figure_b1(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int run_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& diag);
int run_gauge_check(const RunConfig& cfg, std::ostream& out,
                    std::ostream& diag);
int run_checks(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

const char* to_string(Command c);
const char* to_string(BoundarySign s);

}  // namespace qring::cli
