#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qring/errors.hpp"
#include "qring/run.hpp"

namespace {

using qring::cli::Command;
using qring::cli::OutputFormat;
using qring::cli::RunConfig;

void parse_range(const std::string& text, int& lo, int& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw qring::UsageError("range must look like a..b, got '" + text + "'");
  try {
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw qring::UsageError("bad integers in range '" + text + "'");
  }
  if (lo > hi) throw qring::UsageError("empty range '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"momentum spectra on a discretized quantum ring with twisted "
               "boundary conditions"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string n_range;

  const std::map<std::string, qring::BoundarySign> sign_names{
      {"figureb1", qring::BoundarySign::FigureB1},
      {"paperliteral", qring::BoundarySign::PaperLiteral}};
  const std::map<std::string, OutputFormat> format_names{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

  auto add_common = [&](CLI::App* sub, bool with_operator_flags) {
    if (with_operator_flags) {
      sub->add_option("--r", cfg.ring_points, "grid points on the ring")
          ->capture_default_str();
      sub->add_option("--delta-alpha", cfg.delta_alpha,
                      "phase jump at the seam, radians")
          ->capture_default_str();
      sub->add_option("--gauge", cfg.gauge,
                      "gauge function: zero | linear:<s> | sin:<a>:<h>")
          ->capture_default_str();
      sub->add_option("--sign", cfg.sign, "corner phase convention")
          ->transform(CLI::CheckedTransformer(sign_names, CLI::ignore_case))
          ->capture_default_str();
      sub->add_option("--tol", cfg.tol, "eigensolver tolerance")
          ->capture_default_str();
    }
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
        ->capture_default_str();
    sub->add_option("--out", cfg.output_path, "write data rows to this file");
  };

  CLI::App* fig = app.add_subcommand(
      "figure-b1", "sweep the seam phase jump over [0, pi] and emit the "
                   "labeled spectrum at every step");
  fig->add_option("--steps", cfg.steps, "sweep points, endpoints included")
      ->capture_default_str();
  add_common(fig, true);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "diagonalize a single operator, optionally gauged");
  add_common(spectrum, true);

  CLI::App* gauge_check = app.add_subcommand(
      "gauge-check", "spectral drift under gauging plus the winding shift of "
                     "the lowest eigenvector");
  add_common(gauge_check, true);

  CLI::App* superpose = app.add_subcommand(
      "superpose", "admissibility and seam mismatch of a superposition");
  superpose->add_option("--coeffs", cfg.coeffs,
                        "terms as n[:re[:im]],... (bare n means amplitude 1)")
      ->required();
  superpose->add_option("--q", cfg.band_offset, "band offset")
      ->capture_default_str();
  add_common(superpose, false);

  CLI::App* bands =
      app.add_subcommand("bands", "energy bands (q+n)^2 over a mode range");
  bands->add_option("--q", cfg.band_offset, "band offset")
      ->capture_default_str();
  bands->add_option("--n-range", n_range, "mode range a..b")
      ->capture_default_str();
  add_common(bands, false);

  CLI::App* flux = app.add_subcommand(
      "flux", "momentum eigenvalues of a charged ring threaded by flux");
  flux->add_option("--charge", cfg.charge, "particle charge")
      ->capture_default_str();
  flux->add_option("--flux", cfg.flux, "total flux through the ring")
      ->capture_default_str();
  flux->add_option("--radius", cfg.radius, "ring radius")
      ->capture_default_str();
  flux->add_option("--gamma", cfg.gamma, "partition parameter in [0,1]")
      ->capture_default_str();
  flux->add_option("--n-range", n_range, "mode range a..b")
      ->capture_default_str();
  add_common(flux, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fig->parsed()) cfg.command = Command::FigureB1;
    if (spectrum->parsed()) cfg.command = Command::Spectrum;
    if (gauge_check->parsed()) cfg.command = Command::GaugeCheck;
    if (superpose->parsed()) cfg.command = Command::Superpose;
    if (bands->parsed()) cfg.command = Command::Bands;
    if (flux->parsed()) cfg.command = Command::Flux;
    if (!n_range.empty()) parse_range(n_range, cfg.n_min, cfg.n_max);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output_path.empty()) {
      file.open(cfg.output_path);
      if (!file) {
        std::cerr << "error: cannot open '" << cfg.output_path << "'\n";
        return 1;
      }
      out = &file;
    }
    return qring::cli::run(cfg, *out, std::cerr);
  } catch (const qring::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
