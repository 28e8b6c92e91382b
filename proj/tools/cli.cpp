#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hofstadter/chern.hpp"
#include "hofstadter/gap_table.hpp"
#include "hofstadter/image_io.hpp"
#include "hofstadter/render.hpp"
#include "hofstadter/spectrum.hpp"
#include "hofstadter/verify.hpp"

namespace hofstadter::cli {

namespace {

// Raised for invalid arguments that CLI11 itself cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ReducedFraction coprime_flux(std::int64_t p, std::int64_t q) {
  if (q < 1 || p < 0) throw UsageError("p must be >= 0 and q >= 1");
  if (std::gcd(p, q) != 1) throw UsageError("p and q must be coprime");
  return {p, q};
}

int cmd_spectrum(std::int64_t p, std::int64_t q, std::ostream& out) {
  const SpectrumAtFlux s = spectrum_at(coprime_flux(p, q));
  out << "flux " << s.flux << "\n";
  out << "edges";
  for (double e : s.edges) out << ' ' << format_real(e);
  out << "\n";
  out << "band lo hi\n";
  for (std::size_t r = 0; r < s.bands.size(); ++r) {
    out << r + 1 << ' ' << format_real(s.bands[r].lo) << ' ' << format_real(s.bands[r].hi) << "\n";
  }
  out << "gap lo hi width\n";
  for (const Gap& g : s.gaps) {
    out << g.index << ' ' << format_real(g.lo) << ' ' << format_real(g.hi) << ' ' << format_real(g.width) << "\n";
  }
  return kSuccess;
}

int cmd_labels(std::int64_t p, std::int64_t q, const std::string& regime_text, std::ostream& out) {
  const ReducedFraction f = coprime_flux(p, q);
  Regime regime;
  try {
    regime = parse_regime(regime_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (regime == Regime::LandauSplit && p == 0) throw UsageError("the landau regime requires p >= 1");
  const SpectrumAtFlux s = spectrum_at(f);
  const auto labels = gap_labels(f, regime);
  out << "flux " << f << " regime " << to_string(regime) << "\n";
  out << "j sigma width ambiguous\n";
  for (const GapLabel& label : labels) {
    const Gap& g = s.gaps[static_cast<std::size_t>(label.index - 1)];
    out << label.index << ' ' << label.sigma << ' ' << format_real(g.width) << ' '
        << (label.ambiguous ? "yes" : "no") << "\n";
  }
  return kSuccess;
}

struct ButterflyOptions {
  std::string regime = "tb";
  std::int64_t q_max = 20;
  int width = 512;
  int height = 512;
  double e_min = -4.0;
  double e_max = 4.0;
  int clip = 8;
  std::string format = "ppm";
  std::string out;
  unsigned threads = 1;
};

int cmd_butterfly(const ButterflyOptions& o, std::ostream& err) {
  RenderConfig cfg;
  try {
    cfg.regime = parse_regime(o.regime);
    cfg.format = parse_image_format(o.format);
    cfg.q_max = o.q_max;
    cfg.width = o.width;
    cfg.height = o.height;
    cfg.e_min = o.e_min;
    cfg.e_max = o.e_max;
    cfg.clip = o.clip;
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  RenderStats stats;
  const ButterflyRaster raster = render_butterfly(cfg, o.threads, &stats);
  write_image(raster, cfg.format, o.out);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  err << "rendered " << cfg.width << "x" << cfg.height << " " << to_string(cfg.regime) << " butterfly from "
      << stats.distinct_fractions << " fractions (qmax " << cfg.q_max << ") in " << elapsed << " ms -> " << o.out
      << "\n";
  return kSuccess;
}

int cmd_export(std::int64_t q_max, const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext != ".csv" && ext != ".json") throw UsageError("export target must end in .csv or .json");
  if (q_max < 1 || q_max > kMaxDenominator) throw UsageError("qmax must be >= 1");
  const auto rows = build_gap_table(q_max);
  const std::string text = ext == ".csv" ? gap_table_csv(rows) : gap_table_json(rows);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
  return kSuccess;
}

int cmd_verify(std::int64_t p, std::int64_t q, int grid, bool composite, std::ostream& out) {
  const ReducedFraction f = coprime_flux(p, q);
  if (grid < 20) throw UsageError("--grid must be >= 20");
  const ChernReport report = verify_labels(f, grid, composite);
  out << "flux " << f << " grid " << report.grid << "\n";
  out << "bands chern residual\n";
  for (const BandGroup& g : report.groups) {
    if (g.first == g.last) {
      out << g.first;
    } else {
      out << g.first << '-' << g.last;
    }
    out << ' ' << g.chern << ' ' << format_real(g.residual) << "\n";
  }
  out << "gap cumulative label match\n";
  for (const GapCheck& g : report.gaps) {
    out << g.index << ' ' << g.cumulative << ' ' << g.label << ' ' << (g.match ? "yes" : "no") << "\n";
  }
  out << "verdict " << (report.passed ? "PASS" : "FAIL") << "\n";
  return report.passed ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hofstadter butterfly spectra, Diophantine gap labels and Chern-number checks", "hofstadter"};
  app.require_subcommand(1);

  std::int64_t p = 0, q = 1;
  std::string regime = "tb";

  auto* spectrum = app.add_subcommand("spectrum", "Band edges, bands and gaps at flux p/q");
  spectrum->add_option("p", p, "Flux numerator")->required();
  spectrum->add_option("q", q, "Flux denominator")->required();

  auto* labels = app.add_subcommand("labels", "Hall conductance of every gap at flux p/q");
  labels->add_option("p", p, "Flux numerator")->required();
  labels->add_option("q", q, "Flux denominator")->required();
  labels->add_option("--regime", regime, "tb or landau")->capture_default_str();

  ButterflyOptions bopt;
  auto* butterfly = app.add_subcommand("butterfly", "Render the colored butterfly");
  butterfly->add_option("--regime", bopt.regime, "tb or landau")->capture_default_str();
  butterfly->add_option("--qmax", bopt.q_max, "Largest flux denominator")->capture_default_str();
  butterfly->add_option("--width", bopt.width, "Image width in pixels")->capture_default_str();
  butterfly->add_option("--height", bopt.height, "Image height in pixels")->capture_default_str();
  butterfly->add_option("--emin", bopt.e_min, "Lowest energy")->capture_default_str();
  butterfly->add_option("--emax", bopt.e_max, "Highest energy")->capture_default_str();
  butterfly->add_option("--clip", bopt.clip, "Conductance at which colors saturate")->capture_default_str();
  butterfly->add_option("--format", bopt.format, "ppm, png or svg")->capture_default_str();
  butterfly->add_option("--out", bopt.out, "Output path")->required();
  butterfly->add_option("--threads", bopt.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::int64_t export_qmax = 10;
  std::string export_out;
  auto* exporter = app.add_subcommand("export", "Write the gap table as CSV or JSON");
  exporter->add_option("--qmax", export_qmax, "Largest flux denominator")->capture_default_str();
  exporter->add_option("--out", export_out, "Output path (.csv or .json)")->required();

  int grid = 30;
  bool composite = false;
  auto* verify = app.add_subcommand("verify", "Check gap labels against lattice Chern numbers");
  verify->add_option("p", p, "Flux numerator")->required();
  verify->add_option("q", q, "Flux denominator")->required();
  verify->add_option("--grid", grid, "Brillouin-zone grid size")->capture_default_str();
  verify->add_flag("--composite", composite, "Integrate touching bands as one multiplet");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(p, q, out);
    if (*labels) return cmd_labels(p, q, regime, out);
    if (*butterfly) return cmd_butterfly(bopt, err);
    if (*exporter) return cmd_export(export_qmax, export_out);
    if (*verify) return cmd_verify(p, q, grid, composite, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateBandError& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerateBand;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hofstadter::cli
