#include "hofstadter/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "hofstadter/spectrum.hpp"

namespace hofstadter {

ImageFormat parse_image_format(std::string_view text) {
  if (text == "ppm") return ImageFormat::Ppm;
  if (text == "png") return ImageFormat::Png;
  if (text == "svg") return ImageFormat::Svg;
  throw std::invalid_argument("unknown image format '" + std::string(text) + "' (expected ppm, png or svg)");
}

std::string_view to_string(ImageFormat f) noexcept {
  switch (f) {
    case ImageFormat::Ppm:
      return "ppm";
    case ImageFormat::Png:
      return "png";
    case ImageFormat::Svg:
      return "svg";
  }
  return "ppm";
}

void RenderConfig::validate() const {
  if (width < 2 || height < 2) throw std::invalid_argument("image width and height must be >= 2");
  if (!(e_min < e_max)) throw std::invalid_argument("energy range requires emin < emax");
  if (!std::isfinite(e_min) || !std::isfinite(e_max)) throw std::invalid_argument("energy range must be finite");
  if (q_max < 1 || q_max > 10'000) throw std::invalid_argument("qmax must lie in [1, 10000]");
  if (clip < 1) throw std::invalid_argument("clip must be >= 1");
  if (flux_offset < 0) throw std::invalid_argument("flux offset must be >= 0");
}

Rgb color_of(std::int64_t sigma, int clip) {
  if (clip < 1) throw std::invalid_argument("clip must be >= 1");
  if (sigma == 0) return kWhite;
  const std::int64_t magnitude = std::min<std::int64_t>(std::llabs(sigma), clip);
  // round(230 * (clip - magnitude) / clip), halves rounded up.
  const auto g = static_cast<std::uint8_t>((2 * 230 * (clip - magnitude) + clip) / (2 * clip));
  return sigma > 0 ? Rgb{255, g, g} : Rgb{g, g, 255};
}

ButterflyRaster::ButterflyRaster(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1 || pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("raster dimensions do not match pixel count");
  }
}

void ButterflyRaster::set_axes(double e_min, double e_max, double flux_min, double flux_max) {
  e_min_ = e_min;
  e_max_ = e_max;
  flux_min_ = flux_min;
  flux_max_ = flux_max;
}

double ButterflyRaster::energy_at(int x) const noexcept { return column_energy(x, width_, e_min_, e_max_); }

double ButterflyRaster::flux_at(int row) const noexcept {
  const int y = height_ - 1 - row;
  return flux_min_ + (flux_max_ - flux_min_) * (y + 0.5) / height_;
}

double column_energy(int x, int width, double e_min, double e_max) {
  const double center = 0.5 * (e_min + e_max);
  const double half = 0.5 * (e_max - e_min);
  return center + half * static_cast<double>(2 * x + 1 - width) / static_cast<double>(width);
}

namespace {

// Everything a row needs to color its pixels.
struct RowModel {
  bool blank = false;          // whole row white
  std::vector<double> edges;   // 2q sorted, exactly antisymmetric
  std::vector<GapLabel> labels;
};

// The spectrum of p/q equals that of (q-p)/q and of (p+q)/q; computing it at
// one representative keeps mirrored and shifted rows bit-identical.
ReducedFraction spectral_representative(const ReducedFraction& f) {
  const std::int64_t p = f.p() % f.q();
  return {std::min(p, f.q() - p) % f.q(), f.q()};
}

std::vector<double> symmetric_edges(const ReducedFraction& f) {
  const std::vector<double> raw = band_edges(spectral_representative(f));
  const std::size_t n = raw.size();
  std::vector<double> edges(n);
  for (std::size_t i = 0; i < n; ++i) edges[i] = 0.5 * (raw[i] - raw[n - 1 - i]);
  return edges;
}

RowModel make_row(const ReducedFraction& f, Regime regime) {
  RowModel row;
  if (regime == Regime::LandauSplit && f.p() == 0) {
    row.blank = true;
    return row;
  }
  row.edges = symmetric_edges(f);
  row.labels = gap_labels(f, regime);
  return row;
}

Rgb classify(double energy, const RowModel& row, int clip) {
  if (row.blank) return kWhite;
  const auto& e = row.edges;
  if (energy < e.front() || energy > e.back()) return kWhite;
  // k = number of edges <= energy; band r spans [e[2r], e[2r+1]].
  const auto k = static_cast<std::size_t>(std::upper_bound(e.begin(), e.end(), energy) - e.begin());
  if (k % 2 == 1) return kBlack;
  if (energy == e[k - 1]) return kBlack;  // closed upper end of band k/2
  // e[k-1] < energy < e[k]: open gap j = k/2.
  return color_of(row.labels[k / 2 - 1].sigma, clip);
}

ReducedFraction row_fraction(std::int64_t num, std::int64_t den, const RenderConfig& cfg) {
  const ReducedFraction base = best_approximant(num, den, cfg.q_max);
  return ReducedFraction(base.p() + cfg.flux_offset * base.q(), base.q());
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

Rgb pixel_color(double energy, double flux_row, const RenderConfig& cfg) {
  cfg.validate();
  const double local = flux_row - static_cast<double>(cfg.flux_offset);
  if (local < -1e-12 || local > 1.0 + 1e-12) {
    throw std::invalid_argument("row flux outside the configured flux range");
  }
  const ReducedFraction base = best_approximant(std::clamp(local, 0.0, 1.0), cfg.q_max);
  const ReducedFraction f(base.p() + cfg.flux_offset * base.q(), base.q());
  return classify(energy, make_row(f, cfg.regime), cfg.clip);
}

ButterflyRaster render_butterfly(const RenderConfig& cfg, unsigned threads, RenderStats* stats) {
  cfg.validate();
  const int width = cfg.width;
  const int height = cfg.height;

  // Row y (counted upward from the bottom) sits at flux offset + (2y+1)/(2H).
  std::vector<std::size_t> row_model(static_cast<std::size_t>(height));
  std::vector<ReducedFraction> fractions;
  std::map<ReducedFraction, std::size_t> index_of;
  for (int y = 0; y < height; ++y) {
    const ReducedFraction f = row_fraction(2 * y + 1, 2 * static_cast<std::int64_t>(height), cfg);
    auto [it, inserted] = index_of.try_emplace(f, fractions.size());
    if (inserted) fractions.push_back(f);
    row_model[static_cast<std::size_t>(y)] = it->second;
  }

  std::vector<RowModel> models(fractions.size());
  parallel_for(fractions.size(), threads, [&](std::size_t i) { models[i] = make_row(fractions[i], cfg.regime); });

  std::vector<double> energies(static_cast<std::size_t>(width));
  for (int x = 0; x < width; ++x) energies[static_cast<std::size_t>(x)] = column_energy(x, width, cfg.e_min, cfg.e_max);

  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * height);
  parallel_for(static_cast<std::size_t>(height), threads, [&](std::size_t y) {
    const RowModel& model = models[row_model[y]];
    const std::size_t row = static_cast<std::size_t>(height) - 1 - y;
    for (std::size_t x = 0; x < energies.size(); ++x) {
      pixels[row * static_cast<std::size_t>(width) + x] = classify(energies[x], model, cfg.clip);
    }
  });

  if (stats != nullptr) stats->distinct_fractions = fractions.size();
  ButterflyRaster raster(width, height, std::move(pixels));
  const auto lo = static_cast<double>(cfg.flux_offset);
  raster.set_axes(cfg.e_min, cfg.e_max, lo, lo + 1.0);
  return raster;
}

}  // namespace hofstadter
