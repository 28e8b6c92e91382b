#pragma once

// Colored butterfly rasters. The horizontal axis is energy, the vertical axis
// is the Harper flux parameter (flux in the tight-binding regime, inverse flux
// in the split-Landau regime). Each pixel row is assigned the closest fraction
// with bounded denominator; a pixel is white outside the spectrum, black on a
// band, and colored by the Hall conductance of the gap it falls in.

#include <cstdint>
#include <string_view>
#include <vector>

#include "hofstadter/chern.hpp"
#include "hofstadter/rationals.hpp"

namespace hofstadter {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};
inline constexpr Rgb kBlack{0, 0, 0};

enum class ImageFormat { Ppm, Png, Svg };

/// "ppm", "png" or "svg". Throws std::invalid_argument.
ImageFormat parse_image_format(std::string_view text);
std::string_view to_string(ImageFormat f) noexcept;

struct RenderConfig {
  Regime regime = Regime::TightBinding;
  std::int64_t q_max = 20;
  int width = 512;
  int height = 512;
  double e_min = -4.0;
  double e_max = 4.0;
  /// Rows cover the flux range [flux_offset, flux_offset + 1].
  std::int64_t flux_offset = 0;
  int clip = 8;
  ImageFormat format = ImageFormat::Ppm;

  /// Throws std::invalid_argument on width/height < 2, e_min >= e_max,
  /// q_max outside [1, 10^4], clip < 1 or a negative flux offset.
  void validate() const;
};

/// White for 0; red ramp for positive, blue ramp for negative conductance,
/// saturating at |sigma| = clip.
Rgb color_of(std::int64_t sigma, int clip);

class ButterflyRaster {
 public:
  ButterflyRaster() = default;
  /// Pixels row-major, top row first.
  ButterflyRaster(int width, int height, std::vector<Rgb> pixels);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] const std::vector<Rgb>& pixels() const noexcept { return pixels_; }

  /// Pixel at column x and image row (0 = top).
  [[nodiscard]] const Rgb& at(int x, int row) const { return pixels_[static_cast<std::size_t>(row) * width_ + x]; }
  Rgb& at(int x, int row) { return pixels_[static_cast<std::size_t>(row) * width_ + x]; }

  /// Axis calibration: pixel-center energy of column x and flux of image row.
  void set_axes(double e_min, double e_max, double flux_min, double flux_max);
  [[nodiscard]] double energy_at(int x) const noexcept;
  [[nodiscard]] double flux_at(int row) const noexcept;

  friend bool operator==(const ButterflyRaster& a, const ButterflyRaster& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.pixels_ == b.pixels_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb> pixels_;
  double e_min_ = -4.0;
  double e_max_ = 4.0;
  double flux_min_ = 0.0;
  double flux_max_ = 1.0;
};

/// Pixel-center energy of column x in a width-column image over [e_min, e_max].
/// Computed about the center of the range so mirrored columns give exactly
/// negated energies when e_min == -e_max.
double column_energy(int x, int width, double e_min, double e_max);

/// Color of energy E on the row whose flux is `flux_row`, which must lie in
/// [cfg.flux_offset, cfg.flux_offset + 1].
Rgb pixel_color(double energy, double flux_row, const RenderConfig& cfg);

struct RenderStats {
  std::size_t distinct_fractions = 0;
};

/// Renders the full raster. Rows are distributed over `threads` workers; the
/// output does not depend on the thread count.
ButterflyRaster render_butterfly(const RenderConfig& cfg, unsigned threads = 1, RenderStats* stats = nullptr);

}  // namespace hofstadter
