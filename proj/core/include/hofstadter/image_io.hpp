#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "hofstadter/render.hpp"

namespace hofstadter {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary P6: "P6\n<w> <h>\n255\n" followed by RGB bytes, top row first.
std::string encode_ppm(const ButterflyRaster& raster);

/// 8-bit truecolor PNG, no ancillary chunks.
std::vector<std::uint8_t> encode_png(const ButterflyRaster& raster);
ButterflyRaster decode_png(const std::vector<std::uint8_t>& bytes);

/// One rectangle per maximal horizontal run of equal color.
std::string encode_svg(const ButterflyRaster& raster);

/// Throws IoError naming the path when the file cannot be written.
void write_image(const ButterflyRaster& raster, ImageFormat format, const std::filesystem::path& path);

}  // namespace hofstadter
