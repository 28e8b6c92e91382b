#include "hofstadter/image_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace hofstadter {

std::string encode_ppm(const ButterflyRaster& raster) {
  std::string out = "P6\n" + std::to_string(raster.width()) + " " + std::to_string(raster.height()) + "\n255\n";
  out.reserve(out.size() + raster.pixels().size() * 3);
  for (const Rgb& px : raster.pixels()) {
    out.push_back(static_cast<char>(px.r));
    out.push_back(static_cast<char>(px.g));
    out.push_back(static_cast<char>(px.b));
  }
  return out;
}

namespace {

struct PngReadCursor {
  const std::vector<std::uint8_t>* bytes;
  std::size_t offset;
};

thread_local std::string png_last_error;

void png_append(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void png_no_flush(png_structp) {}

void png_consume(png_structp png, png_bytep data, png_size_t length) {
  auto* cursor = static_cast<PngReadCursor*>(png_get_io_ptr(png));
  if (cursor->offset + length > cursor->bytes->size()) png_error(png, "truncated PNG stream");
  std::memcpy(data, cursor->bytes->data() + cursor->offset, length);
  cursor->offset += length;
}

[[noreturn]] void png_fail(png_structp png, png_const_charp message) {
  png_last_error = message;
  png_longjmp(png, 1);
}

void png_warn(png_structp, png_const_charp) {}

// libpng reports errors by longjmp; these functions keep no objects with
// destructors alive across the setjmp point.
bool write_rows(png_structp png, png_infop info, const ButterflyRaster& raster, std::vector<std::uint8_t>* out,
                std::uint8_t* row) {
  if (setjmp(png_jmpbuf(png))) return false;
  png_set_write_fn(png, out, png_append, png_no_flush);
  png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width()), static_cast<png_uint_32>(raster.height()), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < raster.height(); ++y) {
    for (int x = 0; x < raster.width(); ++x) {
      const Rgb& px = raster.at(x, y);
      row[3 * x] = px.r;
      row[3 * x + 1] = px.g;
      row[3 * x + 2] = px.b;
    }
    png_write_row(png, row);
  }
  png_write_end(png, nullptr);
  return true;
}

bool read_header(png_structp png, png_infop info, PngReadCursor* cursor, png_uint_32* width, png_uint_32* height,
                 int* color_type, int* bit_depth) {
  if (setjmp(png_jmpbuf(png))) return false;
  png_set_read_fn(png, cursor, png_consume);
  png_read_info(png, info);
  *width = png_get_image_width(png, info);
  *height = png_get_image_height(png, info);
  *color_type = png_get_color_type(png, info);
  *bit_depth = png_get_bit_depth(png, info);
  return true;
}

bool read_rows(png_structp png, png_uint_32 width, png_uint_32 height, std::uint8_t* rgb) {
  if (setjmp(png_jmpbuf(png))) return false;
  for (png_uint_32 y = 0; y < height; ++y) png_read_row(png, rgb + static_cast<std::size_t>(y) * width * 3, nullptr);
  png_read_end(png, nullptr);
  return true;
}

}  // namespace

std::vector<std::uint8_t> encode_png(const ButterflyRaster& raster) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_fail, png_warn);
  if (png == nullptr) throw IoError("PNG: cannot allocate writer");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("PNG: cannot allocate info block");
  }
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> row(static_cast<std::size_t>(raster.width()) * 3);
  const bool ok = write_rows(png, info, raster, &out, row.data());
  png_destroy_write_struct(&png, &info);
  if (!ok) throw IoError("PNG: " + png_last_error);
  return out;
}

ButterflyRaster decode_png(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) throw IoError("PNG: bad signature");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_fail, png_warn);
  if (png == nullptr) throw IoError("PNG: cannot allocate reader");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("PNG: cannot allocate info block");
  }

  PngReadCursor cursor{&bytes, 0};
  png_uint_32 width = 0, height = 0;
  int color_type = 0, bit_depth = 0;
  if (!read_header(png, info, &cursor, &width, &height, &color_type, &bit_depth)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG: " + png_last_error);
  }
  if (color_type != PNG_COLOR_TYPE_RGB || bit_depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG: only 8-bit RGB images are supported");
  }
  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(width) * height * 3);
  const bool ok = read_rows(png, width, height, rgb.data());
  png_destroy_read_struct(&png, &info, nullptr);
  if (!ok) throw IoError("PNG: " + png_last_error);

  std::vector<Rgb> pixels(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < pixels.size(); ++i) pixels[i] = {rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]};
  return {static_cast<int>(width), static_cast<int>(height), std::move(pixels)};
}

std::string encode_svg(const ButterflyRaster& raster) {
  const std::string w = std::to_string(raster.width());
  const std::string h = std::to_string(raster.height());
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w +
         " " + h + "\" shape-rendering=\"crispEdges\">\n";
  char fill[8];
  for (int y = 0; y < raster.height(); ++y) {
    int x = 0;
    while (x < raster.width()) {
      const Rgb color = raster.at(x, y);
      int end = x + 1;
      while (end < raster.width() && raster.at(end, y) == color) ++end;
      std::snprintf(fill, sizeof fill, "#%02X%02X%02X", color.r, color.g, color.b);
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
             std::to_string(end - x) + "\" height=\"1\" fill=\"" + fill + "\"/>\n";
      x = end;
    }
  }
  out += "</svg>\n";
  return out;
}

void write_image(const ButterflyRaster& raster, ImageFormat format, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  switch (format) {
    case ImageFormat::Ppm: {
      const std::string bytes = encode_ppm(raster);
      file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      break;
    }
    case ImageFormat::Png: {
      const std::vector<std::uint8_t> bytes = encode_png(raster);
      file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
      break;
    }
    case ImageFormat::Svg: {
      const std::string bytes = encode_svg(raster);
      file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      break;
    }
  }
  file.close();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace hofstadter
