#include "morphoseg/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <vector>

namespace morphoseg {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void png_error_to_exception(png_structp, png_const_charp msg) {
  throw Error(std::string("libpng: ") + (msg ? msg : "unknown error"));
}

void png_warning_ignore(png_structp, png_const_charp) {}

struct ReadCtx {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~ReadCtx() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct WriteCtx {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~WriteCtx() { png_destroy_write_struct(&png, &info); }
};

}  // namespace

Image load_png(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw Error("cannot open PNG file: " + path);

  ReadCtx ctx;
  ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                   png_error_to_exception, png_warning_ignore);
  if (!ctx.png) throw Error("failed to allocate PNG reader: " + path);
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw Error("failed to allocate PNG info: " + path);

  try {
    png_init_io(ctx.png, file.get());
    png_read_info(ctx.png, ctx.info);

    const int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
    const int color_type = png_get_color_type(ctx.png, ctx.info);
    if (bit_depth != 8)
      throw Error("unsupported bit depth (" + std::to_string(bit_depth) +
                  "-bit, only 8-bit is supported): " + path);
    if (color_type == PNG_COLOR_TYPE_PALETTE)
      throw Error("unsupported color type (palette-indexed): " + path);

    int channels;
    switch (color_type) {
      case PNG_COLOR_TYPE_GRAY:
        channels = 1;
        break;
      case PNG_COLOR_TYPE_GRAY_ALPHA:
        png_set_strip_alpha(ctx.png);
        channels = 1;
        break;
      case PNG_COLOR_TYPE_RGB:
        channels = 3;
        break;
      case PNG_COLOR_TYPE_RGB_ALPHA:
        png_set_strip_alpha(ctx.png);
        channels = 3;
        break;
      default:
        throw Error("unsupported color type (" + std::to_string(color_type) + "): " + path);
    }

    png_set_interlace_handling(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    const png_uint_32 width = png_get_image_width(ctx.png, ctx.info);
    const png_uint_32 height = png_get_image_height(ctx.png, ctx.info);
    if (width < 1 || height < 1) throw Error("empty PNG image: " + path);

    Image image(static_cast<int>(width), static_cast<int>(height), channels);
    std::vector<png_bytep> rows(height);
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (png_uint_32 y = 0; y < height; ++y) rows[y] = image.data.data() + y * stride;

    png_read_image(ctx.png, rows.data());
    png_read_end(ctx.png, nullptr);
    return image;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string(e.what()) + ": " + path);
  }
}

void save_png(const Image& image, const std::string& path) {
  if (image.width < 1 || image.height < 1)
    throw Error("cannot save empty image: " + path);
  if (image.channels != 1 && image.channels != 3)
    throw Error("cannot save image with " + std::to_string(image.channels) +
                " channels: " + path);
  if (image.data.size() != image.pixel_count() * image.channels)
    throw Error("image data size does not match dimensions: " + path);

  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw Error("cannot open file for writing: " + path);

  WriteCtx ctx;
  ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                    png_error_to_exception, png_warning_ignore);
  if (!ctx.png) throw Error("failed to allocate PNG writer: " + path);
  ctx.info = png_create_info_struct(ctx.png);
  if (!ctx.info) throw Error("failed to allocate PNG info: " + path);

  try {
    png_init_io(ctx.png, file.get());
    png_set_IHDR(ctx.png, ctx.info, image.width, image.height, 8,
                 image.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);

    const std::size_t stride = static_cast<std::size_t>(image.width) * image.channels;
    for (int y = 0; y < image.height; ++y)
      png_write_row(ctx.png, const_cast<png_bytep>(image.data.data() + y * stride));
    png_write_end(ctx.png, nullptr);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string(e.what()) + ": " + path);
  }

  if (std::fflush(file.get()) != 0) throw Error("write failed: " + path);
}

}  // namespace morphoseg
