#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "morphoseg/error.hpp"

namespace morphoseg {

/// 8-bit raster with interleaved row-major samples.
/// channels is 1 (grayscale) or 3 (RGB); data.size() == width*height*channels.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  Image() = default;

  Image(int w, int h, int c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {
    if (w < 1 || h < 1) throw Error("image dimensions must be positive");
    if (c != 1 && c != 3) throw Error("image must have 1 or 3 channels");
  }

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }

  std::uint8_t at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
  std::uint8_t& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  bool same_size(const Image& o) const { return width == o.width && height == o.height; }

  bool operator==(const Image&) const = default;
};

/// Per-pixel class indices in [0, num_classes).
struct LabelMap {
  int width = 0;
  int height = 0;
  int num_classes = 0;
  std::vector<std::uint8_t> labels;

  LabelMap() = default;

  LabelMap(int w, int h, int k, std::uint8_t fill = 0)
      : width(w), height(h), num_classes(k),
        labels(static_cast<std::size_t>(w) * h, fill) {
    if (w < 1 || h < 1) throw Error("label map dimensions must be positive");
    if (k < 1 || k > 256) throw Error("class count must be in [1, 256]");
  }

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }

  std::uint8_t at(int x, int y) const { return labels[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return labels[index(x, y)]; }

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  bool operator==(const LabelMap&) const = default;
};

// Rec.601 luma scaled by 1000 so filter comparisons stay in exact integer
// arithmetic: 299*R + 587*G + 114*B, range [0, 255000].
inline std::int64_t luma1000(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return 299 * static_cast<std::int64_t>(r) + 587 * static_cast<std::int64_t>(g) +
         114 * static_cast<std::int64_t>(b);
}

// Round-half-up division of a non-negative sum by a positive count.
inline std::uint8_t round_div_u8(std::uint64_t sum, std::uint64_t count) {
  std::uint64_t q = (2 * sum + count) / (2 * count);
  return static_cast<std::uint8_t>(q > 255 ? 255 : q);
}

}  // namespace morphoseg
