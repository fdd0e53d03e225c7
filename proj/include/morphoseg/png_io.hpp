#pragma once

#include <string>

#include "morphoseg/image.hpp"

namespace morphoseg {

/// Decode an 8-bit grayscale or RGB PNG. An alpha channel, if present, is
/// dropped. 16-bit, sub-8-bit and palette-indexed files are rejected with an
/// error naming the path.
Image load_png(const std::string& path);

/// Encode as 8-bit grayscale (1 channel) or truecolor (3 channels) PNG.
/// Round-trips bit-exactly through load_png.
void save_png(const Image& image, const std::string& path);

}  // namespace morphoseg
