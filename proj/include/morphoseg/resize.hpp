#pragma once

#include "morphoseg/image.hpp"

namespace morphoseg {

/// Center-aligned bilinear resampling with clamp-to-edge borders,
/// rounding half up. Resizing to the source size is the identity.
Image resize_bilinear(const Image& image, int out_w, int out_h);

/// Area-weighted downsampling: each output pixel averages the source rectangle
/// it covers (exact block mean for integral factors). Requires
/// out_w <= width and out_h <= height.
Image resize_area(const Image& image, int out_w, int out_h);

/// Area-weighted when shrinking in both dimensions, bilinear otherwise.
Image resize(const Image& image, int out_w, int out_h);

}  // namespace morphoseg
