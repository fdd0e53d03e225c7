#pragma once

#include <string>

#include "morphoseg/image.hpp"
#include "morphoseg/palette.hpp"

namespace morphoseg {

/// Edge-plus-segmentation map: a color-coded segmentation with a grayscale
/// edge map added on top. Provenance ids are filled in by batch jobs.
struct EpsMap {
  Image raster;  // RGB
  std::string edge_source;
  std::string seg_source;
};

/// Saturating channel-wise addition of the edge intensity onto the class
/// display color of every pixel: out = min(255, color + round(gain * edge)).
/// Addition never darkens, so every channel stays >= the pure segmentation
/// color. Inputs must have identical dimensions.
EpsMap compose_eps(const Image& edges, const LabelMap& segmentation,
                   const Palette& palette, double edge_gain = 1.0);

/// Built-in edge detector used when no external edge maps are available:
/// 3x3 Sobel on Rec.601 luma, magnitudes scaled so the strongest producible
/// response maps to 255, then double-threshold hysteresis. Pixels >= high*255
/// are kept outright; pixels in [low*255, high*255) survive only when
/// 8-connected (transitively) to a kept pixel. Survivors keep their graded
/// magnitude; everything else is zeroed. low = high = 0 disables thresholding.
Image detect_edges(const Image& image, double low, double high);

}  // namespace morphoseg
