#pragma once

#include <cstdint>

#include "morphoseg/image.hpp"

namespace morphoseg {

enum class PerturbKind { Smooth, Carve, Warp };

/// One quality-degradation transform. level 0 is the identity for every kind;
/// the seed only matters for Warp.
struct PerturbationSpec {
  PerturbKind kind = PerturbKind::Smooth;
  int level = 0;
  std::uint64_t seed = 0;
};

/// Classic Kuwahara filter. For each pixel the four (r+1)x(r+1) square regions
/// meeting at it (the NW/NE/SW/SE quadrants of the (2r+1)x(2r+1) window) are
/// ranked by luma variance, sampled with clamp-to-edge borders; the output is
/// the per-channel mean of the least-variant region. Ties break in fixed
/// NW, NE, SW, SE order. All comparisons run in exact integer arithmetic on
/// 1000-scaled luma, and means round half up, so results are reproducible
/// bit for bit. radius must be in [1, 100].
Image kuwahara(const Image& image, int radius);

// Intensities below this survive no carving step: 64% of full scale (163.2),
// applied to integer samples as "values >= 163 are kept".
inline constexpr int kCarveThreshold = 163;

/// Iterative edge degradation. Each iteration zeroes every pixel below the
/// 64%-intensity threshold, then applies a radius-1 (3x3) normalized box blur
/// with clamp-to-edge borders, rounding half up. level 0 returns the input
/// unchanged.
Image carve_edges(const Image& edges, int level);

/// Two-stage mesh warp of a label map, used to degrade segmentation quality.
/// Stage 1 lays a 7x5 control grid (7 columns x 5 rows) evenly over the map,
/// border included, and shifts each of the 5x3 interior points by independent
/// N(0, level^2) offsets per axis; stage 2 uses a 3x3 grid and shifts only the
/// center point by distance 2*level in a uniformly random direction. Both
/// stages interpolate the displacement field bilinearly per grid cell and
/// backward-map with nearest-neighbor sampling, clamping source coordinates,
/// so the output contains only class indices present in the input. The stage-1
/// interior points consume Gaussian draws row-major (x offset then y offset),
/// then stage 2 draws its angle; all randomness comes from a SplitMix64
/// stream seeded with seed. level 0 is the identity.
LabelMap warp_labels(const LabelMap& labels, int level, std::uint64_t seed);

}  // namespace morphoseg
