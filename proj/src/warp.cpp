#include "morphoseg/ablation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "morphoseg/rng.hpp"

namespace morphoseg {

namespace {

// Per-axis displacements of a gw x gh control grid laid evenly over the map,
// border points included.
struct MeshField {
  int gw = 0, gh = 0;
  std::vector<double> dx, dy;

  MeshField(int w, int h)
      : gw(w), gh(h),
        dx(static_cast<std::size_t>(w) * h, 0.0),
        dy(static_cast<std::size_t>(w) * h, 0.0) {}

  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * gw + i; }
};

// Backward mesh warp with nearest-neighbor sampling. The displacement field is
// bilinear per grid cell; the sample for output pixel p comes from p + d(p),
// clamped to bounds, so labels stay valid class indices.
LabelMap apply_mesh_warp(const LabelMap& in, const MeshField& mesh) {
  const int w = in.width, h = in.height;
  const double gx_per_px = w > 1 ? double(mesh.gw - 1) / double(w - 1) : 0.0;
  const double gy_per_px = h > 1 ? double(mesh.gh - 1) / double(h - 1) : 0.0;

  LabelMap out(w, h, in.num_classes);
  std::vector<double> col_dx(static_cast<std::size_t>(mesh.gw));
  std::vector<double> col_dy(static_cast<std::size_t>(mesh.gw));

  for (int y = 0; y < h; ++y) {
    const double gy = y * gy_per_px;
    const int j = std::min(static_cast<int>(gy), mesh.gh - 2);
    const double fy = gy - j;
    for (int i = 0; i < mesh.gw; ++i) {
      const std::size_t a = mesh.idx(i, j), b = mesh.idx(i, j + 1);
      col_dx[static_cast<std::size_t>(i)] = mesh.dx[a] + fy * (mesh.dx[b] - mesh.dx[a]);
      col_dy[static_cast<std::size_t>(i)] = mesh.dy[a] + fy * (mesh.dy[b] - mesh.dy[a]);
    }
    for (int x = 0; x < w; ++x) {
      const double gx = x * gx_per_px;
      const int i = std::min(static_cast<int>(gx), mesh.gw - 2);
      const double fx = gx - i;
      const std::size_t si = static_cast<std::size_t>(i);
      const double ddx = col_dx[si] + fx * (col_dx[si + 1] - col_dx[si]);
      const double ddy = col_dy[si] + fx * (col_dy[si + 1] - col_dy[si]);
      const int sx = std::clamp(static_cast<int>(std::lround(x + ddx)), 0, w - 1);
      const int sy = std::clamp(static_cast<int>(std::lround(y + ddy)), 0, h - 1);
      out.at(x, y) = in.at(sx, sy);
    }
  }
  return out;
}

}  // namespace

LabelMap warp_labels(const LabelMap& labels, int level, std::uint64_t seed) {
  if (level < 0) throw Error("warp level must be non-negative");
  if (level == 0) return labels;

  Rng rng(seed);

  // Stage 1: fine distortion. 7 columns x 5 rows; only the 5x3 interior
  // points move, each by N(0, level^2) per axis.
  MeshField fine(7, 5);
  for (int j = 1; j < 4; ++j) {
    for (int i = 1; i < 6; ++i) {
      fine.dx[fine.idx(i, j)] = rng.gauss(level);
      fine.dy[fine.idx(i, j)] = rng.gauss(level);
    }
  }
  LabelMap warped = apply_mesh_warp(labels, fine);

  // Stage 2: coarse distortion. 3x3 grid, center shifted by 2*level in a
  // uniformly random direction.
  MeshField coarse(3, 3);
  const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
  coarse.dx[coarse.idx(1, 1)] = 2.0 * level * std::cos(ang);
  coarse.dy[coarse.idx(1, 1)] = 2.0 * level * std::sin(ang);
  return apply_mesh_warp(warped, coarse);
}

}  // namespace morphoseg
