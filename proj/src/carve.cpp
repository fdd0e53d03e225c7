#include "morphoseg/ablation.hpp"

#include <algorithm>
#include <vector>

namespace morphoseg {

namespace {

// 3x3 normalized box blur, clamp-to-edge, round half up. Separable: row sums
// of three first, then column sums, one division at the end.
Image box_blur3(const Image& in) {
  const int w = in.width, h = in.height;
  std::vector<std::uint16_t> hsum(in.pixel_count());
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* row = in.data.data() + static_cast<std::size_t>(y) * w;
    std::uint16_t* out = hsum.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      int xl = std::max(x - 1, 0), xr = std::min(x + 1, w - 1);
      out[x] = static_cast<std::uint16_t>(row[xl] + row[x] + row[xr]);
    }
  }
  Image out(w, h, 1);
  for (int y = 0; y < h; ++y) {
    int yt = std::max(y - 1, 0), yb = std::min(y + 1, h - 1);
    const std::uint16_t* rt = hsum.data() + static_cast<std::size_t>(yt) * w;
    const std::uint16_t* rm = hsum.data() + static_cast<std::size_t>(y) * w;
    const std::uint16_t* rb = hsum.data() + static_cast<std::size_t>(yb) * w;
    std::uint8_t* dst = out.data.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      std::uint32_t sum = std::uint32_t(rt[x]) + rm[x] + rb[x];
      dst[x] = static_cast<std::uint8_t>((2 * sum + 9) / 18);
    }
  }
  return out;
}

}  // namespace

Image carve_edges(const Image& edges, int level) {
  if (edges.channels != 1) throw Error("carve_edges expects a grayscale edge map");
  if (level < 0) throw Error("carve level must be non-negative");

  Image cur = edges;
  for (int it = 0; it < level; ++it) {
    for (auto& v : cur.data)
      if (v < kCarveThreshold) v = 0;
    cur = box_blur3(cur);
  }
  return cur;
}

}  // namespace morphoseg
