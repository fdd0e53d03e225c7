#include "morphoseg/eps.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace morphoseg {

EpsMap compose_eps(const Image& edges, const LabelMap& segmentation,
                   const Palette& palette, double edge_gain) {
  if (edges.channels != 1) throw Error("compose_eps expects a grayscale edge map");
  if (edge_gain < 0.0) throw Error("edge gain must be non-negative");
  if (edges.width != segmentation.width || edges.height != segmentation.height)
    throw Error("edge map is " + std::to_string(edges.width) + "x" +
                std::to_string(edges.height) + " but segmentation is " +
                std::to_string(segmentation.width) + "x" +
                std::to_string(segmentation.height));

  EpsMap eps;
  eps.raster = labels_to_color(segmentation, palette);
  for (std::size_t i = 0; i < edges.data.size(); ++i) {
    int add = static_cast<int>(std::lround(edge_gain * edges.data[i]));
    add = std::clamp(add, 0, 255);
    if (add == 0) continue;
    std::uint8_t* px = eps.raster.data.data() + 3 * i;
    for (int c = 0; c < 3; ++c)
      px[c] = static_cast<std::uint8_t>(std::min(255, int(px[c]) + add));
  }
  return eps;
}

namespace {

// Largest Sobel response producible from 8-bit input (reached by a diagonal
// corner pattern where gx^2 + gy^2 = 20 * 255^2), in 1000-scaled luma units.
const double kSobelNorm = std::sqrt(20.0) * 1000.0;

}  // namespace

Image detect_edges(const Image& image, double low, double high) {
  if (!(low >= 0.0 && low <= high && high <= 1.0))
    throw Error("edge thresholds must satisfy 0 <= low <= high <= 1 (got low=" +
                std::to_string(low) + ", high=" + std::to_string(high) + ")");
  if (image.channels != 1 && image.channels != 3)
    throw Error("detect_edges expects a grayscale or RGB image");

  const int w = image.width, h = image.height;

  std::vector<std::int64_t> lum(image.pixel_count());
  if (image.channels == 3) {
    for (std::size_t i = 0; i < lum.size(); ++i)
      lum[i] = luma1000(image.data[3 * i], image.data[3 * i + 1], image.data[3 * i + 2]);
  } else {
    for (std::size_t i = 0; i < lum.size(); ++i)
      lum[i] = 1000 * static_cast<std::int64_t>(image.data[i]);
  }

  Image mag(w, h, 1);
  auto l = [&](int x, int y) {
    x = std::clamp(x, 0, w - 1);
    y = std::clamp(y, 0, h - 1);
    return lum[static_cast<std::size_t>(y) * w + x];
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      std::int64_t gx = (l(x + 1, y - 1) + 2 * l(x + 1, y) + l(x + 1, y + 1)) -
                        (l(x - 1, y - 1) + 2 * l(x - 1, y) + l(x - 1, y + 1));
      std::int64_t gy = (l(x - 1, y + 1) + 2 * l(x, y + 1) + l(x + 1, y + 1)) -
                        (l(x - 1, y - 1) + 2 * l(x, y - 1) + l(x + 1, y - 1));
      double m = std::sqrt(double(gx) * double(gx) + double(gy) * double(gy)) / kSobelNorm;
      mag.at(x, y) = static_cast<std::uint8_t>(std::floor(m + 0.5));
    }
  }

  const double strong = high * 255.0;
  const double weak = low * 255.0;

  // Hysteresis: flood out from strong pixels through 8-connected weak ones.
  std::vector<std::uint8_t> kept(mag.pixel_count(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < mag.data.size(); ++i) {
    if (mag.data[i] >= strong && !kept[i]) {
      kept[i] = 1;
      stack.push_back(i);
      while (!stack.empty()) {
        std::size_t p = stack.back();
        stack.pop_back();
        int px = static_cast<int>(p % w), py = static_cast<int>(p / w);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            int nx = px + dx, ny = py + dy;
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            std::size_t n = static_cast<std::size_t>(ny) * w + nx;
            if (!kept[n] && mag.data[n] >= weak) {
              kept[n] = 1;
              stack.push_back(n);
            }
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < mag.data.size(); ++i)
    if (!kept[i]) mag.data[i] = 0;
  return mag;
}

}  // namespace morphoseg
