#include "morphoseg/resize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace morphoseg {

namespace {

void check_target(int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) throw Error("resize target must be at least 1x1");
}

}  // namespace

Image resize_bilinear(const Image& image, int out_w, int out_h) {
  check_target(out_w, out_h);
  const int w = image.width, h = image.height, ch = image.channels;
  const double sx = double(w) / out_w, sy = double(h) / out_h;

  Image out(out_w, out_h, ch);
  for (int y = 0; y < out_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    int y0 = static_cast<int>(std::floor(fy));
    double wy = fy - y0;
    int ya = std::clamp(y0, 0, h - 1), yb = std::clamp(y0 + 1, 0, h - 1);
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      int x0 = static_cast<int>(std::floor(fx));
      double wx = fx - x0;
      int xa = std::clamp(x0, 0, w - 1), xb = std::clamp(x0 + 1, 0, w - 1);
      for (int c = 0; c < ch; ++c) {
        double top = image.at(xa, ya, c) + wx * (image.at(xb, ya, c) - image.at(xa, ya, c));
        double bot = image.at(xa, yb, c) + wx * (image.at(xb, yb, c) - image.at(xa, yb, c));
        double v = top + wy * (bot - top);
        out.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

Image resize_area(const Image& image, int out_w, int out_h) {
  check_target(out_w, out_h);
  if (out_w > image.width || out_h > image.height)
    throw Error("resize_area only downsamples (" + std::to_string(image.width) + "x" +
                std::to_string(image.height) + " -> " + std::to_string(out_w) + "x" +
                std::to_string(out_h) + ")");

  const int w = image.width, h = image.height, ch = image.channels;
  const double sx = double(w) / out_w, sy = double(h) / out_h;

  Image out(out_w, out_h, ch);
  std::vector<double> acc(static_cast<std::size_t>(ch));
  for (int y = 0; y < out_h; ++y) {
    const double y_lo = y * sy, y_hi = (y + 1) * sy;
    const int iy0 = static_cast<int>(std::floor(y_lo));
    const int iy1 = std::min(static_cast<int>(std::ceil(y_hi)), h);
    for (int x = 0; x < out_w; ++x) {
      const double x_lo = x * sx, x_hi = (x + 1) * sx;
      const int ix0 = static_cast<int>(std::floor(x_lo));
      const int ix1 = std::min(static_cast<int>(std::ceil(x_hi)), w);

      std::fill(acc.begin(), acc.end(), 0.0);
      double area = 0.0;
      for (int iy = iy0; iy < iy1; ++iy) {
        const double cov_y = std::min<double>(iy + 1, y_hi) - std::max<double>(iy, y_lo);
        for (int ix = ix0; ix < ix1; ++ix) {
          const double cov = cov_y * (std::min<double>(ix + 1, x_hi) - std::max<double>(ix, x_lo));
          area += cov;
          for (int c = 0; c < ch; ++c) acc[static_cast<std::size_t>(c)] += cov * image.at(ix, iy, c);
        }
      }
      for (int c = 0; c < ch; ++c) {
        double v = acc[static_cast<std::size_t>(c)] / area;
        out.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
      }
    }
  }
  return out;
}

Image resize(const Image& image, int out_w, int out_h) {
  check_target(out_w, out_h);
  if (out_w <= image.width && out_h <= image.height) return resize_area(image, out_w, out_h);
  return resize_bilinear(image, out_w, out_h);
}

}  // namespace morphoseg
