#include "morphoseg/ablation.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace morphoseg {

Image kuwahara(const Image& image, int radius) {
  if (radius < 1)
    throw Error("kuwahara radius must be >= 1 (got " + std::to_string(radius) +
                "); use level 0 for the identity");
  if (radius > 100) throw Error("kuwahara radius must be <= 100");
  if (image.channels != 3) throw Error("kuwahara expects a 3-channel image");

  const int w = image.width, h = image.height;
  const std::uint64_t n = static_cast<std::uint64_t>(radius + 1) * (radius + 1);

  std::vector<std::int64_t> lum(image.pixel_count());
  for (std::size_t i = 0; i < lum.size(); ++i)
    lum[i] = luma1000(image.data[3 * i], image.data[3 * i + 1], image.data[3 * i + 2]);

  // Clamp-to-edge lookup tables; regions can hang past every border.
  std::vector<int> cx(static_cast<std::size_t>(w) + 2 * radius);
  std::vector<int> cy(static_cast<std::size_t>(h) + 2 * radius);
  for (int i = 0; i < static_cast<int>(cx.size()); ++i)
    cx[static_cast<std::size_t>(i)] = std::clamp(i - radius, 0, w - 1);
  for (int i = 0; i < static_cast<int>(cy.size()); ++i)
    cy[static_cast<std::size_t>(i)] = std::clamp(i - radius, 0, h - 1);

  Image out(w, h, 3);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      // Region k spans [x0[k], x0[k]+radius] x [y0[k], y0[k]+radius] before
      // clamping, in fixed NW, NE, SW, SE order.
      const std::array<int, 4> x0{x - radius, x, x - radius, x};
      const std::array<int, 4> y0{y - radius, y - radius, y, y};

      std::uint64_t best_score = 0;
      std::uint64_t best_r = 0, best_g = 0, best_b = 0;
      bool have_best = false;

      for (int k = 0; k < 4; ++k) {
        std::uint64_t sl = 0, sll = 0, sr = 0, sg = 0, sb = 0;
        for (int dy = 0; dy <= radius; ++dy) {
          const int yy = cy[static_cast<std::size_t>(y0[static_cast<std::size_t>(k)] + dy + radius)];
          const std::int64_t* lrow = lum.data() + static_cast<std::size_t>(yy) * w;
          const std::uint8_t* prow = image.data.data() + static_cast<std::size_t>(yy) * w * 3;
          for (int dx = 0; dx <= radius; ++dx) {
            const int xx = cx[static_cast<std::size_t>(x0[static_cast<std::size_t>(k)] + dx + radius)];
            const std::uint64_t lv = static_cast<std::uint64_t>(lrow[xx]);
            sl += lv;
            sll += lv * lv;
            sr += prow[3 * xx];
            sg += prow[3 * xx + 1];
            sb += prow[3 * xx + 2];
          }
        }
        // n * E[l^2] - n * E[l]^2, scaled by n^2: exact variance ordering.
        const std::uint64_t score = n * sll - sl * sl;
        if (!have_best || score < best_score) {
          have_best = true;
          best_score = score;
          best_r = sr;
          best_g = sg;
          best_b = sb;
        }
      }

      out.at(x, y, 0) = round_div_u8(best_r, n);
      out.at(x, y, 1) = round_div_u8(best_g, n);
      out.at(x, y, 2) = round_div_u8(best_b, n);
    }
  }
  return out;
}

}  // namespace morphoseg
