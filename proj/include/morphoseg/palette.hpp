#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphoseg/image.hpp"

namespace morphoseg {

struct PaletteEntry {
  int id = 0;
  std::string name;
  std::array<std::uint8_t, 3> color{0, 0, 0};
};

/// Ordered class-id -> display-color table. Ids must be 0..K-1 without gaps
/// and display colors pairwise distinct, so color <-> index conversion is a
/// lossless round trip.
class Palette {
 public:
  explicit Palette(std::vector<PaletteEntry> entries);

  /// Reads a JSON array of {"id": n, "name": "...", "color": [r, g, b]}.
  static Palette load_json(const std::string& path);

  int num_classes() const { return static_cast<int>(entries_.size()); }
  const PaletteEntry& entry(int id) const { return entries_[static_cast<std::size_t>(id)]; }
  const std::vector<PaletteEntry>& entries() const { return entries_; }

  std::optional<int> exact_class(std::uint8_t r, std::uint8_t g, std::uint8_t b) const;

  /// Class whose color is nearest in L-infinity distance; lowest id wins ties.
  int nearest_class(std::uint8_t r, std::uint8_t g, std::uint8_t b, int& distance) const;

 private:
  std::vector<PaletteEntry> entries_;
  std::unordered_map<std::uint32_t, int> by_color_;
};

/// Map every pixel to the class whose display color is nearest in L-infinity
/// distance, provided that distance <= tolerance. A pixel with no class within
/// tolerance is an error reporting its coordinate and color.
LabelMap color_to_labels(const Image& image, const Palette& palette, int tolerance = 0);

/// Paint every pixel with its class display color. Exact inverse of
/// color_to_labels at tolerance 0.
Image labels_to_color(const LabelMap& labels, const Palette& palette);

/// How a label map is stored on disk: color-coded RGB PNG decoded through the
/// palette, or single-channel PNG whose gray values are raw class indices.
enum class SegEncoding { Color, Index };

LabelMap load_label_map(const std::string& path, const Palette& palette,
                        SegEncoding encoding, int tolerance = 0);
void save_label_map(const LabelMap& labels, const Palette& palette,
                    SegEncoding encoding, const std::string& path);

}  // namespace morphoseg
