#include "morphoseg/palette.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "morphoseg/png_io.hpp"

#include <json.hpp>

namespace morphoseg {

namespace {

std::uint32_t pack_rgb(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return (static_cast<std::uint32_t>(r) << 16) | (static_cast<std::uint32_t>(g) << 8) | b;
}

std::string color_str(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return "(" + std::to_string(r) + ", " + std::to_string(g) + ", " + std::to_string(b) + ")";
}

}  // namespace

Palette::Palette(std::vector<PaletteEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("palette must contain at least one class");
  if (entries_.size() > 256) throw Error("palette supports at most 256 classes");
  std::sort(entries_.begin(), entries_.end(),
            [](const PaletteEntry& a, const PaletteEntry& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].id != static_cast<int>(i))
      throw Error("palette class ids must be 0.." + std::to_string(entries_.size() - 1) +
                  " without gaps (got id " + std::to_string(entries_[i].id) + ")");
    const auto& c = entries_[i].color;
    auto [it, inserted] = by_color_.emplace(pack_rgb(c[0], c[1], c[2]), entries_[i].id);
    if (!inserted)
      throw Error("palette display colors must be distinct: classes " +
                  std::to_string(it->second) + " and " + std::to_string(entries_[i].id) +
                  " both use " + color_str(c[0], c[1], c[2]));
  }
}

Palette Palette::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open palette file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw Error("invalid palette JSON in " + path + ": " + e.what());
  }
  if (!doc.is_array()) throw Error("palette file must be a JSON array: " + path);

  std::vector<PaletteEntry> entries;
  entries.reserve(doc.size());
  for (const auto& item : doc) {
    try {
      PaletteEntry e;
      e.id = item.at("id").get<int>();
      e.name = item.value("name", std::string{});
      const auto& col = item.at("color");
      if (!col.is_array() || col.size() != 3)
        throw Error("color must be a [r, g, b] triple");
      for (int i = 0; i < 3; ++i) {
        int v = col[static_cast<std::size_t>(i)].get<int>();
        if (v < 0 || v > 255) throw Error("color component out of range [0, 255]");
        e.color[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
      }
      entries.push_back(std::move(e));
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error("invalid palette entry in " + path + ": " + e.what());
    }
  }
  try {
    return Palette(std::move(entries));
  } catch (const Error& e) {
    throw Error(std::string(e.what()) + " (" + path + ")");
  }
}

std::optional<int> Palette::exact_class(std::uint8_t r, std::uint8_t g, std::uint8_t b) const {
  auto it = by_color_.find(pack_rgb(r, g, b));
  if (it == by_color_.end()) return std::nullopt;
  return it->second;
}

int Palette::nearest_class(std::uint8_t r, std::uint8_t g, std::uint8_t b, int& distance) const {
  int best = 0;
  int best_dist = 256;
  for (const auto& e : entries_) {
    int d = std::max({std::abs(int(r) - int(e.color[0])), std::abs(int(g) - int(e.color[1])),
                      std::abs(int(b) - int(e.color[2]))});
    if (d < best_dist) {
      best_dist = d;
      best = e.id;
    }
  }
  distance = best_dist;
  return best;
}

LabelMap color_to_labels(const Image& image, const Palette& palette, int tolerance) {
  if (image.channels != 3) throw Error("color_to_labels expects a 3-channel image");
  if (tolerance < 0) throw Error("tolerance must be non-negative");

  LabelMap out(image.width, image.height, palette.num_classes());
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      std::uint8_t r = image.at(x, y, 0), g = image.at(x, y, 1), b = image.at(x, y, 2);
      if (auto id = palette.exact_class(r, g, b)) {
        out.at(x, y) = static_cast<std::uint8_t>(*id);
        continue;
      }
      int dist = 0;
      int id = palette.nearest_class(r, g, b, dist);
      if (dist > tolerance)
        throw Error("no palette color within tolerance " + std::to_string(tolerance) +
                    " of pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                    ") with color " + color_str(r, g, b) +
                    " (nearest class " + std::to_string(id) + " at distance " +
                    std::to_string(dist) + ")");
      out.at(x, y) = static_cast<std::uint8_t>(id);
    }
  }
  return out;
}

Image labels_to_color(const LabelMap& labels, const Palette& palette) {
  const int k = palette.num_classes();
  Image out(labels.width, labels.height, 3);
  for (int y = 0; y < labels.height; ++y) {
    for (int x = 0; x < labels.width; ++x) {
      int label = labels.at(x, y);
      if (label >= k)
        throw Error("label " + std::to_string(label) + " out of range for " +
                    std::to_string(k) + "-class palette at pixel (" + std::to_string(x) +
                    ", " + std::to_string(y) + ")");
      const auto& c = palette.entry(label).color;
      out.at(x, y, 0) = c[0];
      out.at(x, y, 1) = c[1];
      out.at(x, y, 2) = c[2];
    }
  }
  return out;
}

LabelMap load_label_map(const std::string& path, const Palette& palette,
                        SegEncoding encoding, int tolerance) {
  Image img = load_png(path);
  if (encoding == SegEncoding::Color) {
    if (img.channels != 3)
      throw Error("expected color-coded RGB label map, got grayscale: " + path);
    try {
      return color_to_labels(img, palette, tolerance);
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + " in " + path);
    }
  }
  if (img.channels != 1)
    throw Error("expected index-encoded grayscale label map, got RGB: " + path);
  LabelMap out(img.width, img.height, palette.num_classes());
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    if (img.data[i] >= palette.num_classes())
      throw Error("class index " + std::to_string(img.data[i]) + " out of range for " +
                  std::to_string(palette.num_classes()) + "-class palette in " + path);
    out.labels[i] = img.data[i];
  }
  return out;
}

void save_label_map(const LabelMap& labels, const Palette& palette,
                    SegEncoding encoding, const std::string& path) {
  if (encoding == SegEncoding::Color) {
    save_png(labels_to_color(labels, palette), path);
    return;
  }
  Image img(labels.width, labels.height, 1);
  for (std::size_t i = 0; i < labels.labels.size(); ++i) {
    if (labels.labels[i] >= palette.num_classes())
      throw Error("label " + std::to_string(labels.labels[i]) +
                  " out of range for palette: " + path);
    img.data[i] = labels.labels[i];
  }
  save_png(img, path);
}

}  // namespace morphoseg
