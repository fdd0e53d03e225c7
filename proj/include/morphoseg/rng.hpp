#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <string_view>

namespace morphoseg {

// SplitMix64 (Steele et al.). Small, splittable, identical output on every
// platform, which is what the reproducibility contract needs. Not for crypto.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Deterministic distributions over SplitMix64. The order of draws is part of
/// the reproducibility contract; callers must not interleave unrelated draws
/// on a shared instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_.next(); }

  /// Uniform double in [0, 1).
  double u01() { return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  /// Uniform integer in [0, n), n >= 1.
  int uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(gen_.next()) *
                             static_cast<unsigned __int128>(n)) >> 64);
  }

  /// N(0, stddev^2) via Box-Muller; the second deviate of each pair is cached.
  double gauss(double stddev) {
    if (has_spare_) {
      has_spare_ = false;
      return spare_ * stddev;
    }
    double u1 = 1.0 - u01();  // (0, 1], keeps the log finite
    double u2 = u01();
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang) * stddev;
  }

 private:
  SplitMix64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Stable per-entry seed: FNV-1a over (base_seed, id, level, variant).
/// Output files depend only on this tuple, so removing entries from a manifest
/// or re-running a subset reproduces the remaining files byte for byte.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view id,
                                 std::uint64_t level = 0, std::uint64_t variant = 0) {
  unsigned char buf[8];
  auto put_u64 = [&buf](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  };
  std::uint64_t h = 0xcbf29ce484222325ull;
  put_u64(base_seed);
  h = fnv1a64(buf, 8, h);
  h = fnv1a64(id.data(), id.size(), h);
  h = fnv1a64("\0", 1, h);  // separates id bytes from the numeric tail
  put_u64(level);
  h = fnv1a64(buf, 8, h);
  put_u64(variant);
  h = fnv1a64(buf, 8, h);
  return h;
}

}  // namespace morphoseg
