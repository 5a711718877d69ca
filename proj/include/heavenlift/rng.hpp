#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace heavenlift {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based generator: every draw is a pure function of (seed, counter),
// so parallel and serial consumers see identical streams and reports are
// reproducible byte for byte.
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t raw(std::uint64_t counter) const {
    return splitmix64(splitmix64(seed) ^ splitmix64(~counter));
  }
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(raw(counter) >> 11) * 0x1.0p-53;
  }
  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }
};

using Point4Box = std::array<std::array<double, 2>, 4>;

// Box sampler with rejection: point i draws from counters i*64 + attempt*4 +
// dim, retrying up to 10 times when `valid` rejects (evaluator singularities
// are the intended reason).  Returns the accepted points; indices whose every
// attempt was rejected are simply skipped.
inline std::vector<std::array<double, 4>> sample_box(
    const CounterRng& rng, const Point4Box& box, int count,
    const std::function<bool(const std::array<double, 4>&)>& valid = {}) {
  std::vector<std::array<double, 4>> pts;
  pts.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    for (int attempt = 0; attempt < 10; ++attempt) {
      std::array<double, 4> p;
      for (int d = 0; d < 4; ++d) {
        const std::uint64_t c = static_cast<std::uint64_t>(i) * 64 +
                                static_cast<std::uint64_t>(attempt) * 4 +
                                static_cast<std::uint64_t>(d);
        p[static_cast<size_t>(d)] = rng.uniform(c, box[static_cast<size_t>(d)][0],
                                                box[static_cast<size_t>(d)][1]);
      }
      if (!valid || valid(p)) {
        pts.push_back(p);
        break;
      }
    }
  }
  return pts;
}

}  // namespace heavenlift
