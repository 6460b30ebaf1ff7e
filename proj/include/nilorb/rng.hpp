#ifndef NILORB_RNG_HPP
#define NILORB_RNG_HPP

#include <cstdint>
#include <string>

namespace nilorb {

/// Deterministic splitmix64 generator. Fixed algorithm so that seeded runs
/// produce identical streams on every platform and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] via rejection sampling.
  long long uniform_int(long long lo, long long hi) {
    std::uint64_t span = std::uint64_t(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return lo + (long long)(v % span);
  }

private:
  std::uint64_t state_;
};

/// FNV-1a hash of a label, used to derive per-orbit seeds.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace nilorb

#endif
