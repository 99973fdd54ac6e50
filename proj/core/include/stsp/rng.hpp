#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace stsp {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a, for folding names into stream seeds.
constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; bounded draws use rejection
/// sampling implemented here (std::uniform_int_distribution is not portable
/// across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream for a (seed, label, counter) triple; independent of call order.
  static Rng stream(std::uint64_t seed, std::string_view label, std::uint64_t counter) {
    return Rng(splitmix64(splitmix64(seed ^ fnv1a(label)) + counter));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % n + 1) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() >> 63) != 0; }

  template <class Container>
  const auto& pick(const Container& c) {
    return c[below(c.size())];
  }

  template <class Container>
  void shuffle(Container& c) {
    for (std::size_t k = c.size(); k > 1; --k) {
      std::size_t j = below(k);
      std::swap(c[k - 1], c[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stsp
