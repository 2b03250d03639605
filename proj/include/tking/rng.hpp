#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tking {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
///
/// Constants: increment 0x9E3779B97F4A7C15, multipliers 0xBF58476D1CE4E5B9
/// and 0x94D049BB133111EB, shifts 30/27/31. Every stream in the project is
/// built from this single function so results reproduce bit-for-bit in any
/// language that has 64-bit wrapping arithmetic.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Seed of sub-stream `index` under `master`: mix64(master + mix64(index + golden)).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(master + mix64(index + kGolden));
}

/// Counter-based generator: the i-th output is mix64(seed + (i+1)*golden).
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept {
    ++counter_;
    return mix64(seed_ + counter_ * kGolden);
  }

  /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi].
  double uniform_real(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01();
  }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

  /// Child generator for an independent purpose (instance vs. algorithm, ...).
  Rng fork(std::uint64_t index) const noexcept { return Rng(derive_seed(seed_, index)); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Fisher-Yates on the first `count` positions: afterwards items[0..count)
/// is a uniform sample without replacement, in uniform random order.
template <typename T>
void partial_shuffle(std::span<T> items, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_below(items.size() - i));
    std::swap(items[i], items[j]);
  }
}

}  // namespace tking
