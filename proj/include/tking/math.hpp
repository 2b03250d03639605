#pragma once

#include <cmath>
#include <cstdint>

namespace tking {

/// Smallest s with s*s >= n.
inline std::uint64_t ceil_sqrt(std::uint64_t n) noexcept {
  std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= n) --s;
  return s;
}

/// Smallest b with 2^b >= n (0 for n <= 1).
constexpr std::uint64_t ceil_log2(std::uint64_t n) noexcept {
  std::uint64_t b = 0;
  while (b < 64 && (std::uint64_t{1} << b) < n) ++b;
  return b;
}

/// ceil(log2(log2(max(n, 4)))), at least 1.
inline std::uint64_t ceil_log2_log2(std::uint64_t n) noexcept {
  const double inner = std::log2(std::log2(static_cast<double>(n < 4 ? 4 : n)));
  const auto k = static_cast<std::uint64_t>(std::ceil(inner - 1e-12));
  return k < 1 ? 1 : k;
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace tking
