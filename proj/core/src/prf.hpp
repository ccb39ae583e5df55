#pragma once

#include <cstdint>

namespace streamcert::detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t prf(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c = 0) {
  return mix64(mix64(mix64(seed ^ 0x5eedULL) ^ a) ^ mix64(b + 0x1234567ULL) ^ (c * 0x2545f4914f6cdd1dULL));
}

// True with probability rho, as a pure function of the arguments.
inline bool prf_coin(double rho, std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                     std::uint64_t c = 0) {
  if (rho >= 1.0) return true;
  if (rho <= 0.0) return false;
  return static_cast<double>(prf(seed, a, b, c) >> 11) * 0x1.0p-53 < rho;
}

}  // namespace streamcert::detail
