#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace slelab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Root of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Annular evolution asked to run up to or past the terminal time p.
struct AnnularTimeExceeded : Error {
  using Error::Error;
};

/// The integrator produced NaN or infinity (a step-size failure, not a swallow).
struct NonFiniteState : Error {
  using Error::Error;
};

/// Backward trace integration left the domain.
struct TipEscape : Error {
  using Error::Error;
};

/// Boundary-motion drift exceeded its configured bound.
struct SingularDrift : Error {
  using Error::Error;
};

/// A raising mode would leave the truncated Verma module.
struct TruncationOverflow : Error {
  using Error::Error;
};

/// A coefficient operator needs a variable beyond its cutoff.
struct CutoffExceeded : Error {
  using Error::Error;
};

/// Square root of q = a + ib in the closed upper half plane; for real positive q the
/// sign is taken from `sign_hint`. Used in every slit-map inner loop, so the root is formed
/// directly instead of through std::sqrt(complex) and a branch fix-up.
inline cplx upper_sqrt(double a, double b, double sign_hint) {
  const double m = std::sqrt(a * a + b * b);
  if (a >= 0.0) {
    const double t = std::sqrt(0.5 * (m + a));
    const bool negative = b != 0.0 ? b < 0.0 : sign_hint < 0.0;
    return {negative ? -t : t, t > 0.0 ? std::abs(b) / (2.0 * t) : 0.0};
  }
  const double t = std::sqrt(0.5 * (m - a));
  return {b / (2.0 * t), t};
}

/// SplitMix64 finaliser; used everywhere a seed has to be derived.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic per-sample seed: independent of worker layout.
inline std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(mix64(base) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace slelab
