#ifndef CIRES_MONOMIAL_HPP
#define CIRES_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace cires {

inline constexpr std::size_t kMaxVars = 8;
inline constexpr std::uint32_t kMaxExponent = 0xFFFF;

/// Exponent vector with cached total degree. Unused trailing slots stay zero,
/// so comparisons never need the variable count.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  static Monomial variable(std::size_t i, std::uint16_t e = 1) {
    Monomial m;
    m.exp[i] = e;
    m.deg = e;
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.exp == b.exp;
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  return r;
}

/// a / b; caller guarantees b divides a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  r.deg = a.deg - b.deg;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.deg = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    r.deg += r.exp[i];
  }
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

/// Graded reverse lexicographic comparison: higher degree first, then the
/// monomial with the smaller exponent in the last differing variable wins.
inline std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg <=> b.deg;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace cires

#endif
