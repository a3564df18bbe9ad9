#ifndef CIRES_FIELD_HPP
#define CIRES_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cires {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/p for a word-sized prime p. Values are least
/// nonnegative residues.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff reduce_unsigned(std::uint64_t v) const { return static_cast<Coeff>(v % p_); }

  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2], used only for display.
  std::int64_t centered(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// A field element bundled with its characteristic.
struct PrimeFieldElement {
  Coeff value = 0;
  std::uint32_t characteristic = kDefaultCharacteristic;

  PrimeFieldElement() = default;
  PrimeFieldElement(std::int64_t v, std::uint32_t p)
      : value(PrimeField(p).reduce(v)), characteristic(p) {}

  friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
    check(a, b);
    a.value = PrimeField(a.characteristic).add(a.value, b.value);
    return a;
  }
  friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
    check(a, b);
    a.value = PrimeField(a.characteristic).sub(a.value, b.value);
    return a;
  }
  friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
    check(a, b);
    a.value = PrimeField(a.characteristic).mul(a.value, b.value);
    return a;
  }
  PrimeFieldElement inverse() const {
    PrimeFieldElement r = *this;
    r.value = PrimeField(characteristic).inv(value);
    return r;
  }
  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

 private:
  static void check(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.characteristic != b.characteristic)
      throw std::invalid_argument("field characteristic mismatch");
  }
};

}  // namespace cires

#endif
