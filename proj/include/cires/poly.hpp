#ifndef CIRES_POLY_HPP
#define CIRES_POLY_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cires/field.hpp"
#include "cires/monomial.hpp"

namespace cires {

/// Standard-graded polynomial ring F_p[x_1..x_n].
class Ring {
 public:
  Ring(std::uint32_t characteristic, std::vector<std::string> variables);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables);

/// Throws std::invalid_argument unless both handles describe the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// "natural or +infinity" for orders of elements, ideals and matrices.
inline constexpr int kOrdInfinity = std::numeric_limits<int>::max();

std::string ord_to_string(int ord);

/// Polynomial with terms sorted by descending degrevlex. No stored zero
/// coefficients; the zero polynomial has no terms.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, std::int64_t c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusted constructor: terms already canonical.
  static Poly from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const PrimeField& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }
  const Term& lead() const { return terms_.front(); }

  /// Highest total degree, -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.deg); }
  bool is_homogeneous() const;
  Coeff constant_term() const;
  Poly homogeneous_part(int d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Coeff c) const;
  Poly mul_term(const Monomial& m, Coeff c) const;
  /// Scales so the lead coefficient is 1 (zero stays zero).
  Poly monic() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Canonical form: descending degrevlex, least nonnegative residues.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

/// Lowest degree among nonzero terms; kOrdInfinity for zero.
int ord_poly(const Poly& p);

/// Lowest-degree homogeneous component. Throws std::invalid_argument on zero.
Poly initial_form(const Poly& p);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace cires

#endif
