#include "cires/poly.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <stdexcept>

namespace cires {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > (1u << 31))
    throw std::invalid_argument("characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

Ring::Ring(std::uint32_t characteristic, std::vector<std::string> variables)
    : field_(characteristic), vars_(std::move(variables)) {
  if (vars_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw std::invalid_argument("invalid variable name '" + v + "'");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw std::invalid_argument("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j] == v) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::uint32_t characteristic, std::vector<std::string> variables) {
  return std::make_shared<const Ring>(characteristic, std::move(variables));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw std::invalid_argument("ring mismatch");
}

std::string ord_to_string(int ord) {
  return ord == kOrdInfinity ? "inf" : std::to_string(ord);
}

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex(a.mono, b.mono) > 0; }

// Merge a + scale*b for canonical term lists.
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, Coeff scale,
                            const PrimeField& F) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].mono, F.mul(b[j].coeff, scale)});
      ++j;
      continue;
    }
    auto c = degrevlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, F.mul(b[j].coeff, scale)});
      ++j;
    } else {
      Coeff s = F.add(a[i].coeff, F.mul(b[j].coeff, scale));
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::constant(RingPtr ring, std::int64_t c) {
  Poly p(std::move(ring));
  Coeff v = p.field().reduce(c);
  if (v != 0) p.terms_.push_back({Monomial{}, v});
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
  Poly p(std::move(ring));
  p.terms_.push_back({Monomial::variable(index), 1});
  return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Poly p(std::move(ring));
  c = p.field().reduce_unsigned(c);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  const auto& F = p.field();
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    t.coeff = F.reduce_unsigned(t.coeff);
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(t);
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

Coeff Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Poly Poly::homogeneous_part(int d) const {
  Poly p(ring_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.mono.deg) == d) p.terms_.push_back(t);
  return p;
}

Poly Poly::operator-() const {
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, field().neg(t.coeff)});
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.is_zero()) return *this;
  require_same_ring(ring_, o.ring_);
  terms_ = merge_add(terms_, o.terms_, 1, field());
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  if (o.is_zero()) return *this;
  require_same_ring(ring_, o.ring_);
  terms_ = merge_add(terms_, o.terms_, field().neg(1), field());
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  RingPtr ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_);
  Poly r(ring);
  if (a.is_zero() || b.is_zero()) return r;
  const auto& F = ring->field();
  if (a.size() == 1) return b.mul_term(a.lead().mono, a.lead().coeff);
  if (b.size() == 1) return a.mul_term(b.lead().mono, b.lead().coeff);
  std::vector<Term> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
  std::sort(acc.begin(), acc.end(), term_greater);
  for (const auto& t : acc) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = F.add(r.terms_.back().coeff, t.coeff);
    } else {
      if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
      r.terms_.push_back(t);
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
  return r;
}

Poly Poly::scaled(Coeff c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, field().mul(t.coeff, c)});
  return p;
}

Poly Poly::mul_term(const Monomial& m, Coeff c) const {
  Poly p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, field().mul(t.coeff, c)});
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead().coeff));
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '+';
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + '*';
      s += monomial_to_string(t.mono, *ring_);
    }
  }
  return s;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

int ord_poly(const Poly& p) {
  if (p.is_zero()) return kOrdInfinity;
  return static_cast<int>(p.terms().back().mono.deg);
}

Poly initial_form(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  return p.homogeneous_part(ord_poly(p));
}

}  // namespace cires
