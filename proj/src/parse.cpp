#include "cires/parse.hpp"

#include <cctype>
#include <vector>

namespace cires {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring), F_(ring->field()) {}

  Poly parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    terms.push_back(term(negate));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Term term(bool negate) {
    skip_ws();
    Term t{Monomial{}, 1};
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = coeff();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        factors(t.mono);
      }
    } else if (is_ident_start(peek())) {
      factors(t.mono);
    } else {
      throw ParseError(at_end() ? "unexpected end of input" : "expected a term", pos_);
    }
    if (negate) t.coeff = F_.neg(t.coeff);
    return t;
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Coeff coeff() {
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = F_.add(F_.mul(v, 10 % F_.characteristic()), F_.reduce(peek() - '0'));
      ++pos_;
    }
    return v;
  }

  std::uint64_t uint_exponent() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected an exponent", pos_);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > kMaxExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    return v;
  }

  void factors(Monomial& m) {
    while (true) {
      skip_ws();
      varpow(m);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
  }

  void varpow(Monomial& m) {
    std::size_t start = pos_;
    if (!is_ident_start(peek())) throw ParseError("expected a variable", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    auto idx = ring_->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      e = uint_exponent();
    }
    std::uint64_t total = m.exp[*idx] + e;
    if (total > kMaxExponent) throw ParseError("exponent overflow", start);
    m.exp[*idx] = static_cast<std::uint16_t>(total);
    m.deg += static_cast<std::uint32_t>(e);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const RingPtr& ring_;
  const PrimeField& F_;
};

}  // namespace

Poly poly_parse(std::string_view text, const RingPtr& ring) {
  if (!ring) throw std::invalid_argument("poly_parse needs a ring");
  return Parser(text, ring).parse();
}

}  // namespace cires
