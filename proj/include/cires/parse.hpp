#ifndef CIRES_PARSE_HPP
#define CIRES_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cires/poly.hpp"

namespace cires {

/// Raised for malformed polynomial text; carries the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   poly    := ['-'] term (('+'|'-') term)*
///   term    := coeff | coeff '*' factors | factors
///   factors := varpow ('*' varpow)*
///   varpow  := ident ('^' uint)?
///   coeff   := uint
/// Whitespace between tokens is ignored; coefficients are reduced mod p.
Poly poly_parse(std::string_view text, const RingPtr& ring);

}  // namespace cires

#endif
