#ifndef CIRES_HILBERT_HPP
#define CIRES_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cires/graded_matrix.hpp"
#include "cires/monomial.hpp"
#include "cires/poly.hpp"

namespace cires {

class CIPresentation;

/// Integer polynomial in z, coefficient of z^k at index k. Trailing zeros
/// are trimmed; the zero polynomial is empty.
using ZPoly = std::vector<std::int64_t>;

ZPoly zpoly_trim(ZPoly p);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
/// 1 + z + ... + z^{s-1}.
ZPoly zpoly_geometric(int s);
/// Exact quotient by (1 - z); throws std::logic_error when not divisible.
ZPoly zpoly_div_one_minus_z(const ZPoly& p);
std::int64_t zpoly_eval_one(const ZPoly& p);
/// Ascending powers of z, e.g. "1 + 2z + z^2".
std::string zpoly_to_string(const ZPoly& p);

/// H_M(z) = numerator(z) / (1 - z)^dim.
struct HilbertData {
  ZPoly numerator;
  int dim = 0;
  std::optional<std::int64_t> length;  // when dim == 0
};

/// Hilbert numerator K(z) of Q/I over (1 - z)^nvars for a monomial ideal.
ZPoly monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars);
/// Krull dimension of Q/I: largest set of variables containing the support
/// of no generator. -1 for the unit ideal.
int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

/// Hilbert series of coker(pres) over Q, or over A when `ci` is given.
/// Row twists must be nonnegative.
HilbertData hilbert_series(const GradedMatrix& pres, const CIPresentation* ci = nullptr);
/// Hilbert series of Q/(gens).
HilbertData hilbert_series_quotient(const std::vector<Poly>& gens, const RingPtr& ring);

/// Exact Hilbert-series test for a homogeneous regular sequence.
bool is_regular_sequence(const std::vector<Poly>& f, const RingPtr& ring);

}  // namespace cires

#endif
