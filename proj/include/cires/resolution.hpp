#ifndef CIRES_RESOLUTION_HPP
#define CIRES_RESOLUTION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "cires/ci_presentation.hpp"
#include "cires/graded_matrix.hpp"

namespace cires {

using CIPtr = std::shared_ptr<const CIPresentation>;

/// Minimal graded free resolution F_N -> ... -> F_0 -> M -> 0 over A.
struct MinimalResolution {
  CIPtr ci;
  std::vector<GradedMatrix> diffs;  // diffs[i-1] is d_i : F_i -> F_{i-1}
  std::vector<std::size_t> betti;   // beta_0 .. beta_N

  std::size_t length() const { return diffs.size(); }
  /// d_i for 1 <= i <= length().
  const GradedMatrix& differential(std::size_t i) const;
  /// Twists of the basis of F_i.
  std::vector<int> twists(std::size_t i) const;
  /// Presentation of the n-th syzygy module M_n = coker d_{n+1}; needs n < length().
  const GradedMatrix& syzygy_presentation(std::size_t n) const { return differential(n + 1); }
};

/// Normal form mod f, unit pivots removed, redundant columns dropped.
GradedMatrix minimal_presentation(const GradedMatrix& presentation, const CIPresentation& ci);

MinimalResolution minimal_resolution(const GradedMatrix& presentation, CIPtr ci, std::size_t length);

/// Splits off unit pieces: complex[k] maps into the source of complex[k-1]
/// (complex[k-1] * complex[k] = 0). Pivot: first unit entry, column-major,
/// lowest matrix index first. Entries are reduced mod f when `ci` is given.
std::vector<GradedMatrix> minimalize(std::vector<GradedMatrix> complex,
                                     const CIPresentation* ci = nullptr);

/// Minimum entry order of the normal-formed matrix; kOrdInfinity for zero.
int ord_matrix(const GradedMatrix& m, const CIPresentation& ci);

/// Ideal of r x r minors together with f, as a reduced monic basis.
/// Throws std::out_of_range unless 1 <= r <= min(rows, cols).
std::vector<Poly> minor_ideal(const GradedMatrix& m, std::size_t r, const CIPresentation& ci);

struct MinorIdealChain {
  std::size_t r = 0;
  std::size_t first_index = 0;
  std::vector<std::vector<Poly>> ideals;  // I^r_i for i = first_index, ...
  /// Least i with I^r_j = I^r_{j+2} for all j >= i in the computed range.
  std::optional<std::size_t> stabilization;
};

/// I^r_i(M) for first <= i <= last; r beyond the matrix size gives the
/// ideal (f), i.e. zero in A.
MinorIdealChain minor_ideal_chain(const MinimalResolution& res, std::size_t r, std::size_t first,
                                  std::size_t last);

/// Polynomial growth order of the Betti sequence over the last window of
/// eight entries, via finite differences on even and odd indices; 0 for a
/// zero tail. Throws std::invalid_argument for fewer than eight entries.
std::size_t complexity_estimate(const std::vector<std::size_t>& betti);

}  // namespace cires

#endif
