#ifndef CIRES_CI_PRESENTATION_HPP
#define CIRES_CI_PRESENTATION_HPP

#include <vector>

#include "cires/graded_matrix.hpp"
#include "cires/groebner.hpp"
#include "cires/hilbert.hpp"
#include "cires/poly.hpp"

namespace cires {

/// A = Q/(f) for a homogeneous regular sequence f, stored with degrees
/// s_1 >= ... >= s_c (stable sort of the input).
class CIPresentation {
 public:
  /// Throws std::invalid_argument unless f is a homogeneous regular sequence
  /// of positive-degree forms.
  CIPresentation(RingPtr ring, std::vector<Poly> f);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& relations() const { return f_; }
  std::vector<int> degrees() const;
  std::size_t codim() const { return f_.size(); }
  std::size_t nvars() const { return ring_->nvars(); }

  /// Reduced Groebner basis of (f) with its representation in terms of f.
  const GroebnerBasis& basis() const { return gb_; }
  /// Hilbert series of A; the regular-sequence certificate.
  const HilbertData& hilbert() const { return hilbert_; }
  bool is_artinian() const { return hilbert_.dim == 0; }

  Poly normal_form(const Poly& p) const;
  GradedMatrix reduce(const GradedMatrix& m) const;
  /// Coefficients c with p = sum_k c[k] f[k] + normal_form(p).
  std::vector<Poly> division(const Poly& p) const;

 private:
  RingPtr ring_;
  std::vector<Poly> f_;
  GroebnerBasis gb_;
  HilbertData hilbert_;
};

}  // namespace cires

#endif
