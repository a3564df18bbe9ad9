#include "cires/ci_presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace cires {

CIPresentation::CIPresentation(RingPtr ring, std::vector<Poly> f) : ring_(std::move(ring)), f_(std::move(f)) {
  for (const auto& p : f_) {
    if (p.is_zero() || !p.is_homogeneous() || p.degree() < 1)
      throw std::invalid_argument("complete intersection relations must be nonzero forms of positive degree, got " +
                                  p.to_string());
    require_same_ring(ring_, p.ring());
  }
  std::stable_sort(f_.begin(), f_.end(), [](const Poly& a, const Poly& b) { return a.degree() > b.degree(); });
  gb_ = groebner_basis(f_, ring_, true);
  hilbert_ = hilbert_series_quotient(f_, ring_);
  ZPoly expected{1};
  for (const auto& p : f_) expected = zpoly_mul(expected, zpoly_geometric(p.degree()));
  if (hilbert_.dim != static_cast<int>(ring_->nvars()) - static_cast<int>(f_.size()) ||
      hilbert_.numerator != expected)
    throw std::invalid_argument("relations do not form a regular sequence: Hilbert numerator " +
                                zpoly_to_string(hilbert_.numerator) + " with dim " +
                                std::to_string(hilbert_.dim) + ", expected " + zpoly_to_string(expected) +
                                " with dim " + std::to_string(static_cast<int>(ring_->nvars()) -
                                                              static_cast<int>(f_.size())));
}

std::vector<int> CIPresentation::degrees() const {
  std::vector<int> d;
  for (const auto& p : f_) d.push_back(p.degree());
  return d;
}

Poly CIPresentation::normal_form(const Poly& p) const {
  if (f_.empty()) return p;
  return cires::normal_form(p, gb_);
}

GradedMatrix CIPresentation::reduce(const GradedMatrix& m) const {
  GradedMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!r.at(i, j).is_zero()) r.at(i, j) = normal_form(r.at(i, j));
  return r;
}

std::vector<Poly> CIPresentation::division(const Poly& p) const {
  std::vector<Poly> c(f_.size(), Poly(ring_));
  if (f_.empty() || p.is_zero()) return c;
  auto nf = cires::normal_form(FreeModuleElement{{p}, {0}}, gb_);
  const auto& rep = gb_.representation();
  for (std::size_t g = 0; g < nf.cofactors.size(); ++g) {
    if (nf.cofactors[g].is_zero()) continue;
    for (std::size_t k = 0; k < f_.size(); ++k)
      if (!rep[g][k].is_zero()) c[k] += nf.cofactors[g] * rep[g][k];
  }
  return c;
}

bool ideal_equal(const std::vector<Poly>& I, const std::vector<Poly>& J, const CIPresentation& ci) {
  std::vector<Poly> a = I, b = J;
  a.insert(a.end(), ci.relations().begin(), ci.relations().end());
  b.insert(b.end(), ci.relations().begin(), ci.relations().end());
  return reduced_ideal_basis(a, ci.ring()) == reduced_ideal_basis(b, ci.ring());
}

}  // namespace cires
