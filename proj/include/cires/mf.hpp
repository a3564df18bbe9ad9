#ifndef CIRES_MF_HPP
#define CIRES_MF_HPP

#include <cstddef>
#include <vector>

#include "cires/graded_matrix.hpp"
#include "cires/resolution.hpp"

namespace cires {

/// Square pair with psi * phi = f * I and phi * psi = f * I.
/// phi : G -> H and psi : H(-deg f) -> G, in twist notation
/// phi has rows H, cols G; psi has rows G, cols H + deg f.
struct MatrixFactorization {
  GradedMatrix phi;
  GradedMatrix psi;
  Poly f;
};

/// Both product identities, exactly over Q, or modulo `ci` when given.
/// Throws std::invalid_argument on a shape mismatch.
bool mf_validate(const GradedMatrix& phi, const GradedMatrix& psi, const Poly& f,
                 const CIPresentation* ci = nullptr);
bool mf_validate(const MatrixFactorization& mf, const CIPresentation* ci = nullptr);

/// ... -> H(-d) -psi-> G -phi-> H -> coker phi over A, to the given length.
/// Throws when f is not in (ci.f), the pair is not a factorization, or
/// either matrix has a unit entry after reduction.
MinimalResolution mf_periodic_resolution(const MatrixFactorization& mf, CIPtr ci,
                                         std::size_t length);

/// phi is the minimalized presentation; psi solves phi * psi = f * I degree
/// by degree. Throws when the presentation is not square after removing
/// units or no solution exists.
MatrixFactorization mf_from_projdim1(const GradedMatrix& presentation, const Poly& f);

/// f_1 = c * l_1 ... l_d with linear l_i: phi = (l_1 ... l_{d-1}), psi = (c l_d).
MatrixFactorization ulrich_product(const CIPresentation& ci, const std::vector<Poly>& factors);
/// Product case for a monomial f_1, splitting off its last variable.
MatrixFactorization ulrich_product(const CIPresentation& ci);
/// f_1 = c * det L with L a d x d matrix of linear forms: phi = adj(L) / c, psi = L.
MatrixFactorization ulrich_determinantal(const CIPresentation& ci, const GradedMatrix& L);

/// Determinant by cofactor expansion along the first row.
Poly determinant(const GradedMatrix& m);
GradedMatrix adjugate(const GradedMatrix& m);

}  // namespace cires

#endif
