#ifndef CIRES_GROEBNER_HPP
#define CIRES_GROEBNER_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "cires/graded_matrix.hpp"
#include "cires/poly.hpp"

namespace cires {

class CIPresentation;

namespace detail {
class Reducer;
}

enum class ModuleOrder {
  PositionOverTerm,  // component first (smaller index is bigger), then degrevlex
  TermOverPosition,  // twisted degree, then degrevlex, then component
};

struct MonomialOrder {
  ModuleOrder kind = ModuleOrder::PositionOverTerm;
};

/// Element of the graded free module (+)_i R(-twists[i]).
struct FreeModuleElement {
  std::vector<Poly> components;
  std::vector<int> twists;

  static FreeModuleElement zero(const RingPtr& ring, std::vector<int> twists);
  std::size_t rank() const { return components.size(); }
  bool is_zero() const;
  /// Zero, or every nonzero component has the same twisted degree.
  bool is_homogeneous() const;
  bool operator==(const FreeModuleElement& o) const { return components == o.components; }
};

class GroebnerBasis {
 public:
  GroebnerBasis();
  ~GroebnerBasis();
  GroebnerBasis(const GroebnerBasis&);
  GroebnerBasis& operator=(const GroebnerBasis&);
  GroebnerBasis(GroebnerBasis&&) noexcept;
  GroebnerBasis& operator=(GroebnerBasis&&) noexcept;

  /// Reduced, monic, sorted by descending lead term.
  const std::vector<FreeModuleElement>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& modulus() const { return modulus_; }
  const std::vector<int>& twists() const { return twists_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return twists_.size(); }

  /// Number of inputs the representation refers to: the user generators in
  /// order, then modulus[k] * e_i at index ngens + i * |modulus| + k.
  std::size_t input_count() const { return input_count_; }
  bool has_representation() const { return tracked_; }
  /// representation()[g][k]: coefficient of input k in generator g.
  const std::vector<std::vector<Poly>>& representation() const { return representation_; }

  /// Ideal case convenience: the generators as polynomials (rank 1).
  std::vector<Poly> polys() const;

  const detail::Reducer& reducer() const { return *reducer_; }

 private:
  friend GroebnerBasis groebner_basis(const std::vector<FreeModuleElement>&, const MonomialOrder&,
                                      const std::vector<Poly>&, bool, const RingPtr&,
                                      const std::vector<int>&);
  std::vector<FreeModuleElement> gens_;
  MonomialOrder order_;
  std::vector<Poly> modulus_;
  std::vector<int> twists_;
  RingPtr ring_;
  std::size_t input_count_ = 0;
  bool tracked_ = false;
  std::vector<std::vector<Poly>> representation_;
  std::unique_ptr<detail::Reducer> reducer_;
};

/// Buchberger with normal strategy and Gebauer-Moeller criteria. `ring` and
/// `twists` are only consulted when `gens` is empty.
GroebnerBasis groebner_basis(const std::vector<FreeModuleElement>& gens,
                             const MonomialOrder& order = {},
                             const std::vector<Poly>& modulus = {},
                             bool track_representation = false, const RingPtr& ring = nullptr,
                             const std::vector<int>& twists = {});
GroebnerBasis groebner_basis(const std::vector<Poly>& ideal, const RingPtr& ring,
                             bool track_representation = false);

struct NormalForm {
  FreeModuleElement remainder;
  std::vector<Poly> cofactors;  // one per GB generator
};

NormalForm normal_form(const FreeModuleElement& v, const GroebnerBasis& gb);
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

/// Reduced monic GB of the ideal, as polynomials sorted by descending lead.
std::vector<Poly> reduced_ideal_basis(const std::vector<Poly>& gens, const RingPtr& ring);

bool ideal_equal(const std::vector<Poly>& I, const std::vector<Poly>& J, const CIPresentation& ci);

/// Minimal generators of the kernel of m over Q / (modulus). m and modulus
/// must be homogeneous. Output columns are reduced modulo the modulus and
/// carry the induced twists; row twists equal m's column twists.
GradedMatrix syzygies(const GradedMatrix& m, const std::vector<Poly>& modulus = {});

/// Indices of a minimal subset of the columns generating the same submodule
/// modulo the modulus (greedy by degree, then column index).
std::vector<std::size_t> minimal_generator_columns(const GradedMatrix& columns,
                                                   const std::vector<Poly>& modulus = {});

}  // namespace cires

#endif
