#ifndef CIRES_OPERATORS_HPP
#define CIRES_OPERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cires/kmatrix.hpp"
#include "cires/resolution.hpp"

namespace cires {

/// Normal-form lifts of the differentials to Q; lifted[i-1] lifts d_i.
std::vector<GradedMatrix> lift_resolution(const MinimalResolution& res);

/// Lifted complex with operators t_j : F_i -> F_{i-2} satisfying
/// lift(d_{i-1}) lift(d_i) = sum_j relations[j] t_j^{(i)} exactly over Q.
struct OperatorFamily {
  CIPtr ci;
  std::vector<Poly> relations;       // the sequence the identity refers to
  std::vector<GradedMatrix> lifted;  // lifted[i-1] lifts d_i
  /// ops[j][i] = t_{j+1}^{(i)} for 2 <= i <= length(); entries 0 and 1 are empty.
  std::vector<std::vector<GradedMatrix>> ops;

  std::size_t length() const { return lifted.size(); }
  std::size_t codim() const { return relations.size(); }
  /// t_j^{(i)} with 1 <= j <= codim(), 2 <= i <= length().
  const GradedMatrix& t(std::size_t j, std::size_t i) const;
};

/// Cofactor extraction of the squared lifted differential against (f).
/// Throws std::runtime_error when an entry does not lie in (f).
OperatorFamily eisenbud_operators(const std::vector<GradedMatrix>& lifted, CIPtr ci);

/// Exact re-multiplication check of the defining identity at every degree.
bool operators_identity_holds(const OperatorFamily& ops);
/// Each t_j is a chain map modulo (f): d t_j = t_j d.
bool operators_are_chain_maps(const OperatorFamily& ops);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Operators for g = alpha^{-1} f via [t'] = alpha^tr [t]. Throws
/// std::invalid_argument unless det(alpha) is a nonzero constant.
OperatorFamily operators_change_basis(const OperatorFamily& ops, const PolyMatrix& alpha);

struct Realization {
  std::vector<Poly> g;
  OperatorFamily ops;
};

/// Operators t'_i = sum_k beta[i][k] t_k, i.e. alpha = beta^tr. Throws
/// std::invalid_argument for singular beta and std::logic_error if the
/// resulting ideal differs from (f).
Realization realize_cohomology_element(const OperatorFamily& ops, const KMatrix& beta);

/// T_j^{(n)} : Ext^n(M,k) -> Ext^{n+2}(M,k), the transpose of t_j^{(n+2)}
/// modulo the maximal ideal, for 0 <= n <= length - 2.
struct ExtAction {
  std::vector<std::size_t> betti;
  /// maps[j][n] for 0 <= n <= max_degree().
  std::vector<std::vector<KMatrix>> maps;
  std::size_t max_degree() const { return betti.size() < 3 ? 0 : betti.size() - 3; }
  const KMatrix& T(std::size_t j, std::size_t n) const { return maps.at(j - 1).at(n); }
  std::size_t codim() const { return maps.size(); }
};

ExtAction ext_action(const OperatorFamily& ops);

/// T_i T_j = T_j T_i on every degree where both composites exist.
bool ext_action_commutes(const ExtAction& ext);

/// Sum_j a_j T_j^{(n)}.
KMatrix combined_action(const ExtAction& ext, const std::vector<Coeff>& a, std::size_t n);

struct FilterRegularResult {
  std::vector<Coeff> xi;
  std::size_t attempts_used = 0;
};

/// Uniform nonzero xi in k^c, retried until sum a_j T_j^{(n)} is injective
/// for every n in [lo, hi]. Platform-independent sampling from a seeded
/// mt19937_64. Throws std::runtime_error listing ranks on exhaustion.
FilterRegularResult filter_regular_search(const ExtAction& ext, std::size_t lo, std::size_t hi,
                                          std::size_t attempts = 32, std::uint64_t seed = 1);

/// Kernel complex data for the surjections Xi_n : F_{n+2} -> F_n.
struct SectionData {
  std::vector<Coeff> xi;
  std::size_t lo = 0, hi = 0;  // window of n
  std::size_t n0 = 0;
  /// Indexed by n - n0 for n in [n0, hi].
  std::vector<GradedMatrix> Xi;              // Xi_n mod f
  std::vector<std::vector<std::size_t>> J;   // pivot columns of Xi_n mod m
  std::vector<GradedMatrix> C;               // basis of G_n = ker Xi_n inside F_{n+2}
  std::vector<GradedMatrix> P;               // section F_n -> F_{n+2}
  std::vector<std::size_t> kernel_rank;      // rank G_n
  /// Indexed by n - n0 - 1 for n in [n0 + 1, hi].
  std::vector<GradedMatrix> delta;           // G_n -> G_{n-1}
  std::vector<GradedMatrix> U;               // F_n -> G_{n-1} block
  bool homogeneous = true;

  bool surjective_on_window = false;
  bool chain_map = false;        // Xi_{n-1} d_{n+2} = d_n Xi_n
  bool block_form = false;       // B_{n-1}^{-1} d_{n+2} B_n = [[delta, U], [0, d_n]]
  bool kernel_identity = false;  // d_{n+2} C_n = C_{n-1} delta_n
  bool delta_complex = false;    // delta_n delta_{n+1} = 0
  bool delta_minimal = false;    // ord delta_n >= 1
  bool betti_additivity = false; // beta_{n+2} = beta_n + rank G_n

  std::size_t index(std::size_t n) const { return n - n0; }
  const GradedMatrix& delta_at(std::size_t n) const { return delta.at(n - n0 - 1); }
  /// Presentation of L_n: delta_{n+1}; needs n0 <= n < hi.
  const GradedMatrix& L_presentation(std::size_t n) const { return delta_at(n + 1); }
};

SectionData section_construction(const MinimalResolution& res, const OperatorFamily& ops,
                                 const std::vector<Coeff>& xi, std::size_t lo, std::size_t hi);

/// Inverse over A of a square matrix whose reduction mod m is invertible.
/// Pivots must be constants unless A is Artinian; throws otherwise.
GradedMatrix invert_over_A(const GradedMatrix& m, const CIPresentation& ci);

}  // namespace cires

#endif
