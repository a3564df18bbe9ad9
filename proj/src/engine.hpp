// Internal Buchberger engine shared by the Groebner, syzygy and minimal
// generator routines. Not installed.
#ifndef CIRES_ENGINE_HPP
#define CIRES_ENGINE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "cires/field.hpp"
#include "cires/groebner.hpp"
#include "cires/monomial.hpp"

namespace cires::detail {

struct MTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;
};

using Vec = std::vector<MTerm>;

/// Module term order. Tails always use position-over-term.
struct TermOrder {
  ModuleOrder kind = ModuleOrder::PositionOverTerm;
  std::vector<int> twists;

  int twist(std::uint32_t c) const { return c < twists.size() ? twists[c] : 0; }
  std::strong_ordering operator()(const Monomial& am, std::uint32_t ac, const Monomial& bm,
                                  std::uint32_t bc) const {
    if (kind == ModuleOrder::PositionOverTerm) {
      if (ac != bc) return bc <=> ac;
      return degrevlex(am, bm);
    }
    int da = static_cast<int>(am.deg) + twist(ac), db = static_cast<int>(bm.deg) + twist(bc);
    if (da != db) return da <=> db;
    auto c = degrevlex(am, bm);
    if (c != 0) return c;
    return bc <=> ac;
  }
  std::strong_ordering operator()(const MTerm& a, const MTerm& b) const {
    return (*this)(a.mono, a.comp, b.mono, b.comp);
  }
};

inline const TermOrder kTailOrder{};

/// a + c * m * b, both sorted by `ord`.
Vec axpy(const Vec& a, const Vec& b, const Monomial& m, Coeff c, const TermOrder& ord,
         const PrimeField& F);
Vec scale(const Vec& v, Coeff c, const PrimeField& F);
void sort_vec(Vec& v, const TermOrder& ord, const PrimeField& F);

/// Largest twisted degree among the terms; the sugar of an input.
int vec_degree(const Vec& v, const TermOrder& ord);

std::uint32_t variable_mask(const Monomial& m);

class BuchbergerEngine {
 public:
  enum class InputKind { Relation, Generator };

  struct Element {
    Vec head;
    Vec tail;
    int degree = 0;            // sugar; exact degree for homogeneous input
    std::uint32_t mask = 0;    // variables present in the lead monomial
    bool single_component = false;
    bool redundant = false;    // lead divisible by a later element's lead
    const MTerm& lead() const { return head.front(); }
  };

  struct ZeroReduction {
    Vec tail;
    int degree;
    bool from_pair;
    std::size_t input_index;   // valid when !from_pair
  };

  struct DegreeOutcome {
    /// Generator inputs that survived reduction: (input index, element index).
    std::vector<std::pair<std::size_t, std::size_t>> surviving_generators;
    std::vector<ZeroReduction> zero_reductions;
  };

  /// `tails_are_syzygies` disables the product criterion for pairs whose
  /// tails are nonzero: their Koszul syzygy may be a genuine new relation.
  BuchbergerEngine(PrimeField field, ModuleOrder order, std::vector<int> twists,
                   bool tails_are_syzygies = false);

  /// `degree` defaults to the largest twisted degree of the head.
  std::size_t add_input(Vec head, Vec tail, InputKind kind, std::optional<int> degree = {});

  int next_degree() const;
  bool finished() const { return next_degree() == std::numeric_limits<int>::max(); }
  /// Processes pairs of sugar <= d, then relation inputs of degree d, then
  /// generator inputs of degree d, in index order.
  DegreeOutcome process_degree(int d);
  void run();

  /// Reduces head terms by the current basis. `tail` receives the matching
  /// tail combination; `cofactors` (comp = element index) the quotients.
  void reduce(Vec& head, Vec* tail, Vec* cofactors, bool full = true) const;

  /// Inserts a reduced, nonzero element and updates the pair set.
  std::size_t insert(Vec head, Vec tail, int degree);

  const std::vector<Element>& elements() const { return elems_; }
  const TermOrder& order() const { return ord_; }
  const PrimeField& field() const { return F_; }

 private:
  struct Pair {
    int degree;
    std::size_t i, j;
    Monomial lcm;
    bool operator<(const Pair& o) const {
      if (degree != o.degree) return degree < o.degree;
      if (j != o.j) return j < o.j;
      return i < o.i;
    }
  };
  struct Input {
    Vec head, tail;
    int degree;
    InputKind kind;
    bool done = false;
  };

  std::ptrdiff_t find_divisor(const Monomial& m, std::uint32_t comp) const;
  bool product_criterion_applies(std::size_t i, std::size_t j) const;
  void spoly(const Pair& p, Vec& head, Vec& tail) const;
  void handle(Vec head, Vec tail, int degree, bool from_pair, std::size_t input_index,
              DegreeOutcome& out);

  PrimeField F_;
  TermOrder ord_;
  bool tails_are_syzygies_;
  std::vector<Element> elems_;
  std::vector<std::vector<std::size_t>> by_comp_;
  std::set<Pair> pairs_;
  std::vector<Input> inputs_;
};

/// Fixed reduced basis used for normal forms after a computation finished.
class Reducer {
 public:
  Reducer(PrimeField field, TermOrder order) : F_(field), ord_(std::move(order)) {}

  /// `head` must be monic; its lead must not be divisible by earlier leads.
  void add(Vec head, Vec tail = {});
  /// Full reduction; cofactors use comp = element index.
  void reduce(Vec& head, Vec* tail, Vec* cofactors) const;

  const std::vector<Vec>& elements() const { return elems_; }
  const std::vector<Vec>& tails() const { return tails_; }
  const TermOrder& order() const { return ord_; }
  const PrimeField& field() const { return F_; }

 private:
  PrimeField F_;
  TermOrder ord_;
  std::vector<Vec> elems_, tails_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

/// Conversions between the public module element type and engine vectors.
Vec to_vec(const std::vector<Poly>& components, const TermOrder& ord);
std::vector<Poly> from_vec(const Vec& v, std::size_t rank, const RingPtr& ring);

}  // namespace cires::detail

#endif
