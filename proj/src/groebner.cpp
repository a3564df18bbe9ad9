#include "cires/groebner.hpp"

#include <algorithm>
#include <stdexcept>

#include "engine.hpp"

namespace cires {

using detail::BuchbergerEngine;
using detail::MTerm;
using detail::Reducer;
using detail::TermOrder;
using detail::Vec;

FreeModuleElement FreeModuleElement::zero(const RingPtr& ring, std::vector<int> twists) {
  FreeModuleElement v;
  v.components.assign(twists.size(), Poly(ring));
  v.twists = std::move(twists);
  return v;
}

bool FreeModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Poly& p) { return p.is_zero(); });
}

bool FreeModuleElement::is_homogeneous() const {
  std::optional<int> d;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Poly& p = components[i];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    int e = p.degree() + (i < twists.size() ? twists[i] : 0);
    if (d && *d != e) return false;
    d = e;
  }
  return true;
}

GroebnerBasis::GroebnerBasis() = default;
GroebnerBasis::~GroebnerBasis() = default;
GroebnerBasis::GroebnerBasis(GroebnerBasis&&) noexcept = default;
GroebnerBasis& GroebnerBasis::operator=(GroebnerBasis&&) noexcept = default;

GroebnerBasis::GroebnerBasis(const GroebnerBasis& o)
    : gens_(o.gens_),
      order_(o.order_),
      modulus_(o.modulus_),
      twists_(o.twists_),
      ring_(o.ring_),
      input_count_(o.input_count_),
      tracked_(o.tracked_),
      representation_(o.representation_),
      reducer_(o.reducer_ ? std::make_unique<Reducer>(*o.reducer_) : nullptr) {}

GroebnerBasis& GroebnerBasis::operator=(const GroebnerBasis& o) {
  if (this != &o) {
    GroebnerBasis tmp(o);
    *this = std::move(tmp);
  }
  return *this;
}

std::vector<Poly> GroebnerBasis::polys() const {
  std::vector<Poly> out;
  for (const auto& g : gens_) out.push_back(g.components.at(0));
  return out;
}

namespace {

RingPtr find_ring(const std::vector<FreeModuleElement>& gens, const std::vector<Poly>& modulus,
                  const RingPtr& fallback) {
  for (const auto& g : gens)
    for (const auto& p : g.components)
      if (p.ring()) return p.ring();
  for (const auto& p : modulus)
    if (p.ring()) return p.ring();
  if (!fallback) throw std::invalid_argument("groebner_basis: cannot determine the ring");
  return fallback;
}

Vec single(const Poly& p, std::uint32_t comp) {
  Vec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coeff});
  return v;
}

Vec column_vec(const GradedMatrix& m, std::size_t j, const TermOrder& ord) {
  return detail::to_vec(m.column(j), ord);
}

void require_homogeneous(const std::vector<Poly>& polys, const char* what) {
  for (const auto& p : polys)
    if (!p.is_zero() && !p.is_homogeneous())
      throw std::invalid_argument(std::string(what) + " must be homogeneous: " + p.to_string());
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<FreeModuleElement>& gens, const MonomialOrder& order,
                             const std::vector<Poly>& modulus, bool track_representation,
                             const RingPtr& ring, const std::vector<int>& twists) {
  GroebnerBasis gb;
  gb.ring_ = find_ring(gens, modulus, ring);
  gb.order_ = order;
  gb.modulus_ = modulus;
  gb.tracked_ = track_representation;
  std::size_t rank = gens.empty() ? twists.size() : gens[0].rank();
  std::vector<int> tw = gens.empty() ? twists : gens[0].twists;
  if (tw.empty()) tw.assign(rank, 0);
  if (tw.size() != rank) throw std::invalid_argument("groebner_basis: twist count mismatch");
  for (const auto& g : gens)
    if (g.rank() != rank) throw std::invalid_argument("groebner_basis: generators of unequal rank");
  gb.twists_ = tw;

  const PrimeField& F = gb.ring_->field();
  BuchbergerEngine engine(F, order.kind, tw, false);
  const TermOrder& ord = engine.order();
  const std::size_t m = gens.size(), nf = modulus.size();
  for (std::size_t k = 0; k < m; ++k) {
    Vec tail;
    if (track_representation) tail.push_back({Monomial{}, static_cast<std::uint32_t>(k), 1});
    engine.add_input(detail::to_vec(gens[k].components, ord), std::move(tail),
                     BuchbergerEngine::InputKind::Generator);
  }
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t k = 0; k < nf; ++k) {
      if (modulus[k].is_zero()) continue;
      Vec tail;
      if (track_representation)
        tail.push_back({Monomial{}, static_cast<std::uint32_t>(m + i * nf + k), 1});
      engine.add_input(single(modulus[k], static_cast<std::uint32_t>(i)), std::move(tail),
                       BuchbergerEngine::InputKind::Relation);
    }
  gb.input_count_ = m + rank * nf;
  engine.run();

  std::vector<const BuchbergerEngine::Element*> kept;
  for (const auto& e : engine.elements())
    if (!e.redundant) kept.push_back(&e);
  std::sort(kept.begin(), kept.end(), [&](const auto* a, const auto* b) {
    return ord(a->lead(), b->lead()) < 0;
  });
  // Interreduce from the smallest lead upward: a term can only be divisible
  // by leads not exceeding it.
  Reducer acc(F, ord);
  std::vector<std::pair<Vec, Vec>> reduced;
  for (const auto* e : kept) {
    Vec head = e->head, tail = e->tail;
    acc.reduce(head, &tail, nullptr);
    acc.add(head, tail);
    reduced.emplace_back(std::move(head), std::move(tail));
  }
  std::reverse(reduced.begin(), reduced.end());
  gb.reducer_ = std::make_unique<Reducer>(F, ord);
  for (auto& [head, tail] : reduced) {
    FreeModuleElement g;
    g.components = detail::from_vec(head, rank, gb.ring_);
    g.twists = tw;
    gb.gens_.push_back(std::move(g));
    if (track_representation)
      gb.representation_.push_back(detail::from_vec(tail, gb.input_count_, gb.ring_));
    gb.reducer_->add(std::move(head), {});
  }
  return gb;
}

GroebnerBasis groebner_basis(const std::vector<Poly>& ideal, const RingPtr& ring,
                             bool track_representation) {
  std::vector<FreeModuleElement> gens;
  for (const auto& p : ideal) gens.push_back({{p}, {0}});
  return groebner_basis(gens, MonomialOrder{}, {}, track_representation, ring, {0});
}

NormalForm normal_form(const FreeModuleElement& v, const GroebnerBasis& gb) {
  if (v.rank() != gb.rank()) throw std::invalid_argument("normal_form: rank mismatch");
  const Reducer& r = gb.reducer();
  Vec head = detail::to_vec(v.components, r.order());
  Vec cof;
  r.reduce(head, nullptr, &cof);
  NormalForm nf;
  nf.remainder.components = detail::from_vec(head, gb.rank(), gb.ring());
  nf.remainder.twists = v.twists.empty() ? gb.twists() : v.twists;
  nf.cofactors = detail::from_vec(cof, gb.generators().size(), gb.ring());
  return nf;
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  if (gb.rank() != 1) throw std::invalid_argument("normal_form: basis is not an ideal basis");
  Vec head = single(p, 0);
  gb.reducer().reduce(head, nullptr, nullptr);
  return detail::from_vec(head, 1, gb.ring())[0];
}

std::vector<Poly> reduced_ideal_basis(const std::vector<Poly>& gens, const RingPtr& ring) {
  return groebner_basis(gens, ring).polys();
}

GradedMatrix syzygies(const GradedMatrix& m, const std::vector<Poly>& modulus) {
  if (!m.is_homogeneous()) throw std::invalid_argument("syzygies: matrix is not homogeneous");
  require_homogeneous(modulus, "syzygies: modulus");
  const RingPtr& ring = m.ring();
  const PrimeField& F = ring->field();
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Poly> gbf = modulus.empty() ? std::vector<Poly>{} : reduced_ideal_basis(modulus, ring);

  BuchbergerEngine H(F, ModuleOrder::PositionOverTerm, m.row_twists(), true);
  BuchbergerEngine T(F, ModuleOrder::PositionOverTerm, m.col_twists(), false);
  for (std::size_t j = 0; j < c; ++j)
    H.add_input(column_vec(m, j, H.order()), {MTerm{Monomial{}, static_cast<std::uint32_t>(j), 1}},
                BuchbergerEngine::InputKind::Generator, m.col_twists()[j]);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& g : gbf)
      H.add_input(single(g, static_cast<std::uint32_t>(i)), {}, BuchbergerEngine::InputKind::Relation,
                  g.degree() + m.row_twists()[i]);
  for (std::size_t j = 0; j < c; ++j)
    for (const auto& g : gbf)
      T.add_input(single(g, static_cast<std::uint32_t>(j)), {}, BuchbergerEngine::InputKind::Relation,
                  g.degree() + m.col_twists()[j]);

  std::vector<Vec> chosen;
  std::vector<int> degrees;
  while (!H.finished()) {
    int d = H.next_degree();
    while (!T.finished() && T.next_degree() <= d) T.process_degree(T.next_degree());
    auto out = H.process_degree(d);
    for (auto& z : out.zero_reductions) {
      if (z.tail.empty()) continue;
      Vec cand = std::move(z.tail);
      T.reduce(cand, nullptr, nullptr, true);
      if (cand.empty()) continue;
      std::size_t idx = T.insert(std::move(cand), {}, z.degree);
      chosen.push_back(T.elements()[idx].head);
      degrees.push_back(z.degree);
    }
  }
  GradedMatrix out(ring, m.col_twists(), degrees);
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    auto col = detail::from_vec(chosen[k], c, ring);
    for (std::size_t i = 0; i < c; ++i) out.at(i, k) = std::move(col[i]);
  }
  return out;
}

std::vector<std::size_t> minimal_generator_columns(const GradedMatrix& columns,
                                                   const std::vector<Poly>& modulus) {
  if (!columns.is_homogeneous())
    throw std::invalid_argument("minimal_generator_columns: matrix is not homogeneous");
  require_homogeneous(modulus, "minimal_generator_columns: modulus");
  const RingPtr& ring = columns.ring();
  if (columns.cols() == 0) return {};
  std::vector<Poly> gbf = modulus.empty() ? std::vector<Poly>{} : reduced_ideal_basis(modulus, ring);
  BuchbergerEngine E(ring->field(), ModuleOrder::PositionOverTerm, columns.row_twists(), false);
  int max_degree = *std::max_element(columns.col_twists().begin(), columns.col_twists().end());
  for (std::size_t j = 0; j < columns.cols(); ++j)
    E.add_input(column_vec(columns, j, E.order()), {}, BuchbergerEngine::InputKind::Generator,
                columns.col_twists()[j]);
  for (std::size_t i = 0; i < columns.rows(); ++i)
    for (const auto& g : gbf)
      E.add_input(single(g, static_cast<std::uint32_t>(i)), {}, BuchbergerEngine::InputKind::Relation,
                  g.degree() + columns.row_twists()[i]);
  std::vector<std::size_t> keep;
  while (!E.finished() && E.next_degree() <= max_degree) {
    auto out = E.process_degree(E.next_degree());
    for (const auto& [input, elem] : out.surviving_generators) keep.push_back(input);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace cires
