#include "engine.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace cires::detail {

namespace {

Vec axpy_span(std::span<const MTerm> a, const Vec& b, const Monomial& m, Coeff c,
              const TermOrder& ord, const PrimeField& F) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto scaled_b = [&](std::size_t k) {
    return MTerm{b[k].mono * m, b[k].comp, F.mul(b[k].coeff, c)};
  };
  if (c == 0) return Vec(a.begin(), a.end());
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    MTerm bt = scaled_b(j);
    if (i == a.size()) {
      out.push_back(bt);
      ++j;
      continue;
    }
    auto cmp = ord(a[i], bt);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(bt);
      ++j;
    } else {
      Coeff s = F.add(a[i].coeff, bt.coeff);
      if (s != 0) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Vec axpy(const Vec& a, const Vec& b, const Monomial& m, Coeff c, const TermOrder& ord,
         const PrimeField& F) {
  return axpy_span(std::span<const MTerm>(a), b, m, c, ord, F);
}

Vec scale(const Vec& v, Coeff c, const PrimeField& F) {
  Vec out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back({t.mono, t.comp, F.mul(t.coeff, c)});
  return out;
}

void sort_vec(Vec& v, const TermOrder& ord, const PrimeField& F) {
  std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return ord(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (const auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  v = std::move(out);
}

int vec_degree(const Vec& v, const TermOrder& ord) {
  int d = 0;
  bool first = true;
  for (const auto& t : v) {
    int td = static_cast<int>(t.mono.deg) + ord.twist(t.comp);
    if (first || td > d) d = td;
    first = false;
  }
  return d;
}

std::uint32_t variable_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (m.exp[i] != 0) mask |= 1u << i;
  return mask;
}

BuchbergerEngine::BuchbergerEngine(PrimeField field, ModuleOrder order, std::vector<int> twists,
                                   bool tails_are_syzygies)
    : F_(field), tails_are_syzygies_(tails_are_syzygies) {
  ord_.kind = order;
  ord_.twists = std::move(twists);
  by_comp_.resize(ord_.twists.size());
}

std::size_t BuchbergerEngine::add_input(Vec head, Vec tail, InputKind kind,
                                        std::optional<int> degree) {
  int d = degree ? *degree : vec_degree(head, ord_);
  inputs_.push_back({std::move(head), std::move(tail), d, kind});
  return inputs_.size() - 1;
}

int BuchbergerEngine::next_degree() const {
  int d = std::numeric_limits<int>::max();
  if (!pairs_.empty()) d = pairs_.begin()->degree;
  for (const auto& in : inputs_)
    if (!in.done) d = std::min(d, in.degree);
  return d;
}

std::ptrdiff_t BuchbergerEngine::find_divisor(const Monomial& m, std::uint32_t comp) const {
  if (comp >= by_comp_.size()) return -1;
  std::uint32_t mask = variable_mask(m);
  for (std::size_t idx : by_comp_[comp]) {
    const Element& e = elems_[idx];
    if (e.redundant) continue;
    if ((e.mask & ~mask) != 0) continue;
    if (e.lead().mono.divides(m)) return static_cast<std::ptrdiff_t>(idx);
  }
  return -1;
}

void BuchbergerEngine::reduce(Vec& head, Vec* tail, Vec* cofactors, bool full) const {
  Vec result;
  Vec work = std::move(head);
  std::size_t pos = 0;
  while (pos < work.size()) {
    const MTerm t = work[pos];
    std::ptrdiff_t idx = find_divisor(t.mono, t.comp);
    if (idx < 0) {
      if (!full) {
        result.insert(result.end(), work.begin() + static_cast<std::ptrdiff_t>(pos), work.end());
        break;
      }
      result.push_back(t);
      ++pos;
      continue;
    }
    const Element& g = elems_[static_cast<std::size_t>(idx)];
    Monomial q = quotient(t.mono, g.lead().mono);
    Coeff c = F_.div(t.coeff, g.lead().coeff);
    Coeff negc = F_.neg(c);
    work = axpy_span(std::span<const MTerm>(work).subspan(pos), g.head, q, negc, ord_, F_);
    pos = 0;
    if (tail && !g.tail.empty()) *tail = axpy(*tail, g.tail, q, negc, kTailOrder, F_);
    if (cofactors) {
      Vec unit{MTerm{Monomial{}, static_cast<std::uint32_t>(idx), 1}};
      *cofactors = axpy(*cofactors, unit, q, c, kTailOrder, F_);
    }
  }
  head = std::move(result);
}

bool BuchbergerEngine::product_criterion_applies(std::size_t i, std::size_t j) const {
  const Element& a = elems_[i];
  const Element& b = elems_[j];
  if (!a.single_component || !b.single_component) return false;
  if (tails_are_syzygies_ && (!a.tail.empty() || !b.tail.empty())) return false;
  return coprime(a.lead().mono, b.lead().mono);
}

std::size_t BuchbergerEngine::insert(Vec head, Vec tail, int degree) {
  if (head.empty()) throw std::logic_error("inserting zero element");
  Coeff inv = F_.inv(head.front().coeff);
  if (inv != 1) {
    head = scale(head, inv, F_);
    tail = scale(tail, inv, F_);
  }
  Element e;
  e.head = std::move(head);
  e.tail = std::move(tail);
  e.degree = degree;
  e.mask = variable_mask(e.lead().mono);
  e.single_component = std::all_of(e.head.begin(), e.head.end(), [&](const MTerm& t) {
    return t.comp == e.head.front().comp;
  });
  const std::uint32_t comp = e.lead().comp;
  const Monomial lt = e.lead().mono;
  elems_.push_back(std::move(e));
  const std::size_t t = elems_.size() - 1;

  // Gebauer-Moeller update.
  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> C;
  for (std::size_t g : by_comp_[comp]) {
    if (elems_[g].redundant) continue;
    C.push_back({g, lcm(elems_[g].lead().mono, lt), product_criterion_applies(g, t)});
  }
  std::vector<Cand> D;
  for (std::size_t k = 0; k < C.size(); ++k) {
    const Cand& p = C[k];
    bool keep = p.coprime;
    if (!keep) {
      keep = true;
      for (std::size_t l = k + 1; l < C.size() && keep; ++l)
        if (C[l].lcm.divides(p.lcm)) keep = false;
      for (std::size_t l = 0; l < D.size() && keep; ++l)
        if (D[l].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) D.push_back(p);
  }
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    const Pair& p = *it;
    if (elems_[p.i].lead().comp == comp && lt.divides(p.lcm) &&
        !(lcm(elems_[p.i].lead().mono, lt) == p.lcm) &&
        !(lcm(elems_[p.j].lead().mono, lt) == p.lcm)) {
      it = pairs_.erase(it);
    } else {
      ++it;
    }
  }
  for (const Cand& p : D) {
    if (p.coprime) continue;
    const Element& a = elems_[p.g];
    const Element& b = elems_[t];
    int da = a.degree + static_cast<int>(p.lcm.deg) - static_cast<int>(a.lead().mono.deg);
    int db = b.degree + static_cast<int>(p.lcm.deg) - static_cast<int>(b.lead().mono.deg);
    pairs_.insert({std::max(da, db), p.g, t, p.lcm});
  }
  for (std::size_t g : by_comp_[comp])
    if (!elems_[g].redundant && lt.divides(elems_[g].lead().mono)) elems_[g].redundant = true;
  by_comp_[comp].push_back(t);
  return t;
}

void BuchbergerEngine::spoly(const Pair& p, Vec& head, Vec& tail) const {
  const Element& a = elems_[p.i];
  const Element& b = elems_[p.j];
  Monomial qa = quotient(p.lcm, a.lead().mono);
  Monomial qb = quotient(p.lcm, b.lead().mono);
  // Elements are monic.
  head = axpy(Vec{}, a.head, qa, 1, ord_, F_);
  head = axpy(head, b.head, qb, F_.neg(1), ord_, F_);
  tail = axpy(Vec{}, a.tail, qa, 1, kTailOrder, F_);
  tail = axpy(tail, b.tail, qb, F_.neg(1), kTailOrder, F_);
}

void BuchbergerEngine::handle(Vec head, Vec tail, int degree, bool from_pair,
                              std::size_t input_index, DegreeOutcome& out) {
  reduce(head, &tail, nullptr, true);
  if (!head.empty()) {
    std::size_t idx = insert(std::move(head), std::move(tail), degree);
    if (!from_pair && inputs_[input_index].kind == InputKind::Generator)
      out.surviving_generators.emplace_back(input_index, idx);
  } else {
    out.zero_reductions.push_back({std::move(tail), degree, from_pair, input_index});
  }
}

BuchbergerEngine::DegreeOutcome BuchbergerEngine::process_degree(int d) {
  DegreeOutcome out;
  while (!pairs_.empty() && pairs_.begin()->degree <= d) {
    Pair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    Vec head, tail;
    spoly(p, head, tail);
    handle(std::move(head), std::move(tail), p.degree, true, 0, out);
  }
  for (InputKind kind : {InputKind::Relation, InputKind::Generator}) {
    for (std::size_t k = 0; k < inputs_.size(); ++k) {
      Input& in = inputs_[k];
      if (in.done || in.kind != kind || in.degree > d) continue;
      in.done = true;
      handle(std::move(in.head), std::move(in.tail), in.degree, false, k, out);
    }
  }
  return out;
}

void BuchbergerEngine::run() {
  while (!finished()) process_degree(next_degree());
}

void Reducer::add(Vec head, Vec tail) {
  std::uint32_t comp = head.front().comp;
  if (comp >= by_comp_.size()) by_comp_.resize(comp + 1);
  by_comp_[comp].push_back(elems_.size());
  masks_.push_back(variable_mask(head.front().mono));
  elems_.push_back(std::move(head));
  tails_.push_back(std::move(tail));
}

void Reducer::reduce(Vec& head, Vec* tail, Vec* cofactors) const {
  Vec result;
  Vec work = std::move(head);
  std::size_t pos = 0;
  while (pos < work.size()) {
    const MTerm t = work[pos];
    std::ptrdiff_t found = -1;
    if (t.comp < by_comp_.size()) {
      std::uint32_t mask = variable_mask(t.mono);
      for (std::size_t idx : by_comp_[t.comp]) {
        if ((masks_[idx] & ~mask) != 0) continue;
        if (elems_[idx].front().mono.divides(t.mono)) {
          found = static_cast<std::ptrdiff_t>(idx);
          break;
        }
      }
    }
    if (found < 0) {
      result.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = elems_[static_cast<std::size_t>(found)];
    Monomial q = quotient(t.mono, g.front().mono);
    work = axpy_span(std::span<const MTerm>(work).subspan(pos), g, q, F_.neg(t.coeff), ord_, F_);
    pos = 0;
    const Vec& gt = tails_[static_cast<std::size_t>(found)];
    if (tail && !gt.empty()) *tail = axpy(*tail, gt, q, F_.neg(t.coeff), kTailOrder, F_);
    if (cofactors) {
      Vec unit{MTerm{Monomial{}, static_cast<std::uint32_t>(found), 1}};
      *cofactors = axpy(*cofactors, unit, q, t.coeff, kTailOrder, F_);
    }
  }
  head = std::move(result);
}

Vec to_vec(const std::vector<Poly>& components, const TermOrder& ord) {
  Vec v;
  for (std::size_t c = 0; c < components.size(); ++c)
    for (const auto& t : components[c].terms())
      v.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
  std::stable_sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return ord(a, b) > 0; });
  return v;
}

std::vector<Poly> from_vec(const Vec& v, std::size_t rank, const RingPtr& ring) {
  std::vector<std::vector<Term>> buckets(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw std::logic_error("module component out of range");
    buckets[t.comp].push_back({t.mono, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& b : buckets) out.push_back(Poly::from_terms(ring, std::move(b)));
  return out;
}

}  // namespace cires::detail
