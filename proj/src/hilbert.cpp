#include "cires/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cires/ci_presentation.hpp"
#include "cires/groebner.hpp"
#include "engine.hpp"

namespace cires {

ZPoly zpoly_trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zpoly_trim(std::move(r));
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zpoly_trim(std::move(r));
}

ZPoly zpoly_geometric(int s) { return ZPoly(static_cast<std::size_t>(std::max(s, 0)), 1); }

ZPoly zpoly_div_one_minus_z(const ZPoly& p) {
  if (p.empty()) return {};
  ZPoly q(p.size() - 1, 0);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    acc += p[k];
    q[k] = acc;
  }
  if (acc + p.back() != 0) throw std::logic_error("Hilbert numerator not divisible by 1-z");
  return zpoly_trim(std::move(q));
}

std::string zpoly_to_string(const ZPoly& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    std::int64_t c = p[k];
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0 || a != 1) out += std::to_string(a);
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::int64_t zpoly_eval_one(const ZPoly& p) {
  std::int64_t s = 0;
  for (auto c : p) s += c;
  return s;
}

namespace {

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.deg < b.deg || (a.deg == b.deg && degrevlex(a, b) < 0);
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

ZPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().deg == 0) return {};
  bool coprime_all = true;
  for (std::size_t i = 0; i < gens.size() && coprime_all; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime_all; ++j)
      if (!coprime(gens[i], gens[j])) coprime_all = false;
  if (coprime_all) {
    ZPoly r{1};
    for (const auto& g : gens) {
      ZPoly f(g.deg + 1, 0);
      f[0] = 1;
      f[g.deg] = -1;
      r = zpoly_mul(r, f);
    }
    return r;
  }
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.exp[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  std::uint16_t e = 0xFFFF;
  for (const auto& g : gens)
    if (g.exp[best] > 0) e = std::min(e, g.exp[best]);
  Monomial pivot = Monomial::variable(best, e);
  std::vector<Monomial> sum = gens;
  sum.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    std::uint16_t take = std::min(q.exp[best], e);
    q.exp[best] = static_cast<std::uint16_t>(q.exp[best] - take);
    q.deg -= take;
    colon.push_back(q);
  }
  ZPoly a = numerator_rec(std::move(sum), nvars);
  ZPoly b = numerator_rec(std::move(colon), nvars);
  ZPoly shifted(e, 0);
  shifted.insert(shifted.end(), b.begin(), b.end());
  return zpoly_add(a, zpoly_trim(shifted));
}

HilbertData finish(const std::vector<std::pair<int, std::vector<Monomial>>>& components,
                   std::size_t nvars) {
  ZPoly K;
  int dim = -1;
  for (const auto& [twist, gens] : components) {
    if (twist < 0) throw std::invalid_argument("hilbert_series: negative twists are not supported");
    ZPoly k = numerator_rec(gens, nvars);
    ZPoly shifted(static_cast<std::size_t>(twist), 0);
    shifted.insert(shifted.end(), k.begin(), k.end());
    K = zpoly_add(K, zpoly_trim(shifted));
    dim = std::max(dim, monomial_ideal_dimension(gens, nvars));
  }
  HilbertData h;
  if (dim < 0) {
    h.dim = 0;
    h.length = 0;
    return h;
  }
  h.dim = dim;
  h.numerator = K;
  for (int k = 0; k < static_cast<int>(nvars) - dim; ++k) h.numerator = zpoly_div_one_minus_z(h.numerator);
  if (zpoly_eval_one(h.numerator) == 0) throw std::logic_error("Hilbert numerator vanishes at 1");
  if (dim == 0) h.length = zpoly_eval_one(h.numerator);
  return h;
}

}  // namespace

ZPoly monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  return numerator_rec(std::move(gens), nvars);
}

int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) supports.push_back(detail::variable_mask(g));
  int best = -1;
  for (std::uint32_t S = 0; S < (1u << nvars); ++S) {
    bool ok = true;
    for (auto s : supports)
      if ((s & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, std::popcount(S));
  }
  return best;
}

HilbertData hilbert_series(const GradedMatrix& pres, const CIPresentation* ci) {
  if (!pres.is_homogeneous()) throw std::invalid_argument("hilbert_series: presentation is not homogeneous");
  const RingPtr& ring = pres.ring();
  std::vector<FreeModuleElement> gens;
  for (std::size_t j = 0; j < pres.cols(); ++j) gens.push_back({pres.column(j), pres.row_twists()});
  std::vector<Poly> modulus = ci ? ci->basis().polys() : std::vector<Poly>{};
  auto gb = groebner_basis(gens, MonomialOrder{}, modulus, false, ring, pres.row_twists());
  std::vector<std::pair<int, std::vector<Monomial>>> comps;
  for (std::size_t i = 0; i < pres.rows(); ++i) comps.push_back({pres.row_twists()[i], {}});
  for (const auto& v : gb.reducer().elements()) comps[v.front().comp].second.push_back(v.front().mono);
  return finish(comps, ring->nvars());
}

HilbertData hilbert_series_quotient(const std::vector<Poly>& gens, const RingPtr& ring) {
  auto gb = groebner_basis(gens, ring);
  std::vector<Monomial> leads;
  for (const auto& g : gb.polys()) leads.push_back(g.lead().mono);
  return finish({{0, leads}}, ring->nvars());
}

bool is_regular_sequence(const std::vector<Poly>& f, const RingPtr& ring) {
  ZPoly expected{1};
  for (const auto& p : f) {
    if (p.is_zero() || !p.is_homogeneous() || p.degree() < 1)
      throw std::invalid_argument("is_regular_sequence: elements must be homogeneous of positive degree");
    expected = zpoly_mul(expected, zpoly_geometric(p.degree()));
  }
  HilbertData h = hilbert_series_quotient(f, ring);
  return h.dim == static_cast<int>(ring->nvars()) - static_cast<int>(f.size()) &&
         h.numerator == expected;
}

}  // namespace cires
