#include "cires/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cires/groebner.hpp"

namespace cires {

const GradedMatrix& MinimalResolution::differential(std::size_t i) const {
  if (i < 1 || i > diffs.size())
    throw std::out_of_range("differential index " + std::to_string(i) + " outside 1.." +
                            std::to_string(diffs.size()));
  return diffs[i - 1];
}

std::vector<int> MinimalResolution::twists(std::size_t i) const {
  if (i == 0) return diffs.empty() ? std::vector<int>{} : diffs[0].row_twists();
  return differential(i).col_twists();
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> find_unit(const GradedMatrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Poly& p = m.at(r, c);
      if (!p.is_zero() && p.lead().mono.is_one()) return std::make_pair(r, c);
    }
  return std::nullopt;
}

GradedMatrix schur(const GradedMatrix& m, std::size_t r, std::size_t c, const CIPresentation* ci) {
  const PrimeField& F = m.ring()->field();
  Coeff inv = F.inv(m.at(r, c).constant_term());
  GradedMatrix out = m.without(r, c);
  for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == r) continue;
    const Poly& aic = m.at(i, c);
    for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      if (!aic.is_zero() && !m.at(r, j).is_zero()) {
        Poly upd = (aic * m.at(r, j)).scaled(inv);
        Poly& e = out.at(oi, oj);
        e -= upd;
        if (ci) e = ci->normal_form(e);
      }
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace

std::vector<GradedMatrix> minimalize(std::vector<GradedMatrix> complex, const CIPresentation* ci) {
  if (ci)
    for (auto& m : complex) m = ci->reduce(m);
  for (;;) {
    bool changed = false;
    for (std::size_t k = 0; k < complex.size() && !changed; ++k) {
      auto pos = find_unit(complex[k]);
      if (!pos) continue;
      auto [r, c] = *pos;
      complex[k] = schur(complex[k], r, c, ci);
      if (k > 0) complex[k - 1] = complex[k - 1].without(std::nullopt, r);
      if (k + 1 < complex.size()) complex[k + 1] = complex[k + 1].without(c, std::nullopt);
      changed = true;
    }
    if (!changed) break;
  }
  return complex;
}

GradedMatrix minimal_presentation(const GradedMatrix& presentation, const CIPresentation& ci) {
  if (!presentation.is_homogeneous())
    throw std::invalid_argument("presentation matrix is not homogeneous");
  GradedMatrix m = minimalize({presentation}, &ci)[0];
  auto keep = minimal_generator_columns(m, ci.relations());
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return m.submatrix(rows, keep);
}

MinimalResolution minimal_resolution(const GradedMatrix& presentation, CIPtr ci, std::size_t length) {
  if (length < 1) throw std::invalid_argument("resolution length must be at least 1");
  require_same_ring(presentation.ring(), ci->ring());
  MinimalResolution res;
  res.ci = ci;
  res.diffs.push_back(minimal_presentation(presentation, *ci));
  res.betti.push_back(res.diffs[0].rows());
  res.betti.push_back(res.diffs[0].cols());
  while (res.diffs.size() < length) {
    res.diffs.push_back(syzygies(res.diffs.back(), ci->relations()));
    res.betti.push_back(res.diffs.back().cols());
  }
  return res;
}

int ord_matrix(const GradedMatrix& m, const CIPresentation& ci) {
  int ord = kOrdInfinity;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      ord = std::min(ord, ord_poly(ci.normal_form(m.at(i, j))));
    }
  return ord;
}

namespace {

class MinorExpander {
 public:
  MinorExpander(const GradedMatrix& m, const CIPresentation& ci) : m_(m), ci_(ci) {}

  Poly det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    std::uint64_t rmask = 0, cmask = 0;
    for (auto r : rows) rmask |= std::uint64_t{1} << r;
    for (auto c : cols) cmask |= std::uint64_t{1} << c;
    return det_masked(rows, cols, rmask, cmask);
  }

 private:
  Poly det_masked(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                  std::uint64_t rmask, std::uint64_t cmask) {
    if (rows.size() == 1) return m_.at(rows[0], cols[0]);
    auto key = std::make_pair(rmask, cmask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    Poly acc(m_.ring());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Poly& a = m_.at(rows[0], cols[k]);
      if (a.is_zero()) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t l = 0; l < cols.size(); ++l)
        if (l != k) sub_cols.push_back(cols[l]);
      Poly minor = det_masked(sub_rows, sub_cols, rmask & ~(std::uint64_t{1} << rows[0]),
                              cmask & ~(std::uint64_t{1} << cols[k]));
      if (minor.is_zero()) continue;
      if (k % 2 == 0)
        acc += a * minor;
      else
        acc -= a * minor;
    }
    acc = ci_.normal_form(acc);
    memo_.emplace(key, acc);
    return acc;
  }

  const GradedMatrix& m_;
  const CIPresentation& ci_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Poly> memo_;
};

void subsets(std::size_t n, std::size_t r, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return static_cast<std::size_t>(b + 0.5);
}

}  // namespace

std::vector<Poly> minor_ideal(const GradedMatrix& m, std::size_t r, const CIPresentation& ci) {
  if (r < 1 || r > std::min(m.rows(), m.cols()))
    throw std::out_of_range("minor size " + std::to_string(r) + " outside 1.." +
                            std::to_string(std::min(m.rows(), m.cols())));
  std::vector<Poly> gens = ci.relations();
  if (r == 1) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Poly e = ci.normal_form(m.at(i, j));
        if (!e.is_zero() && seen.insert(e.monic().to_string()).second) gens.push_back(e.monic());
      }
    return reduced_ideal_basis(gens, ci.ring());
  }
  if (m.rows() > 64 || m.cols() > 64) throw std::invalid_argument("minor_ideal: matrix larger than 64x64");
  if (binomial(m.rows(), r) * binomial(m.cols(), r) > 4000000)
    throw std::invalid_argument("minor_ideal: too many minors");
  GradedMatrix red = ci.reduce(m);
  MinorExpander ex(red, ci);
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(m.rows(), r, rs);
  subsets(m.cols(), r, cs);
  for (const auto& R : rs)
    for (const auto& C : cs) {
      Poly d = ex.det(R, C);
      if (!d.is_zero()) gens.push_back(d);
    }
  return reduced_ideal_basis(gens, ci.ring());
}

MinorIdealChain minor_ideal_chain(const MinimalResolution& res, std::size_t r, std::size_t first,
                                  std::size_t last) {
  MinorIdealChain chain;
  chain.r = r;
  chain.first_index = first;
  const CIPresentation& ci = *res.ci;
  for (std::size_t i = first; i <= last; ++i) {
    const GradedMatrix& d = res.differential(i);
    if (r > std::min(d.rows(), d.cols()))
      chain.ideals.push_back(reduced_ideal_basis(ci.relations(), ci.ring()));
    else
      chain.ideals.push_back(minor_ideal(d, r, ci));
  }
  std::optional<std::size_t> stab;
  for (std::size_t k = chain.ideals.size(); k-- > 0;) {
    if (k + 2 >= chain.ideals.size()) continue;
    if (chain.ideals[k] == chain.ideals[k + 2])
      stab = first + k;
    else
      break;
  }
  chain.stabilization = stab;
  return chain;
}

namespace {

int growth_degree(const std::vector<std::int64_t>& s) {
  if (std::all_of(s.begin(), s.end(), [](std::int64_t v) { return v == 0; })) return -1;
  std::vector<std::int64_t> d = s;
  for (int deg = 0; deg + 1 < static_cast<int>(s.size()); ++deg) {
    std::vector<std::int64_t> next;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) next.push_back(d[k + 1] - d[k]);
    d = std::move(next);
    if (std::all_of(d.begin(), d.end(), [](std::int64_t v) { return v == 0; })) return deg;
  }
  return static_cast<int>(s.size()) - 1;
}

}  // namespace

std::size_t complexity_estimate(const std::vector<std::size_t>& betti) {
  constexpr std::size_t kWindow = 8;
  if (betti.size() < kWindow)
    throw std::invalid_argument("complexity_estimate needs at least 8 Betti numbers");
  std::size_t start = betti.size() - std::min(kWindow, betti.size() - 1);
  std::vector<std::int64_t> even, odd;
  for (std::size_t i = start; i < betti.size(); ++i)
    (i % 2 == 0 ? even : odd).push_back(static_cast<std::int64_t>(betti[i]));
  int deg = std::max(growth_degree(even), growth_degree(odd));
  return deg < 0 ? 0 : static_cast<std::size_t>(deg + 1);
}

}  // namespace cires
