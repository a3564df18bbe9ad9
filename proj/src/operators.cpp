#include "cires/operators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cires {

std::vector<GradedMatrix> lift_resolution(const MinimalResolution& res) {
  std::vector<GradedMatrix> out;
  for (const auto& d : res.diffs) out.push_back(res.ci->reduce(d));
  return out;
}

const GradedMatrix& OperatorFamily::t(std::size_t j, std::size_t i) const {
  if (j < 1 || j > ops.size()) throw std::out_of_range("operator index out of range");
  if (i < 2 || i > length()) throw std::out_of_range("operator degree out of range");
  return ops[j - 1][i];
}

namespace {

GradedMatrix shifted_rows(const GradedMatrix& m, int s) {
  GradedMatrix r = m;
  std::vector<int> tw = m.row_twists();
  for (auto& t : tw) t += s;
  r.set_row_twists(tw);
  return r;
}

GradedMatrix hstack(const GradedMatrix& a, const GradedMatrix& b) {
  std::vector<int> ct = a.col_twists();
  ct.insert(ct.end(), b.col_twists().begin(), b.col_twists().end());
  GradedMatrix r(a.ring(), a.row_twists(), ct);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

GradedMatrix vstack(const GradedMatrix& a, const GradedMatrix& b) {
  std::vector<int> rt = a.row_twists();
  rt.insert(rt.end(), b.row_twists().begin(), b.row_twists().end());
  GradedMatrix r(a.ring(), rt, a.col_twists());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

/// Rows `keep` of the identity on F with the given twists.
GradedMatrix selection(const RingPtr& ring, const std::vector<int>& twists,
                       const std::vector<std::size_t>& keep) {
  std::vector<int> rt;
  for (auto k : keep) rt.push_back(twists[k]);
  GradedMatrix s(ring, rt, twists);
  for (std::size_t r = 0; r < keep.size(); ++r) s.at(r, keep[r]) = Poly::constant(ring, 1);
  return s;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& J) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k)
    if (std::find(J.begin(), J.end(), k) == J.end()) out.push_back(k);
  return out;
}

Poly unit_inverse(const Poly& u, const CIPresentation& ci) {
  const PrimeField& F = ci.ring()->field();
  Coeff c0 = u.constant_term();
  if (c0 == 0) throw std::invalid_argument("pivot is not a unit");
  Coeff inv = F.inv(c0);
  if (u.is_constant()) return Poly::constant(ci.ring(), inv);
  if (!ci.is_artinian())
    throw std::invalid_argument("inhomogeneous unit inverse needs an Artinian ring");
  Poly x = ci.normal_form((Poly::constant(ci.ring(), c0) - u).scaled(inv));
  Poly sum = Poly::constant(ci.ring(), 1), power = Poly::constant(ci.ring(), 1);
  for (;;) {
    power = ci.normal_form(power * x);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.scaled(inv);
}

}  // namespace

GradedMatrix invert_over_A(const GradedMatrix& m, const CIPresentation& ci) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert_over_A: matrix not square");
  const std::size_t n = m.rows();
  const RingPtr& ring = ci.ring();
  GradedMatrix a = ci.reduce(m);
  GradedMatrix inv(ring, m.col_twists(), m.row_twists());
  for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = Poly::constant(ring, 1);
  // Row operations on [a | inv].
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c).constant_term() == 0) ++piv;
    if (piv == n) throw std::invalid_argument("invert_over_A: matrix is not invertible mod m");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Poly pinv = unit_inverse(a.at(c, c), ci);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) = ci.normal_form(a.at(c, j) * pinv);
      inv.at(c, j) = ci.normal_form(inv.at(c, j) * pinv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      Poly factor = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a.at(c, j).is_zero()) a.at(i, j) = ci.normal_form(a.at(i, j) - factor * a.at(c, j));
        if (!inv.at(c, j).is_zero()) inv.at(i, j) = ci.normal_form(inv.at(i, j) - factor * inv.at(c, j));
      }
    }
  }
  return inv;
}

OperatorFamily eisenbud_operators(const std::vector<GradedMatrix>& lifted, CIPtr ci) {
  OperatorFamily fam;
  fam.ci = ci;
  fam.relations = ci->relations();
  fam.lifted = lifted;
  const std::size_t c = ci->codim();
  const auto s = ci->degrees();
  fam.ops.assign(c, std::vector<GradedMatrix>(2));
  for (std::size_t i = 2; i <= lifted.size(); ++i) {
    GradedMatrix sq = lifted[i - 2] * lifted[i - 1];
    std::vector<GradedMatrix> t;
    for (std::size_t j = 0; j < c; ++j) {
      GradedMatrix z(ci->ring(), lifted[i - 2].row_twists(), lifted[i - 1].col_twists());
      t.push_back(shifted_rows(z, s[j]));
    }
    for (std::size_t r = 0; r < sq.rows(); ++r)
      for (std::size_t col = 0; col < sq.cols(); ++col) {
        const Poly& e = sq.at(r, col);
        if (e.is_zero()) continue;
        if (!ci->normal_form(e).is_zero())
          throw std::runtime_error("squared lifted differential has an entry outside (f) in degree " +
                                   std::to_string(i) + ": " + e.to_string());
        auto cof = ci->division(e);
        for (std::size_t j = 0; j < c; ++j) t[j].at(r, col) = cof[j];
      }
    for (std::size_t j = 0; j < c; ++j) fam.ops[j].push_back(std::move(t[j]));
  }
  if (!operators_identity_holds(fam)) throw std::logic_error("operator identity failed after division");
  return fam;
}

bool operators_identity_holds(const OperatorFamily& ops) {
  for (std::size_t i = 2; i <= ops.length(); ++i) {
    GradedMatrix sq = ops.lifted[i - 2] * ops.lifted[i - 1];
    GradedMatrix sum(sq.ring(), sq.row_twists(), sq.col_twists());
    for (std::size_t j = 1; j <= ops.codim(); ++j) sum = sum + ops.t(j, i).scaled(ops.relations[j - 1]);
    if (!(sum == sq)) return false;
  }
  return true;
}

bool operators_are_chain_maps(const OperatorFamily& ops) {
  const CIPresentation& ci = *ops.ci;
  // d_{i-2} t^{(i)} = t^{(i-1)} d_i as maps F_i -> F_{i-3}.
  for (std::size_t j = 1; j <= ops.codim(); ++j)
    for (std::size_t i = 3; i <= ops.length(); ++i) {
      GradedMatrix lhs = ops.lifted[i - 3] * ops.t(j, i);
      GradedMatrix rhs = ops.t(j, i - 1) * ops.lifted[i - 1];
      if (!ci.reduce(lhs - rhs).is_zero()) return false;
    }
  return true;
}

namespace {

Poly determinant(const PolyMatrix& a, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return a[rows[0]][cols[0]];
  const RingPtr& ring = a[0][0].ring();
  Poly acc(ring);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& e = a[rows[0]][cols[k]];
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != k) sub_cols.push_back(cols[l]);
    Poly term = e * determinant(a, sub_rows, sub_cols);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

OperatorFamily operators_change_basis(const OperatorFamily& ops, const PolyMatrix& alpha) {
  const std::size_t c = ops.codim();
  if (alpha.size() != c) throw std::invalid_argument("alpha must be c x c");
  for (const auto& row : alpha)
    if (row.size() != c) throw std::invalid_argument("alpha must be c x c");
  const RingPtr ring = ops.ci->ring();
  OperatorFamily out = ops;
  if (c == 0) return out;
  PolyMatrix a = alpha;
  for (auto& row : a)
    for (auto& p : row)
      if (!p.ring()) p = Poly(ring);
  std::vector<std::size_t> idx(c);
  for (std::size_t k = 0; k < c; ++k) idx[k] = k;
  Poly det = determinant(a, idx, idx);
  if (det.is_zero() || !det.is_constant())
    throw std::invalid_argument("alpha is not invertible: determinant " + det.to_string());
  Coeff det_inv = ring->field().inv(det.constant_term());
  // alpha^{-1} = adj(alpha) / det.
  PolyMatrix inv(c, std::vector<Poly>(c, Poly(ring)));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (c == 1) {
        inv[i][j] = Poly::constant(ring, det_inv);
        continue;
      }
      std::vector<std::size_t> rs, cs;
      for (std::size_t k = 0; k < c; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      Poly minor = determinant(a, rs, cs);
      inv[i][j] = ((i + j) % 2 == 0 ? minor : -minor).scaled(det_inv);
    }
  std::vector<Poly> g(c, Poly(ring));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t k = 0; k < c; ++k) g[i] += inv[i][k] * ops.relations[k];
  out.relations = g;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t deg = 2; deg <= ops.length(); ++deg) {
      const GradedMatrix& first = ops.t(1, deg);
      int shift = !g[i].is_zero() && g[i].is_homogeneous() ? g[i].degree() : ops.ci->degrees()[i];
      std::vector<int> rt = ops.lifted[deg - 2].row_twists();
      for (auto& t : rt) t += shift;
      GradedMatrix acc(ring, rt, first.col_twists());
      for (std::size_t k = 0; k < c; ++k)
        if (!a[k][i].is_zero()) acc = acc + ops.t(k + 1, deg).scaled(a[k][i]);
      out.ops[i][deg] = std::move(acc);
    }
  if (!operators_identity_holds(out)) throw std::logic_error("operator identity failed after change of basis");
  return out;
}

Realization realize_cohomology_element(const OperatorFamily& ops, const KMatrix& beta) {
  const std::size_t c = ops.codim();
  if (beta.rows() != c || beta.cols() != c) throw std::invalid_argument("beta must be c x c");
  if (!beta.inverse()) throw std::invalid_argument("beta is singular");
  const RingPtr ring = ops.ci->ring();
  PolyMatrix alpha(c, std::vector<Poly>(c, Poly(ring)));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t k = 0; k < c; ++k) alpha[i][k] = Poly::constant(ring, beta.at(k, i));
  Realization r;
  r.ops = operators_change_basis(ops, alpha);
  r.g = r.ops.relations;
  if (!ideal_equal(r.g, ops.relations, *ops.ci))
    throw std::logic_error("realized relations generate a different ideal");
  return r;
}

ExtAction ext_action(const OperatorFamily& ops) {
  ExtAction ext;
  ext.betti.push_back(ops.lifted.empty() ? 0 : ops.lifted[0].rows());
  for (const auto& d : ops.lifted) ext.betti.push_back(d.cols());
  ext.maps.assign(ops.codim(), {});
  for (std::size_t j = 1; j <= ops.codim(); ++j)
    for (std::size_t n = 0; n + 2 <= ops.length(); ++n)
      ext.maps[j - 1].push_back(ops.t(j, n + 2).mod_maximal_ideal().transpose());
  return ext;
}

bool ext_action_commutes(const ExtAction& ext) {
  for (std::size_t i = 1; i <= ext.codim(); ++i)
    for (std::size_t j = i + 1; j <= ext.codim(); ++j)
      for (std::size_t n = 0; n + 2 < ext.maps[0].size(); ++n)
        if (!(ext.T(i, n + 2) * ext.T(j, n) == ext.T(j, n + 2) * ext.T(i, n))) return false;
  return true;
}

KMatrix combined_action(const ExtAction& ext, const std::vector<Coeff>& a, std::size_t n) {
  const KMatrix& first = ext.T(1, n);
  KMatrix acc(first.rows(), first.cols(), first.field());
  for (std::size_t j = 1; j <= ext.codim(); ++j) acc = acc + ext.T(j, n).scaled(a.at(j - 1));
  return acc;
}

FilterRegularResult filter_regular_search(const ExtAction& ext, std::size_t lo, std::size_t hi,
                                          std::size_t attempts, std::uint64_t seed) {
  if (ext.codim() == 0) throw std::invalid_argument("filter_regular_search: no operators (c = 0)");
  if (hi < lo || hi >= ext.maps[0].size())
    throw std::out_of_range("filter_regular_search: window outside the computed Ext range");
  const PrimeField F = ext.maps[0][0].field();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p * p;
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> Coeff {
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<Coeff>(x % p);
  };
  std::ostringstream report;
  for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
    std::vector<Coeff> a(ext.codim());
    do
      for (auto& v : a) v = draw();
    while (std::all_of(a.begin(), a.end(), [](Coeff v) { return v == 0; }));
    bool ok = true;
    report << "attempt " << attempt << ":";
    for (std::size_t n = lo; n <= hi; ++n) {
      std::size_t rank = combined_action(ext, a, n).rank();
      if (rank != ext.betti[n]) {
        ok = false;
        report << " n=" << n << " rank " << rank << " < " << ext.betti[n];
      }
    }
    report << "\n";
    if (ok) return {a, attempt};
  }
  throw std::runtime_error("filter_regular_search: no injective combination found\n" + report.str());
}

SectionData section_construction(const MinimalResolution& res, const OperatorFamily& ops,
                                 const std::vector<Coeff>& xi, std::size_t lo, std::size_t hi) {
  const CIPresentation& ci = *res.ci;
  const RingPtr& ring = ci.ring();
  if (xi.size() != ops.codim()) throw std::invalid_argument("section_construction: xi has wrong length");
  if (hi < lo || hi + 2 > ops.length() || hi + 2 > res.length())
    throw std::out_of_range("section_construction: window exceeds the resolution");
  SectionData sd;
  sd.xi = xi;
  sd.lo = lo;
  sd.hi = hi;
  const auto s = ci.degrees();
  std::optional<int> common;
  for (std::size_t j = 0; j < xi.size(); ++j)
    if (xi[j] != 0) {
      if (common && *common != s[j]) sd.homogeneous = false;
      common = s[j];
    }
  if (!common) throw std::invalid_argument("section_construction: xi is zero");

  auto make_xi = [&](std::size_t n) {
    const GradedMatrix& first = ops.t(1, n + 2);
    std::vector<int> rt = res.twists(n);
    for (auto& t : rt) t += *common;
    GradedMatrix acc(ring, rt, first.col_twists());
    for (std::size_t j = 0; j < xi.size(); ++j)
      if (xi[j] != 0) acc = acc + ops.t(j + 1, n + 2).scaled(Poly::constant(ring, xi[j]));
    return ci.reduce(acc);
  };
  auto surjective = [&](const GradedMatrix& X, std::size_t n) {
    return X.mod_maximal_ideal().rank() == res.betti[n];
  };

  std::vector<GradedMatrix> all_xi;
  for (std::size_t n = lo; n <= hi; ++n) all_xi.push_back(make_xi(n));
  if (!surjective(all_xi.back(), hi))
    throw std::runtime_error("section_construction: Xi_" + std::to_string(hi) + " is not surjective");
  sd.n0 = hi;
  while (sd.n0 > lo && surjective(all_xi[sd.n0 - 1 - lo], sd.n0 - 1)) --sd.n0;
  sd.surjective_on_window = true;

  for (std::size_t n = sd.n0; n <= hi; ++n) {
    const GradedMatrix& X = all_xi[n - lo];
    const std::size_t bn = res.betti[n], bn2 = res.betti[n + 2];
    auto ech = X.mod_maximal_ideal().row_reduce();
    std::vector<std::size_t> J = ech.pivots;
    std::vector<std::size_t> rows(bn);
    for (std::size_t i = 0; i < bn; ++i) rows[i] = i;
    GradedMatrix inv = invert_over_A(X.submatrix(rows, J), ci);
    const std::vector<int> tw2 = res.twists(n + 2);
    GradedMatrix P(ring, tw2, X.row_twists());
    for (std::size_t r = 0; r < J.size(); ++r)
      for (std::size_t c = 0; c < bn; ++c) P.at(J[r], c) = inv.at(r, c);
    auto notJ = complement(bn2, J);
    std::vector<int> ct;
    for (auto k : notJ) ct.push_back(tw2[k]);
    GradedMatrix E = selection(ring, tw2, notJ).transpose();
    E.set_row_twists(tw2);
    E.set_col_twists(ct);
    GradedMatrix C = ci.reduce(E - P * X * E);
    C.set_col_twists(ct);
    sd.Xi.push_back(X);
    sd.J.push_back(J);
    sd.C.push_back(C);
    sd.P.push_back(P);
    sd.kernel_rank.push_back(notJ.size());
  }

  bool chain = true, block = true, kernel = true, minimal = true, additivity = true;
  for (std::size_t n = sd.n0; n <= hi; ++n)
    if (res.betti[n + 2] != res.betti[n] + sd.kernel_rank[n - sd.n0]) additivity = false;
  for (std::size_t n = sd.n0 + 1; n <= hi; ++n) {
    const std::size_t k = n - sd.n0;
    const GradedMatrix& d = res.differential(n + 2);
    auto S = selection(ring, res.twists(n + 1), complement(res.betti[n + 1], sd.J[k - 1]));
    GradedMatrix delta = ci.reduce(S * d * sd.C[k]);
    GradedMatrix U = ci.reduce(S * d * sd.P[k]);
    delta.set_col_twists(sd.C[k].col_twists());
    sd.delta.push_back(delta);
    sd.U.push_back(U);

    if (!ci.reduce(sd.Xi[k - 1] * d - res.differential(n) * sd.Xi[k]).is_zero()) chain = false;
    if (!ci.reduce(d * sd.C[k] - sd.C[k - 1] * delta).is_zero()) kernel = false;
    if (ord_matrix(delta, ci) < 1) minimal = false;

    GradedMatrix Binv_prev = vstack(S, sd.Xi[k - 1]);
    GradedMatrix B = hstack(sd.C[k], sd.P[k]);
    GradedMatrix Bprev = hstack(sd.C[k - 1], sd.P[k - 1]);
    GradedMatrix I_prev = GradedMatrix::identity(ring, res.twists(n + 1));
    if (!(ci.reduce(Binv_prev * Bprev) == I_prev)) block = false;
    GradedMatrix lhs = ci.reduce(Binv_prev * d * B);
    GradedMatrix zero(ring, res.twists(n - 1), sd.C[k].col_twists());
    GradedMatrix rhs = vstack(hstack(delta, U), hstack(zero, res.differential(n)));
    if (!(lhs == rhs)) block = false;
  }
  bool complex_ok = true;
  for (std::size_t k = 0; k + 1 < sd.delta.size(); ++k)
    if (!ci.reduce(sd.delta[k] * sd.delta[k + 1]).is_zero()) complex_ok = false;
  sd.chain_map = chain;
  sd.block_form = block;
  sd.kernel_identity = kernel;
  sd.delta_minimal = minimal;
  sd.delta_complex = complex_ok;
  sd.betti_additivity = additivity;
  return sd;
}

}  // namespace cires
