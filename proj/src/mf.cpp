#include "cires/mf.hpp"

#include <map>
#include <stdexcept>

namespace cires {

namespace {

void require_square_pair(const GradedMatrix& phi, const GradedMatrix& psi) {
  if (phi.rows() != phi.cols() || psi.rows() != psi.cols() || phi.rows() != psi.rows())
    throw std::invalid_argument("matrix factorization needs square matrices of equal size");
}

GradedMatrix scalar_identity(const RingPtr& ring, const std::vector<int>& rt,
                             const std::vector<int>& ct, const Poly& f) {
  GradedMatrix m(ring, rt, ct);
  for (std::size_t i = 0; i < rt.size(); ++i) m.at(i, i) = f;
  return m;
}

std::vector<int> plus(std::vector<int> v, int d) {
  for (auto& x : v) x += d;
  return v;
}

void all_monomials(std::size_t nvars, int degree, std::size_t var, Monomial& cur,
                   std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.exp[var] = static_cast<std::uint16_t>(degree);
    cur.deg += degree;
    out.push_back(cur);
    cur.deg -= degree;
    cur.exp[var] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint16_t>(e);
    cur.deg += e;
    all_monomials(nvars, degree - e, var + 1, cur, out);
    cur.deg -= e;
  }
  cur.exp[var] = 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars == 0) {
    if (degree == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur;
  all_monomials(nvars, degree, 0, cur, out);
  return out;
}

Poly expand(const GradedMatrix& m, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Poly acc(m.ring());
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& e = m.at(rows[0], cols[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != k) sub_cols.push_back(cols[l]);
    Poly term = e * expand(m, sub_rows, sub_cols);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

bool is_linear_form(const Poly& p) { return !p.is_zero() && p.is_homogeneous() && p.degree() == 1; }

}  // namespace

Poly determinant(const GradedMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (m.rows() == 0) return Poly::constant(m.ring(), 1);
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return expand(m, idx, idx);
}

GradedMatrix adjugate(const GradedMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
  const std::size_t n = m.rows();
  GradedMatrix adj(m.ring(), m.col_twists(), m.row_twists());
  if (n == 1) {
    adj.at(0, 0) = Poly::constant(m.ring(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rs, cs;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rs.push_back(k);
        if (k != i) cs.push_back(k);
      }
      Poly minor = expand(m, rs, cs);
      adj.at(i, j) = (i + j) % 2 == 0 ? minor : -minor;
    }
  return adj;
}

bool mf_validate(const GradedMatrix& phi, const GradedMatrix& psi, const Poly& f,
                 const CIPresentation* ci) {
  require_square_pair(phi, psi);
  GradedMatrix a = phi * psi, b = psi * phi;
  GradedMatrix fa = scalar_identity(phi.ring(), a.row_twists(), a.col_twists(), f);
  GradedMatrix fb = scalar_identity(phi.ring(), b.row_twists(), b.col_twists(), f);
  if (ci) return ci->reduce(a - fa).is_zero() && ci->reduce(b - fb).is_zero();
  return a == fa && b == fb;
}

bool mf_validate(const MatrixFactorization& mf, const CIPresentation* ci) {
  return mf_validate(mf.phi, mf.psi, mf.f, ci);
}

MinimalResolution mf_periodic_resolution(const MatrixFactorization& mf, CIPtr ci,
                                         std::size_t length) {
  if (!mf_validate(mf)) throw std::invalid_argument("mf_periodic_resolution: not a matrix factorization");
  if (mf.f.is_zero() || !mf.f.is_homogeneous())
    throw std::invalid_argument("mf_periodic_resolution: f must be a nonzero form");
  if (!ci->normal_form(mf.f).is_zero())
    throw std::invalid_argument("mf_periodic_resolution: f is not in the defining ideal");
  GradedMatrix phi = ci->reduce(mf.phi), psi = ci->reduce(mf.psi);
  if (!phi.is_homogeneous() || !psi.is_homogeneous())
    throw std::invalid_argument("mf_periodic_resolution: matrices are not homogeneous");
  for (const GradedMatrix* m : {&phi, &psi})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (m->at(i, j).constant_term() != 0)
          throw std::invalid_argument("mf_periodic_resolution: unit entry, coker phi has a free summand");
  const int d = mf.f.degree();
  const std::vector<int> H = phi.row_twists(), G = phi.col_twists();
  MinimalResolution res;
  res.ci = ci;
  res.betti.push_back(phi.rows());
  for (std::size_t i = 1; i <= length; ++i) {
    const int k = static_cast<int>((i - 1) / 2);
    GradedMatrix m = i % 2 == 1 ? phi : psi;
    if (i % 2 == 1) {
      m.set_row_twists(plus(H, k * d));
      m.set_col_twists(plus(G, k * d));
    } else {
      m.set_row_twists(plus(G, k * d));
      m.set_col_twists(plus(H, (k + 1) * d));
    }
    res.betti.push_back(m.cols());
    res.diffs.push_back(std::move(m));
  }
  return res;
}

MatrixFactorization mf_from_projdim1(const GradedMatrix& presentation, const Poly& f) {
  if (!presentation.is_homogeneous() || f.is_zero() || !f.is_homogeneous())
    throw std::invalid_argument("mf_from_projdim1: inputs must be homogeneous");
  GradedMatrix phi = minimalize({presentation})[0];
  if (phi.rows() != phi.cols())
    throw std::invalid_argument("mf_from_projdim1: minimal presentation is not square (" +
                                std::to_string(phi.rows()) + " x " + std::to_string(phi.cols()) + ")");
  const RingPtr& ring = phi.ring();
  const PrimeField& F = ring->field();
  const std::size_t n = phi.rows(), nv = ring->nvars();
  const int d = f.degree();
  const std::vector<int>& H = phi.row_twists();
  const std::vector<int>& G = phi.col_twists();
  GradedMatrix psi(ring, G, plus(H, d));
  for (std::size_t k = 0; k < n; ++k) {
    // Unknowns: coefficients of psi(i, k) in degree H_k + d - G_i.
    std::vector<std::pair<std::size_t, Monomial>> unknowns;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& m : monomials_of_degree(nv, H[k] + d - G[i])) unknowns.emplace_back(i, m);
    std::map<std::pair<std::size_t, std::vector<std::uint16_t>>, std::size_t> eq_index;
    auto key = [](std::size_t r, const Monomial& m) {
      return std::make_pair(r, std::vector<std::uint16_t>(m.exp.begin(), m.exp.end()));
    };
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> columns(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      const auto& [i, mono] = unknowns[u];
      for (std::size_t r = 0; r < n; ++r)
        for (const auto& t : phi.at(r, i).terms()) {
          auto [it, fresh] = eq_index.try_emplace(key(r, t.mono * mono), eq_index.size());
          columns[u].emplace_back(it->second, t.coeff);
        }
    }
    for (const auto& t : f.terms()) eq_index.try_emplace(key(k, t.mono), eq_index.size());
    KMatrix A(eq_index.size(), unknowns.size(), F);
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      for (const auto& [e, c] : columns[u]) A.at(e, u) = F.add(A.at(e, u), c);
    std::vector<Coeff> b(eq_index.size(), 0);
    for (const auto& t : f.terms()) b[eq_index.at(key(k, t.mono))] = t.coeff;
    auto x = A.solve(b);
    if (!x) throw std::invalid_argument("mf_from_projdim1: no psi with phi * psi = f * I");
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if ((*x)[u] != 0) psi.at(unknowns[u].first, k) += Poly::monomial(ring, unknowns[u].second, (*x)[u]);
  }
  if (!mf_validate(phi, psi, f))
    throw std::invalid_argument("mf_from_projdim1: psi * phi != f * I");
  return {phi, psi, f};
}

MatrixFactorization ulrich_product(const CIPresentation& ci, const std::vector<Poly>& factors) {
  if (ci.codim() == 0) throw std::invalid_argument("ulrich_product: no relations");
  const Poly& f1 = ci.relations()[0];
  const RingPtr& ring = ci.ring();
  if (factors.size() != static_cast<std::size_t>(f1.degree()))
    throw std::invalid_argument("ulrich_product: need deg f_1 linear factors");
  for (const auto& l : factors)
    if (!is_linear_form(l)) throw std::invalid_argument("ulrich_product: factor is not a linear form: " + l.to_string());
  Poly head = Poly::constant(ring, 1);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) head = head * factors[i];
  Poly prod = head * factors.back();
  const PrimeField& F = ring->field();
  Coeff c = F.div(f1.lead().coeff, prod.lead().coeff);
  if (!(prod.scaled(c) == f1))
    throw std::invalid_argument("ulrich_product: factors do not multiply to f_1 = " + f1.to_string());
  const int d = f1.degree();
  MatrixFactorization mf;
  mf.f = f1;
  mf.phi = GradedMatrix(ring, {0}, {d - 1});
  mf.phi.at(0, 0) = head;
  mf.psi = GradedMatrix(ring, {d - 1}, {d});
  mf.psi.at(0, 0) = factors.back().scaled(c);
  if (!mf_validate(mf)) throw std::logic_error("ulrich_product: factorization check failed");
  return mf;
}

MatrixFactorization ulrich_product(const CIPresentation& ci) {
  if (ci.codim() == 0) throw std::invalid_argument("ulrich_product: no relations");
  const Poly& f1 = ci.relations()[0];
  if (f1.size() != 1) throw std::invalid_argument("ulrich_product: f_1 is not a monomial; supply factors");
  std::vector<Poly> factors;
  const Monomial& m = f1.lead().mono;
  for (std::size_t v = 0; v < ci.nvars(); ++v)
    for (int e = 0; e < m.exp[v]; ++e) factors.push_back(Poly::variable(ci.ring(), v));
  return ulrich_product(ci, factors);
}

MatrixFactorization ulrich_determinantal(const CIPresentation& ci, const GradedMatrix& L) {
  if (ci.codim() == 0) throw std::invalid_argument("ulrich_determinantal: no relations");
  const Poly& f1 = ci.relations()[0];
  const std::size_t d = static_cast<std::size_t>(f1.degree());
  if (L.rows() != d || L.cols() != d)
    throw std::invalid_argument("ulrich_determinantal: L must be deg f_1 square");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!L.at(i, j).is_zero() && !is_linear_form(L.at(i, j)))
        throw std::invalid_argument("ulrich_determinantal: entries must be linear forms");
  Poly det = determinant(L);
  if (det.is_zero()) throw std::invalid_argument("ulrich_determinantal: det L = 0");
  const PrimeField& F = ci.ring()->field();
  Coeff c = F.div(f1.lead().coeff, det.lead().coeff);
  if (!(det.scaled(c) == f1))
    throw std::invalid_argument("ulrich_determinantal: det L is not a multiple of f_1");
  const int di = static_cast<int>(d);
  MatrixFactorization mf;
  mf.f = f1;
  mf.psi = L;
  mf.psi.set_row_twists(std::vector<int>(d, di - 1));
  mf.psi.set_col_twists(std::vector<int>(d, di));
  mf.phi = adjugate(L).scaled(Poly::constant(ci.ring(), c));
  mf.phi.set_row_twists(std::vector<int>(d, 0));
  mf.phi.set_col_twists(std::vector<int>(d, di - 1));
  if (!mf_validate(mf)) throw std::logic_error("ulrich_determinantal: factorization check failed");
  return mf;
}

}  // namespace cires
