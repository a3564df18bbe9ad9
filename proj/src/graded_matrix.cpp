#include "cires/graded_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cires {

GradedMatrix::GradedMatrix(RingPtr ring, std::vector<int> row_twists, std::vector<int> col_twists)
    : ring_(std::move(ring)),
      row_twists_(std::move(row_twists)),
      col_twists_(std::move(col_twists)),
      entries_(row_twists_.size() * col_twists_.size(), Poly(ring_)) {}

GradedMatrix GradedMatrix::from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows,
                                     std::vector<int> row_twists,
                                     std::optional<std::vector<int>> col_twists,
                                     std::size_t ncols_if_empty) {
  std::size_t nrows = rows.size();
  std::size_t ncols = nrows ? rows[0].size() : ncols_if_empty;
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix rows");
  if (row_twists.empty()) row_twists.assign(nrows, 0);
  if (row_twists.size() != nrows) throw std::invalid_argument("row twist count mismatch");
  std::vector<int> ct;
  if (col_twists) {
    if (col_twists->size() != ncols) throw std::invalid_argument("column twist count mismatch");
    ct = *col_twists;
  } else {
    int fallback = row_twists.empty() ? 0 : *std::min_element(row_twists.begin(), row_twists.end());
    ct.assign(ncols, fallback);
    for (std::size_t j = 0; j < ncols; ++j) {
      std::optional<int> t;
      for (std::size_t i = 0; i < nrows; ++i) {
        const Poly& p = rows[i][j];
        if (p.is_zero()) continue;
        if (!p.is_homogeneous())
          throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not homogeneous: " + p.to_string());
        int want = p.degree() + row_twists[i];
        if (t && *t != want)
          throw std::invalid_argument("column " + std::to_string(j) +
                                      " is not homogeneous for the given row twists");
        t = want;
      }
      if (t) ct[j] = *t;
    }
  }
  GradedMatrix m(ring, std::move(row_twists), std::move(ct));
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!rows[i][j].is_zero()) require_same_ring(ring, rows[i][j].ring());
      m.at(i, j) = rows[i][j];
      if (!m.at(i, j).ring()) m.at(i, j) = Poly(ring);
    }
  return m;
}

GradedMatrix GradedMatrix::identity(RingPtr ring, const std::vector<int>& twists) {
  GradedMatrix m(ring, twists, twists);
  for (std::size_t i = 0; i < twists.size(); ++i) m.at(i, i) = Poly::constant(ring, 1);
  return m;
}

void GradedMatrix::set_row_twists(std::vector<int> t) {
  if (t.size() != rows()) throw std::invalid_argument("row twist count mismatch");
  row_twists_ = std::move(t);
}

void GradedMatrix::set_col_twists(std::vector<int> t) {
  if (t.size() != cols()) throw std::invalid_argument("column twist count mismatch");
  col_twists_ = std::move(t);
}

std::vector<Poly> GradedMatrix::column(std::size_t j) const {
  std::vector<Poly> c;
  c.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) c.push_back(at(i, j));
  return c;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("matrix product shape mismatch");
  GradedMatrix r(ring_ ? ring_ : o.ring_, row_twists_, o.col_twists_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols(); ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols(); ++j) {
        const Poly& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  GradedMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += o.entries_[k];
  return r;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw std::invalid_argument("matrix difference shape mismatch");
  GradedMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= o.entries_[k];
  return r;
}

GradedMatrix GradedMatrix::scaled(const Poly& p) const {
  GradedMatrix r = *this;
  for (auto& e : r.entries_) e = e * p;
  if (!p.is_zero() && p.is_homogeneous())
    for (auto& t : r.col_twists_) t += p.degree();
  return r;
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<int> rt, ct;
  for (int t : col_twists_) rt.push_back(-t);
  for (int t : row_twists_) ct.push_back(-t);
  GradedMatrix r(ring_, rt, ct);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) r.at(j, i) = at(i, j);
  return r;
}

GradedMatrix GradedMatrix::submatrix(const std::vector<std::size_t>& rs,
                                     const std::vector<std::size_t>& cs) const {
  std::vector<int> rt, ct;
  for (auto i : rs) rt.push_back(row_twists_.at(i));
  for (auto j : cs) ct.push_back(col_twists_.at(j));
  GradedMatrix r(ring_, rt, ct);
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < cs.size(); ++b) r.at(a, b) = at(rs[a], cs[b]);
  return r;
}

GradedMatrix GradedMatrix::without(std::optional<std::size_t> row,
                                   std::optional<std::size_t> col) const {
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < rows(); ++i)
    if (!row || *row != i) rs.push_back(i);
  for (std::size_t j = 0; j < cols(); ++j)
    if (!col || *col != j) cs.push_back(j);
  return submatrix(rs, cs);
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool GradedMatrix::is_homogeneous() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const Poly& p = at(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != col_twists_[j] - row_twists_[i]) return false;
    }
  return true;
}

KMatrix GradedMatrix::mod_maximal_ideal() const {
  KMatrix k(rows(), cols(), ring_ ? ring_->field() : PrimeField());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) k.at(i, j) = at(i, j).constant_term();
  return k;
}

std::vector<std::vector<std::string>> GradedMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

}  // namespace cires
