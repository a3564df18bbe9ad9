#include "cires/kmatrix.hpp"

#include <stdexcept>

namespace cires {

KMatrix KMatrix::identity(std::size_t n, PrimeField field) {
  KMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

KMatrix KMatrix::transpose() const {
  KMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

KMatrix KMatrix::scaled(Coeff c) const {
  KMatrix r = *this;
  for (auto& v : r.data_) v = field_.mul(v, c);
  return r;
}

KMatrix KMatrix::operator+(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("KMatrix shape mismatch");
  KMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
  return r;
}

KMatrix KMatrix::operator-(const KMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("KMatrix shape mismatch");
  KMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
  return r;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("KMatrix shape mismatch in product");
  KMatrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Coeff a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
    }
  return r;
}

bool KMatrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

KMatrix::Echelon KMatrix::row_reduce() const {
  Echelon e{*this, {}};
  KMatrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t piv = row;
    while (piv < rows_ && m.at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Coeff inv = field_.inv(m.at(row, col));
    for (std::size_t j = 0; j < cols_; ++j) m.at(row, j) = field_.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      Coeff f = m.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(row, j)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::optional<std::vector<Coeff>> KMatrix::solve(const std::vector<Coeff>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("KMatrix::solve: rhs size mismatch");
  KMatrix aug(rows_, cols_ + 1, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto e = aug.row_reduce();
  std::vector<Coeff> x(cols_, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == cols_) return std::nullopt;
    x[e.pivots[r]] = e.reduced.at(r, cols_);
  }
  return x;
}

std::optional<KMatrix> KMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  KMatrix aug(n, 2 * n, field_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto e = aug.row_reduce();
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  KMatrix inv(n, n, field_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.reduced.at(i, n + j);
  return inv;
}

std::vector<std::vector<Coeff>> KMatrix::kernel() const {
  auto e = row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = field_.neg(e.reduced.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cires
