#ifndef CIRES_KMATRIX_HPP
#define CIRES_KMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cires/field.hpp"

namespace cires {

/// Dense matrix over the prime field, row-major.
class KMatrix {
 public:
  KMatrix() : field_(kDefaultCharacteristic) {}
  KMatrix(std::size_t rows, std::size_t cols, PrimeField field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

  static KMatrix identity(std::size_t n, PrimeField field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Coeff at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  KMatrix transpose() const;
  KMatrix scaled(Coeff c) const;
  KMatrix operator+(const KMatrix& o) const;
  KMatrix operator-(const KMatrix& o) const;
  KMatrix operator*(const KMatrix& o) const;
  bool operator==(const KMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero() const;

  struct Echelon;
  Echelon row_reduce() const;
  std::size_t rank() const;

  /// Some x with A x = b, if one exists.
  std::optional<std::vector<Coeff>> solve(const std::vector<Coeff>& b) const;
  std::optional<KMatrix> inverse() const;
  /// Basis of {x : A x = 0}, as column vectors.
  std::vector<std::vector<Coeff>> kernel() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  PrimeField field_;
  std::vector<Coeff> data_;
};

struct KMatrix::Echelon {
  KMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

inline std::size_t KMatrix::rank() const { return row_reduce().pivots.size(); }

}  // namespace cires

#endif
