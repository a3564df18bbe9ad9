#ifndef CIRES_GRADED_MATRIX_HPP
#define CIRES_GRADED_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cires/kmatrix.hpp"
#include "cires/poly.hpp"

namespace cires {

/// Matrix of polynomials describing a map of graded free modules
///   F = (+)_j R(-col_twist[j])  ->  G = (+)_i R(-row_twist[i]).
/// A homogeneous matrix has entry (i,j) zero or homogeneous of degree
/// col_twist[j] - row_twist[i]. Homogeneity is checked by the algorithms
/// that require it, not on construction: basis changes with mixed operator
/// degrees legitimately produce inhomogeneous matrices.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Zero matrix of the given shape.
  GradedMatrix(RingPtr ring, std::vector<int> row_twists, std::vector<int> col_twists);

  /// Builds from rows of entries. Column twists are inferred from the first
  /// nonzero entry of each column when not supplied; zero columns get the
  /// smallest row twist. Throws std::invalid_argument when an inferred twist
  /// is contradicted by another entry.
  static GradedMatrix from_rows(RingPtr ring, const std::vector<std::vector<Poly>>& rows,
                                std::vector<int> row_twists = {},
                                std::optional<std::vector<int>> col_twists = std::nullopt,
                                std::size_t ncols_if_empty = 0);
  static GradedMatrix identity(RingPtr ring, const std::vector<int>& twists);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return row_twists_.size(); }
  std::size_t cols() const { return col_twists_.size(); }
  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  void set_row_twists(std::vector<int> t);
  void set_col_twists(std::vector<int> t);

  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }
  std::vector<Poly> column(std::size_t j) const;

  GradedMatrix operator*(const GradedMatrix& o) const;
  GradedMatrix operator+(const GradedMatrix& o) const;
  GradedMatrix operator-(const GradedMatrix& o) const;
  GradedMatrix scaled(const Poly& p) const;
  GradedMatrix transpose() const;
  GradedMatrix submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const;
  GradedMatrix without(std::optional<std::size_t> row, std::optional<std::size_t> col) const;

  bool is_zero() const;
  bool is_homogeneous() const;
  bool operator==(const GradedMatrix& o) const {
    return rows() == o.rows() && cols() == o.cols() && entries_ == o.entries_;
  }

  /// Constant terms of all entries (the map tensored with the residue field).
  KMatrix mod_maximal_ideal() const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  RingPtr ring_;
  std::vector<int> row_twists_, col_twists_;
  std::vector<Poly> entries_;
};

}  // namespace cires

#endif
