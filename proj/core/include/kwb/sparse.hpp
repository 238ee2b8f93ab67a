#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kwb/rational.hpp"

namespace kwb {

/// Sparse coordinate vector; zero entries are never stored.
using SparseVec = std::map<int, Scalar>;

void axpy(SparseVec& dst, const Scalar& c, const SparseVec& src);
SparseVec scaled(const SparseVec& v, const Scalar& c);
bool vec_is_zero(const SparseVec& v);

/// Sparse matrix over Q with explicit dimensions. Entry map keyed by
/// (row, col); zeros are dropped on write.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  bool is_zero() const { return entries_.empty(); }

  Scalar get(int r, int c) const;
  void set(int r, int c, const Scalar& v);
  void add(int r, int c, const Scalar& v);

  const std::map<std::pair<int, int>, Scalar>& entries() const { return entries_; }

  /// Column c as a sparse vector.
  SparseVec column(int c) const;
  void set_column(int c, const SparseVec& v);

  SparseVec apply(const SparseVec& v) const;      // matrix * vector
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  SparseMatrix transpose() const;

  static SparseMatrix identity(int n);

  bool operator==(const SparseMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Scalar> entries_;
};

}  // namespace kwb
