#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "kwb/grading.hpp"
#include "kwb/sparse.hpp"

namespace kwb {

/// Raised when a checked structural identity (d^2 = 0, Leibniz, mixed
/// identities, ...) fails; the message carries the first violation site.
struct IdentityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rank over Q via fraction-free elimination with sparsity pivoting.
int rank(const SparseMatrix& m);

/// Exact basis of the null space; size is always cols - rank. Vectors are
/// integral, content-free, with positive leading entry.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

/// Incremental reduced row echelon form over Q. Used for degreewise span
/// computations: pivot columns identify redundant coordinates, reduce()
/// rewrites a vector modulo the span.
class Rref {
 public:
  /// Inserts a row; returns true if it enlarged the span.
  bool insert(SparseVec v);
  /// Residual of v modulo the span (supported on non-pivot columns).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::set<int>& pivots() const { return pivot_set_; }

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> normalized row
  std::set<int> pivot_set_;
};

/// A bidegree-indexed chain complex inside a window. The differential
/// maps C_b to C_{b+(-1,0)} and is keyed by its source bidegree.
struct ChainComplexWindow {
  Window window;
  GradedBasis basis;
  std::map<Bidegree, SparseMatrix> diff;

  int dim(Bidegree b) const { return basis.dim(b); }
  /// Differential out of b, materialized as a zero matrix when absent.
  SparseMatrix diff_at(Bidegree b) const;
};

/// Homology dimensions per bidegree. Bidegrees whose incident
/// differentials may leave the window are flagged as truncated: their
/// value is provisional, every other value is exact.
struct HomologyReport {
  std::map<Bidegree, int> dims;
  std::set<Bidegree> truncated;

  int dim(Bidegree b) const {
    auto it = dims.find(b);
    return it == dims.end() ? 0 : it->second;
  }
  bool is_truncated(Bidegree b) const { return truncated.count(b) > 0; }
};

/// Checks d∘d = 0 inside the window (IdentityViolation on failure), then
/// reports dim ker - rank per bidegree.
HomologyReport homology(const ChainComplexWindow& complex);

}  // namespace kwb
