#pragma once

#include "kwb/exactlin.hpp"
#include "kwb/presentation.hpp"

namespace kwb {

/// An augmented bigraded dg algebra materialized inside a window:
/// ordered bases, multiplication structure constants, differential
/// matrices. The (0,0) component is always one-dimensional, spanned by
/// the unit, so the augmentation ideal is everything off (0,0).
struct AlgebraWindow {
  std::string name;
  Window window;
  GradedBasis basis;
  /// (b1, b2) -> structure constants; entry i * dim(b2) + j is the
  /// product of basis elements i (at b1) and j (at b2), in the basis at
  /// b1 + b2. Present only when all three bidegrees are in the window.
  std::map<std::pair<Bidegree, Bidegree>, std::vector<SparseVec>> mult;
  /// d_b : A_b -> A_{b+(-1,0)}, keyed by source bidegree.
  std::map<Bidegree, SparseMatrix> diff;

  int dim(Bidegree b) const { return basis.dim(b); }
  bool has_mult(Bidegree b1, Bidegree b2) const { return mult.count({b1, b2}) > 0; }
  const SparseVec& product(Bidegree b1, int i, Bidegree b2, int j) const;
  /// Product of two coordinate vectors; requires the pair table.
  SparseVec product_vec(Bidegree b1, const SparseVec& x, Bidegree b2,
                        const SparseVec& y) const;
  SparseMatrix diff_at(Bidegree b) const;
  SparseVec diff_vec(Bidegree b, const SparseVec& x) const;

  /// Coefficient of the unit (the augmentation evaluated at x).
  Scalar augmentation(Bidegree b, const SparseVec& x) const;
  /// Projection onto the augmentation ideal: kills the unit coordinate.
  SparseVec ideal_part(Bidegree b, const SparseVec& x) const;
  /// All basis elements of the augmentation ideal, in bidegree order.
  std::vector<std::pair<Bidegree, int>> ideal_basis() const;

  /// The underlying chain complex (for H(A)).
  ChainComplexWindow as_complex() const;
};

enum class Verdict { Holds, Fails, Unknown };
std::string to_string(Verdict v);

/// Verdicts for the three nested finiteness classes, with witnesses on
/// failure. Verdicts respect the implication chain
/// Adams connected => strongly locally finite => weakly Adams connected.
struct FinitenessReport {
  Verdict strongly_locally_finite = Verdict::Unknown;
  Verdict adams_connected = Verdict::Unknown;
  Verdict weakly_adams_connected = Verdict::Unknown;
  std::string witness;
};

/// Expansion of a presentation: the algebra window plus the word-level
/// bookkeeping needed to reduce free words and evaluate morphisms.
struct ExpandedAlgebra {
  Presentation pres;
  AlgebraWindow algebra;
  /// All free words per bidegree, in deterministic (deglex) order.
  std::map<Bidegree, std::vector<Word>> words;
  /// Indices into words[] forming the quotient basis (matches
  /// algebra.basis order).
  std::map<Bidegree, std::vector<int>> basis_words;
  /// Normal form of each free word in quotient-basis coordinates.
  std::map<Bidegree, std::vector<SparseVec>> normal_forms;

  /// Normal form of a bihomogeneous polynomial at the given bidegree;
  /// words outside the window are rejected.
  SparseVec reduce(Bidegree b, const NcPoly& p) const;
};

struct ExpansionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Degreewise expansion: words modulo the span of { u * r * v } per
/// bidegree, multiplication and differential tables, all algebra axioms
/// verified inside the window.
ExpandedAlgebra expand_presentation(const Presentation& pres, const Window& window);

/// Decides the finiteness classes symbolically from generator bidegrees.
/// The weakly-Adams-connected verdict is Holds only when implied by the
/// implication chain; its defining condition is not decidable from a
/// presentation and is otherwise reported Unknown.
FinitenessReport classify_finiteness(const Presentation& pres);

/// Diagnostic sweep over every in-window instance of associativity,
/// Leibniz, d^2 = 0, unit and augmentation axioms. Empty means clean.
std::vector<std::string> check_axioms(const AlgebraWindow& a);

/// Generator-level morphism: source generator label -> polynomial in the
/// target presentation's generators.
using GeneratorImages = std::map<std::string, NcPoly>;

/// Bidegree-indexed matrices of the induced linear map. Verifies that
/// the assignment preserves bidegrees, relations, differentials and
/// products inside the window; IdentityViolation carries a witness.
std::map<Bidegree, SparseMatrix> induced_on_algebra(const ExpandedAlgebra& src,
                                                    const ExpandedAlgebra& dst,
                                                    const GeneratorImages& images);

}  // namespace kwb
