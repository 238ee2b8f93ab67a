#pragma once

#include "kwb/algebra.hpp"

namespace kwb {

/// A bar word [a1|...|an]: letters reference augmentation-ideal basis
/// elements of the underlying algebra. Each letter is suspended: its
/// homological degree is raised by one, the Adams degree is untouched.
using BarWord = std::vector<std::pair<Bidegree, int>>;

inline Bidegree suspended(Bidegree b) { return {b.h + 1, b.a}; }

/// Tensor coalgebra on the suspended augmentation ideal, inside a
/// window: word bases, deconcatenation comultiplication (implicit in the
/// word structure) and the bar codifferential.
struct CoalgebraWindow {
  std::string name;
  Window window;
  const AlgebraWindow* algebra = nullptr;  // letters live here
  GradedBasis basis;
  std::map<Bidegree, std::vector<BarWord>> words;
  std::map<Bidegree, std::map<BarWord, int>> index;
  std::map<Bidegree, SparseMatrix> codiff;  // source keyed, bidegree (-1,0)

  int dim(Bidegree b) const { return basis.dim(b); }
  SparseMatrix codiff_at(Bidegree b) const;
  ChainComplexWindow as_complex() const;
  std::string word_label(const BarWord& w) const;
};

/// Normalized bar construction B(A). Precondition: A is Adams connected
/// (every ideal basis element has nonzero Adams degree of uniform sign).
/// The codifferential is the internal part (d applied to one letter)
/// plus the multiplication part (merging adjacent letters); signs follow
/// the Koszul rule on suspended degrees and codiff^2 = 0 is verified.
CoalgebraWindow bar_construction(const AlgebraWindow& a, const Window& window);

/// Degreewise linear dual of a coalgebra window, with bidegree (i,j)
/// dualized to (-i,-j). All algebra axioms are verified.
AlgebraWindow dual_algebra(const CoalgebraWindow& c);

/// Koszul dual A^! = dual of B(A), a dg algebra model for RHom_A(k,k).
AlgebraWindow koszul_dual(const AlgebraWindow& a, const Window& window);

/// Side-by-side dimension table with a per-bidegree verdict; pass means
/// equality on every untruncated bidegree.
struct DimComparison {
  std::string lhs_name;
  std::string rhs_name;
  std::map<Bidegree, std::pair<int, int>> dims;
  std::set<Bidegree> truncated;
  bool pass = true;

  void add(Bidegree b, int lhs, int rhs, bool trunc);
};

/// dim H((A^!)^!) against dim H(A) per bidegree.
DimComparison double_dual_report(const AlgebraWindow& a, const Window& window);

/// Classical quadratic dual T(V*)/(R-perp) of a quadratic presentation
/// (generators at bidegree (0,1), relations of Adams degree 2). Dual
/// generators are decorated with the suffix "_d".
Presentation quadratic_dual(const Presentation& pres);

/// Per-Adams-degree comparison of dim H(A^!) with the independently
/// expanded quadratic dual (the Koszul cross-check).
DimComparison compare_quadratic_vs_bar(const Presentation& pres, const Window& window);

}  // namespace kwb
