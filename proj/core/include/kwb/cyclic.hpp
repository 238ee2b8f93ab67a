#pragma once

#include "kwb/bar.hpp"

namespace kwb {

/// Normalized Hochschild chain a0 (x) [a1|...|an]: head in A, letters in
/// the augmentation ideal (suspended, as in the bar module).
struct HChain {
  std::pair<Bidegree, int> head;
  BarWord letters;
  auto operator<=>(const HChain&) const = default;
};

/// Spaces with two anticommuting differentials: b of bidegree (-1,0) and
/// B (the Connes operator) of bidegree (+1,0).
struct MixedComplexWindow {
  std::string name;
  Window window;
  GradedBasis basis;
  std::map<Bidegree, std::vector<HChain>> chains;
  std::map<Bidegree, std::map<HChain, int>> index;
  std::map<Bidegree, SparseMatrix> b_op;
  std::map<Bidegree, SparseMatrix> B_op;

  int dim(Bidegree b) const { return basis.dim(b); }
  SparseMatrix b_at(Bidegree b) const;
  SparseMatrix B_at(Bidegree b) const;
  /// Index of the chain 1 (x) [] at (0,0), or -1 when absent.
  int unit_chain() const;
};

/// Normalized Hochschild mixed complex (C(A), b, B). All three mixed
/// identities are verified inside the window.
MixedComplexWindow hochschild_mixed(const AlgebraWindow& a, const Window& window);

/// Degreewise linear dual: bidegrees flipped, operators signed
/// transposes. The dual of (C, b, B) carries (b*, B*).
MixedComplexWindow dual_mixed(const MixedComplexWindow& m);

/// Mixed complex of a conilpotent coalgebra: chains are words of words,
/// the boundary splits letters by deconcatenation instead of merging.
MixedComplexWindow coalgebra_mixed(const CoalgebraWindow& c, const Window& window);

enum class CyclicVariant { Negative, Periodic, Cyclic, CochainCyclic };
std::string to_string(CyclicVariant v);

/// One u-power band of a cyclic-type total complex at a fixed bidegree.
struct CyclicSlice {
  int power;        // exponent of the degree (-2,0) variable
  Bidegree mixed;   // contributing mixed-complex bidegree
  int offset;
  int dim;
};

/// Total complex of a mixed complex against a formal variable: elements
/// sum x_i u^i with the variant fixing the allowed power range.
struct CyclicComplexWindow {
  CyclicVariant variant = CyclicVariant::Negative;
  ChainComplexWindow complex;
  std::map<Bidegree, std::vector<CyclicSlice>> slices;
  /// Bidegrees whose u-band touches the homological window edge; their
  /// homology values are provisional.
  std::set<Bidegree> truncated;

  const CyclicSlice* find_slice(Bidegree total, int power) const;
};

/// Assembles (C[[u]], b + uB) and friends. Variant must be Negative,
/// Periodic, or Cyclic; the cochain theory is built by cyclic_cochain.
CyclicComplexWindow cyclic_complex(const MixedComplexWindow& m, CyclicVariant variant);

/// Homology of the total complex with truncation flags merged in.
HomologyReport cyclic_homology(const CyclicComplexWindow& cc);

/// Cyclic cochain complex (C*(A)[[v]], b* + vB*). With v dual to u the
/// series in v become nonpositive powers of a degree (-2,0) variable, so
/// this is the quotient-type total complex of the dual mixed complex,
/// kept together with it.
struct CyclicCochainWindow {
  MixedComplexWindow dual;
  CyclicComplexWindow cc;
};
CyclicCochainWindow cyclic_cochain(const AlgebraWindow& a, const Window& window);

/// Jones-McCleary comparison: dim HC^-(A) against dim HC^*(A^!) at the
/// convention-matched bidegree, plus the mirrored comparison
/// HC^-(A^!) against HC^*(A) used by the contravariant Chern character.
struct JMReport {
  DimComparison forward;
  DimComparison mirrored;
  bool pass() const { return forward.pass && mirrored.pass; }
};
JMReport jones_mccleary_compare(const AlgebraWindow& a, const Window& window);

/// Chain map induced by an algebra morphism (bidegree-indexed matrices);
/// exact commutation with b and B is verified.
std::map<Bidegree, SparseMatrix> induced_on_mixed(
    const std::map<Bidegree, SparseMatrix>& f, const MixedComplexWindow& src,
    const MixedComplexWindow& dst);

}  // namespace kwb
