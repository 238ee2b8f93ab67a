#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwb/grading.hpp"

namespace kwb {

/// A word in generator indices; the empty word is the unit.
using Word = std::vector<int>;

/// Noncommutative polynomial: finite map word -> nonzero coefficient.
using NcPoly = std::map<Word, Scalar>;

void poly_add(NcPoly& dst, const Scalar& c, const NcPoly& src);
NcPoly poly_concat(const NcPoly& x, const NcPoly& y);

struct Generator {
  std::string label;
  Bidegree deg;
};

/// Presentation of an augmented bigraded dg algebra: generators with
/// bidegrees, bihomogeneous relations without constant term, and a
/// differential assignment per generator (absent entry means zero).
struct Presentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<NcPoly> relations;
  std::map<int, NcPoly> differential;

  int gen_index(const std::string& label) const;
  Bidegree word_degree(const Word& w) const;
  /// Bidegree of a bihomogeneous nonzero polynomial, nullopt otherwise.
  std::optional<Bidegree> poly_degree(const NcPoly& p) const;

  std::string word_label(const Word& w) const;
  std::string poly_to_string(const NcPoly& p) const;
  /// Canonical text form; parsing it back yields an identical structure.
  std::string pretty_print() const;

  /// Structural validation shared by expansion and the parser:
  /// duplicate labels, inhomogeneous relations, constant terms,
  /// differential bidegree mismatches. Returns problem descriptions.
  std::vector<std::string> validate() const;
};

/// Deterministic word order: by length, then lexicographic on indices.
bool word_less(const Word& x, const Word& y);

}  // namespace kwb
