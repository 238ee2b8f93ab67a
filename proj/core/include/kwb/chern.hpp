#pragma once

#include "kwb/cyclic.hpp"

namespace kwb {

/// Object of a perfect-complex category described structurally: a named
/// generator, a shift, or the cone of a map between two objects.
struct PerfObject {
  enum class Kind { Leaf, Shift, Cone };
  Kind kind = Kind::Leaf;
  std::string leaf;                  // generator name for Kind::Leaf
  int shift = 0;                     // for Kind::Shift
  std::vector<PerfObject> children;  // Shift: 1 child; Cone: source, target

  static PerfObject generator(std::string name);
  static PerfObject shifted(PerfObject x, int s);
  static PerfObject cone(PerfObject source, PerfObject target);
};

std::string to_string(const PerfObject& obj);

/// K-theory class at level zero of a component generated by one object:
/// the integer multiple of [generator].
struct K0Class {
  std::string generator;
  long m = 0;
};

/// [Shift(X,s)] = (-1)^s [X], [Cone(X,Y)] = [Y] - [X]. The object must
/// reduce to a multiple of a single generator.
K0Class euler_class(const PerfObject& obj);

/// Structural equivalence thick(k) -> perf of the Koszul dual:
/// k -> A!, A -> k, Shift(X,s) -> Shift(F(X),-s),
/// Cone(X,Y) -> Shift(Cone(F(Y),F(X)),-1).
PerfObject koszul_transform(const PerfObject& obj);

/// Transport of m[k] in thick_A(k) to K_0 of the Koszul dual via the
/// structural equivalence. Refuses when the weak Adams-connectedness
/// verdict is an outright failure (the equivalence is not available).
K0Class k0_transport(const K0Class& xi, const FinitenessReport& fin);

/// Element of a cyclic-type total complex at one total bidegree.
struct CyclicClass {
  Bidegree total;
  SparseVec coords;
};

/// Degree-zero Chern character of m[A]: m times the unit chain in the
/// u^0 layer, verified to be a (b + uB)-cycle.
CyclicClass chern0(const CyclicComplexWindow& cc, const MixedComplexWindow& m,
                   long mult);

/// Degree-zero contravariant Chern character of m[k]: m times the
/// functional dual to the unit chain, verified to be a cocycle.
CyclicClass contravariant_chern0(const CyclicCochainWindow& cochain, long mult);

/// <sum phi_j v^j, sum x_i u^i> = sum_i phi_i(x_i): dual-basis
/// contraction of a cochain class against a chain class. Nonzero only
/// when the total bidegrees are opposite.
Scalar cyclic_pairing(const CyclicCochainWindow& cochain, const CyclicClass& phi,
                      const CyclicComplexWindow& neg, const CyclicClass& x);

/// K-theoretic pairing samples: for each (m, m'), the value
/// <ch_dual(m[k]), ch(m'[A])> computed through the cyclic pairing, which
/// must equal m * m'. The mirrored value runs the transported class
/// through the dual side and must agree.
struct TriangleReport {
  std::string algebra;
  struct Sample {
    long m = 0;
    long mp = 0;
    Scalar direct;    // pairing on the original side
    Scalar mirrored;  // transported pairing on the dual side
  };
  std::vector<Sample> samples;
  bool pass = true;
};

TriangleReport loday_triangle_check(const AlgebraWindow& a,
                                    const FinitenessReport& fin,
                                    const Window& window);

}  // namespace kwb
