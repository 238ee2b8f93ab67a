#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kwb/rational.hpp"

namespace kwb {

/// (homological degree, Adams degree). Differentials carry (-1, 0),
/// the Connes operator (+1, 0). Only the homological degree enters signs.
struct Bidegree {
  int h = 0;
  int a = 0;
  auto operator<=>(const Bidegree&) const = default;
};

inline Bidegree operator+(Bidegree x, Bidegree y) { return {x.h + y.h, x.a + y.a}; }
inline Bidegree operator-(Bidegree x, Bidegree y) { return {x.h - y.h, x.a - y.a}; }
inline Bidegree operator-(Bidegree x) { return {-x.h, -x.a}; }

std::string to_string(Bidegree b);

/// Sign produced when elements of bidegrees x and y are switched:
/// (-1)^(h(x)*h(y)). Adams degrees never contribute.
inline Scalar koszul_sign(Bidegree x, Bidegree y) {
  return sign_pow(static_cast<long>(x.h) * static_cast<long>(y.h));
}

/// Active truncation window: Adams range [a_min, a_max], homological
/// range [h_min, h_max].
struct Window {
  int a_min = 0;
  int a_max = 0;
  int h_min = 0;
  int h_max = 0;

  bool contains(Bidegree b) const {
    return b.a >= a_min && b.a <= a_max && b.h >= h_min && b.h <= h_max;
  }
  /// Window with both gradings negated, used on linear duals.
  Window flipped() const { return {-a_max, -a_min, -h_max, -h_min}; }
  auto operator<=>(const Window&) const = default;
};

std::string to_string(const Window& w);

/// Ordered basis labels per bidegree. Labels are unique within the whole
/// basis and their order is deterministic given the input.
struct GradedBasis {
  std::map<Bidegree, std::vector<std::string>> labels;

  int dim(Bidegree b) const {
    auto it = labels.find(b);
    return it == labels.end() ? 0 : static_cast<int>(it->second.size());
  }
  int total_dim() const;
};

/// Move every basis element of bidegree b to b + d, decorating labels
/// deterministically (no decoration for the zero shift).
GradedBasis shift_basis(const GradedBasis& basis, Bidegree d);

}  // namespace kwb
