#include "kwb/grading.hpp"

namespace kwb {

std::string to_string(Bidegree b) {
  return "(" + std::to_string(b.h) + "," + std::to_string(b.a) + ")";
}

std::string to_string(const Window& w) {
  return "a[" + std::to_string(w.a_min) + "," + std::to_string(w.a_max) +
         "]h[" + std::to_string(w.h_min) + "," + std::to_string(w.h_max) + "]";
}

int GradedBasis::total_dim() const {
  int n = 0;
  for (const auto& [b, ls] : labels) n += static_cast<int>(ls.size());
  return n;
}

GradedBasis shift_basis(const GradedBasis& basis, Bidegree d) {
  if (d == Bidegree{0, 0}) return basis;
  GradedBasis out;
  const std::string tag = "<" + std::to_string(d.h) + "," + std::to_string(d.a) + ">";
  for (const auto& [b, ls] : basis.labels) {
    auto& dst = out.labels[b + d];
    for (const auto& l : ls) dst.push_back(l + tag);
  }
  return out;
}

}  // namespace kwb
