#include "kwb/rational.hpp"

namespace kwb {

std::string scalar_to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar scalar_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Scalar s;
  if (s.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  s.canonicalize();
  if (s.get_den() <= 0)
    throw std::invalid_argument("nonpositive denominator: " + text);
  return s;
}

}  // namespace kwb
