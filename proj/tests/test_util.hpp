#pragma once

#include <string>

#include "kwb/algebra.hpp"
#include "kwb/parser.hpp"

namespace kwbtest {

inline std::string corpus_path(const std::string& name) {
  return std::string(KWB_CORPUS_DIR) + "/" + name + ".alg";
}

inline kwb::Presentation corpus(const std::string& name) {
  return kwb::load_presentation(corpus_path(name));
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "ground", "exterior1", "poly1",       "poly2",
      "exterior2", "commutator", "free2", "dgmix"};
  return names;
}

inline kwb::ExpandedAlgebra expand(const std::string& name, const kwb::Window& w) {
  return kwb::expand_presentation(corpus(name), w);
}

}  // namespace kwbtest
