#include "kwb/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kwb/rational.hpp"

namespace kwb {

void poly_add(NcPoly& dst, const Scalar& c, const NcPoly& src) {
  if (is_zero(c)) return;
  for (const auto& [w, v] : src) {
    auto it = dst.find(w);
    if (it == dst.end()) {
      dst.emplace(w, c * v);
    } else {
      it->second += c * v;
      if (is_zero(it->second)) dst.erase(it);
    }
  }
}

NcPoly poly_concat(const NcPoly& x, const NcPoly& y) {
  NcPoly out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      Word w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(std::move(w), cx * cy);
      } else {
        it->second += cx * cy;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

int Presentation::gen_index(const std::string& label) const {
  for (int i = 0; i < static_cast<int>(generators.size()); ++i)
    if (generators[i].label == label) return i;
  return -1;
}

Bidegree Presentation::word_degree(const Word& w) const {
  Bidegree d{0, 0};
  for (int g : w) d = d + generators.at(g).deg;
  return d;
}

std::optional<Bidegree> Presentation::poly_degree(const NcPoly& p) const {
  if (p.empty()) return std::nullopt;
  Bidegree d = word_degree(p.begin()->first);
  for (const auto& [w, c] : p)
    if (word_degree(w) != d) return std::nullopt;
  return d;
}

std::string Presentation::word_label(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += generators.at(w[i]).label;
  }
  return out;
}

std::string Presentation::poly_to_string(const NcPoly& p) const {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p) {
    Scalar ac = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (ac != 1 || w.empty()) {
      os << scalar_to_string(ac);
      if (!w.empty()) os << "*";
    }
    if (!w.empty()) os << word_label(w);
  }
  return os.str();
}

std::string Presentation::pretty_print() const {
  std::ostringstream os;
  os << "field Q\n";
  for (const auto& g : generators)
    os << "generator " << g.label << " " << g.deg.h << " " << g.deg.a << "\n";
  for (const auto& r : relations) os << "relation " << poly_to_string(r) << "\n";
  for (const auto& [g, p] : differential)
    os << "differential " << generators.at(g).label << " " << poly_to_string(p)
       << "\n";
  return os.str();
}

std::vector<std::string> Presentation::validate() const {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  for (const auto& g : generators)
    if (!seen.insert(g.label).second)
      problems.push_back("duplicate generator label '" + g.label + "'");
  for (size_t i = 0; i < relations.size(); ++i) {
    const NcPoly& r = relations[i];
    if (r.empty()) {
      problems.push_back("relation #" + std::to_string(i + 1) + " is zero");
      continue;
    }
    if (r.count(Word{}))
      problems.push_back("relation " + poly_to_string(r) + " has a constant term");
    // Adams homogeneity is required by the theory; full bihomogeneity is
    // required for the degreewise basis to exist.
    std::set<int> adams;
    for (const auto& [w, c] : r) adams.insert(word_degree(w).a);
    if (adams.size() > 1)
      problems.push_back("relation " + poly_to_string(r) + " is not Adams-homogeneous");
    else if (!poly_degree(r))
      problems.push_back("relation " + poly_to_string(r) +
                         " is not homologically homogeneous");
  }
  for (const auto& [g, p] : differential) {
    if (p.empty()) continue;
    auto d = poly_degree(p);
    const Bidegree expected = generators.at(g).deg + Bidegree{-1, 0};
    if (!d || *d != expected)
      problems.push_back("differential of '" + generators.at(g).label +
                         "' does not have bidegree " + to_string(expected));
  }
  return problems;
}

bool word_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace kwb
