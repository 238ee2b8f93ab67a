#include "kwb/bar.hpp"

#include <algorithm>

namespace kwb {

namespace {

bool barword_less(const BarWord& x, const BarWord& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

Bidegree word_bidegree(const BarWord& w) {
  Bidegree b{0, 0};
  for (const auto& [lb, li] : w) b = b + suspended(lb);
  return b;
}

long suspended_prefix_h(const BarWord& w, size_t count) {
  long s = 0;
  for (size_t t = 0; t < count; ++t) s += w[t].first.h + 1;
  return s;
}

}  // namespace

SparseMatrix CoalgebraWindow::codiff_at(Bidegree b) const {
  auto it = codiff.find(b);
  if (it != codiff.end()) return it->second;
  return SparseMatrix(dim(b + Bidegree{-1, 0}), dim(b));
}

ChainComplexWindow CoalgebraWindow::as_complex() const {
  return ChainComplexWindow{window, basis, codiff};
}

std::string CoalgebraWindow::word_label(const BarWord& w) const {
  std::string out = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "|";
    out += algebra ? algebra->basis.labels.at(w[i].first).at(w[i].second)
                   : to_string(w[i].first) + ":" + std::to_string(w[i].second);
  }
  return out + "]";
}

CoalgebraWindow bar_construction(const AlgebraWindow& a, const Window& window) {
  CoalgebraWindow c;
  c.name = "B(" + a.name + ")";
  c.window = window;
  c.algebra = &a;

  const auto letters = a.ideal_basis();
  int sign = 0;
  for (const auto& [lb, li] : letters) {
    if (lb.a == 0)
      throw IdentityViolation("bar construction requires an Adams-connected algebra: "
                              "ideal element at Adams degree 0");
    const int s = lb.a > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign)
      throw IdentityViolation("bar construction: ideal Adams degrees of mixed sign");
  }

  // enumerate words with the Adams budget; Adams degree is strictly
  // monotone along a word, so depth is bounded
  std::map<Bidegree, std::vector<BarWord>> all;
  BarWord current;
  std::vector<size_t> next{0};
  Bidegree deg{0, 0};
  all[deg].push_back(current);
  while (!next.empty()) {
    if (next.back() >= letters.size()) {
      next.pop_back();
      if (!current.empty()) {
        deg = deg - suspended(current.back().first);
        current.pop_back();
      }
      continue;
    }
    const auto& l = letters[next.back()++];
    const Bidegree nd = deg + suspended(l.first);
    if (sign > 0 ? nd.a > window.a_max : nd.a < window.a_min) continue;
    current.push_back(l);
    deg = nd;
    all[deg].push_back(current);
    next.push_back(0);
  }

  for (auto& [b, ws] : all) {
    if (b.h < window.h_min || b.h > window.h_max) continue;
    std::sort(ws.begin(), ws.end(), barword_less);
    auto& idx = c.index[b];
    auto& labels = c.basis.labels[b];
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
      idx.emplace(ws[i], i);
      labels.push_back(c.word_label(ws[i]));
    }
    c.words[b] = std::move(ws);
  }

  // codifferential: internal part plus adjacent-letter merges
  for (const auto& [b, ws] : c.words) {
    const Bidegree target = b + Bidegree{-1, 0};
    if (!window.contains(target)) continue;
    auto tit = c.index.find(target);
    SparseMatrix m(c.dim(target), static_cast<int>(ws.size()));
    for (int col = 0; col < static_cast<int>(ws.size()); ++col) {
      const BarWord& w = ws[col];
      SparseVec image;
      for (size_t i = 0; i < w.size(); ++i) {
        const Scalar s_int = -sign_pow(suspended_prefix_h(w, i));
        const SparseVec dv = a.diff_vec(w[i].first, SparseVec{{w[i].second, Scalar(1)}});
        const Bidegree db = w[i].first + Bidegree{-1, 0};
        for (const auto& [t, cv] : dv) {
          BarWord nw = w;
          nw[i] = {db, t};
          image[tit->second.at(nw)] += s_int * cv;
        }
        if (i + 1 < w.size()) {
          const Scalar s_mul = sign_pow(suspended_prefix_h(w, i + 1));
          const SparseVec prod = a.product_vec(
              w[i].first, SparseVec{{w[i].second, Scalar(1)}}, w[i + 1].first,
              SparseVec{{w[i + 1].second, Scalar(1)}});
          const Bidegree pb = w[i].first + w[i + 1].first;
          for (const auto& [t, cv] : prod) {
            BarWord nw;
            nw.reserve(w.size() - 1);
            nw.insert(nw.end(), w.begin(), w.begin() + i);
            nw.push_back({pb, t});
            nw.insert(nw.end(), w.begin() + i + 2, w.end());
            image[tit->second.at(nw)] += s_mul * cv;
          }
        }
      }
      for (auto it = image.begin(); it != image.end();) {
        if (is_zero(it->second)) it = image.erase(it);
        else ++it;
      }
      m.set_column(col, image);
    }
    c.codiff[b] = std::move(m);
  }

  // gate: the sign convention must square to zero
  for (const auto& [b, d] : c.codiff) {
    auto it = c.codiff.find(b + Bidegree{-1, 0});
    if (it == c.codiff.end()) continue;
    const SparseMatrix sq = it->second.multiply(d);
    if (!sq.is_zero()) {
      const int col = sq.entries().begin()->first.second;
      throw IdentityViolation("bar codifferential^2 != 0 on word " +
                              c.word_label(c.words.at(b)[col]) + " at " + to_string(b));
    }
  }
  return c;
}

AlgebraWindow dual_algebra(const CoalgebraWindow& c) {
  AlgebraWindow a;
  a.name = c.name + "*";
  a.window = c.window.flipped();

  for (const auto& [b, ls] : c.basis.labels) {
    auto& labels = a.basis.labels[-b];
    for (const auto& l : ls) labels.push_back(l + "*");
  }

  // product dual to deconcatenation: w1* . w2* = (-1)^(h1 h2) (w1 w2)*
  for (const auto& [b1, ws1] : c.words)
    for (const auto& [b2, ws2] : c.words) {
      const Bidegree target = b1 + b2;
      auto tit = c.index.find(target);
      if (!a.window.contains(-target)) continue;
      if (tit == c.index.end()) continue;
      auto& table = a.mult[{-b1, -b2}];
      table.reserve(ws1.size() * ws2.size());
      const Scalar s = koszul_sign(b1, b2);
      for (const auto& w1 : ws1)
        for (const auto& w2 : ws2) {
          BarWord w = w1;
          w.insert(w.end(), w2.begin(), w2.end());
          table.push_back(SparseVec{{tit->second.at(w), s}});
        }
    }

  // differential: signed transpose of the codifferential,
  // (d f)(v) = -(-1)^{|f|} f(d v)
  for (const auto& [b, ls] : c.basis.labels) {
    // dual differential out of -b lands at -b + (-1,0), i.e. dualizes
    // the codifferential into b from b + (1,0)
    const Bidegree src = b + Bidegree{1, 0};
    if (!a.window.contains(-b + Bidegree{-1, 0})) continue;
    const SparseMatrix cd = c.codiff_at(src);  // C_{b+(1,0)} -> C_b
    SparseMatrix m(c.dim(src), c.dim(b));
    const Scalar s = -sign_pow(b.h);
    for (const auto& [rc, v] : cd.entries()) m.set(rc.second, rc.first, s * v);
    a.diff[-b] = std::move(m);
  }

  auto violations = check_axioms(a);
  if (!violations.empty())
    throw IdentityViolation("dual algebra of " + c.name + ": " + violations.front());
  return a;
}

AlgebraWindow koszul_dual(const AlgebraWindow& a, const Window& window) {
  AlgebraWindow dual = dual_algebra(bar_construction(a, window));
  dual.name = a.name + "!";
  return dual;
}

void DimComparison::add(Bidegree b, int lhs, int rhs, bool trunc) {
  if (lhs == 0 && rhs == 0) return;
  dims[b] = {lhs, rhs};
  if (trunc)
    truncated.insert(b);
  else if (lhs != rhs)
    pass = false;
}

DimComparison double_dual_report(const AlgebraWindow& a, const Window& window) {
  const HomologyReport ha = homology(a.as_complex());
  const AlgebraWindow dual = koszul_dual(a, window);
  const AlgebraWindow dd = koszul_dual(dual, dual.window);
  const HomologyReport hdd = homology(dd.as_complex());

  DimComparison cmp;
  cmp.lhs_name = "H(" + a.name + ")";
  cmp.rhs_name = "H((" + a.name + "!)!)";
  std::set<Bidegree> keys;
  for (const auto& [b, d] : ha.dims) keys.insert(b);
  for (const auto& [b, d] : hdd.dims) keys.insert(b);
  for (Bidegree b : keys)
    cmp.add(b, ha.dim(b), hdd.dim(b), ha.is_truncated(b) || hdd.is_truncated(b));
  return cmp;
}

Presentation quadratic_dual(const Presentation& pres) {
  const int n = static_cast<int>(pres.generators.size());
  for (const auto& g : pres.generators)
    if (g.deg != Bidegree{0, 1})
      throw ExpansionError("quadratic dual requires generators at bidegree (0,1)");

  SparseMatrix rel(static_cast<int>(pres.relations.size()), n * n);
  for (int r = 0; r < rel.rows(); ++r) {
    for (const auto& [w, cv] : pres.relations[r]) {
      if (w.size() != 2)
        throw ExpansionError("quadratic dual requires quadratic relations");
      rel.set(r, w[0] * n + w[1], cv);
    }
  }

  Presentation dual;
  dual.name = pres.name + "_qdual";
  for (const auto& g : pres.generators)
    dual.generators.push_back({g.label + "_d", {0, 1}});
  for (const SparseVec& v : kernel_basis(rel)) {
    NcPoly p;
    for (const auto& [c, cv] : v) p.emplace(Word{c / n, c % n}, cv);
    dual.relations.push_back(std::move(p));
  }
  return dual;
}

DimComparison compare_quadratic_vs_bar(const Presentation& pres, const Window& window) {
  const ExpandedAlgebra a = expand_presentation(pres, window);
  const AlgebraWindow dual = koszul_dual(a.algebra, window);
  const HomologyReport hd = homology(dual.as_complex());
  const ExpandedAlgebra qd = expand_presentation(quadratic_dual(pres), window);

  DimComparison cmp;
  cmp.lhs_name = "H(" + pres.name + "!)";
  cmp.rhs_name = qd.pres.name;
  for (int j = 0; j <= window.a_max; ++j) {
    int lhs = 0;
    bool trunc = false;
    for (const auto& [b, d] : hd.dims)
      if (b.a == -j) {
        lhs += d;
        if (d > 0 && hd.is_truncated(b)) trunc = true;
      }
    const int rhs = qd.algebra.dim({0, j});
    cmp.add({0, j}, lhs, rhs, trunc);
  }
  return cmp;
}

}  // namespace kwb
