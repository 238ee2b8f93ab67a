#include "kwb/algebra.hpp"

#include <algorithm>

namespace kwb {

namespace {

const SparseVec kEmptyVec;

Bidegree diff_target(Bidegree b) { return b + Bidegree{-1, 0}; }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "unknown";
  }
}

const SparseVec& AlgebraWindow::product(Bidegree b1, int i, Bidegree b2, int j) const {
  auto it = mult.find({b1, b2});
  if (it == mult.end()) throw std::out_of_range("missing mult table at " + to_string(b1) + "x" + to_string(b2));
  return it->second.at(static_cast<size_t>(i) * dim(b2) + j);
}

SparseVec AlgebraWindow::product_vec(Bidegree b1, const SparseVec& x, Bidegree b2,
                                     const SparseVec& y) const {
  SparseVec out;
  if (x.empty() || y.empty()) return out;
  for (const auto& [i, cx] : x)
    for (const auto& [j, cy] : y) axpy(out, cx * cy, product(b1, i, b2, j));
  return out;
}

SparseMatrix AlgebraWindow::diff_at(Bidegree b) const {
  auto it = diff.find(b);
  if (it != diff.end()) return it->second;
  return SparseMatrix(dim(diff_target(b)), dim(b));
}

SparseVec AlgebraWindow::diff_vec(Bidegree b, const SparseVec& x) const {
  auto it = diff.find(b);
  if (it == diff.end()) return {};
  return it->second.apply(x);
}

Scalar AlgebraWindow::augmentation(Bidegree b, const SparseVec& x) const {
  if (b != Bidegree{0, 0}) return Scalar(0);
  auto it = x.find(0);
  return it == x.end() ? Scalar(0) : it->second;
}

SparseVec AlgebraWindow::ideal_part(Bidegree b, const SparseVec& x) const {
  if (b != Bidegree{0, 0}) return x;
  SparseVec out = x;
  out.erase(0);
  return out;
}

std::vector<std::pair<Bidegree, int>> AlgebraWindow::ideal_basis() const {
  std::vector<std::pair<Bidegree, int>> out;
  for (const auto& [b, ls] : basis.labels) {
    if (b == Bidegree{0, 0}) continue;
    for (int i = 0; i < static_cast<int>(ls.size()); ++i) out.emplace_back(b, i);
  }
  return out;
}

ChainComplexWindow AlgebraWindow::as_complex() const {
  return ChainComplexWindow{window, basis, diff};
}

// ---------------------------------------------------------------------------
// expansion

namespace {

struct Buckets {
  std::map<Bidegree, std::vector<Word>> words;
  std::map<Bidegree, std::map<Word, int>> index;
};

void enumerate_words(const Presentation& pres, const Window& w, Buckets& out) {
  const int sign = pres.generators.empty()
                       ? 1
                       : (pres.generators.front().deg.a > 0 ? 1 : -1);
  std::vector<Word> stack{Word{}};
  std::map<Bidegree, std::vector<Word>> all;
  Word current;
  // iterative DFS over generator sequences; Adams budget bounds depth
  struct Frame { int next_gen; };
  std::vector<Frame> frames{{0}};
  Bidegree deg{0, 0};
  all[deg].push_back(current);
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next_gen >= static_cast<int>(pres.generators.size())) {
      frames.pop_back();
      if (!current.empty()) {
        deg = deg - pres.generators[current.back()].deg;
        current.pop_back();
      }
      continue;
    }
    const int g = f.next_gen++;
    const Bidegree nd = deg + pres.generators[g].deg;
    if (sign > 0 ? nd.a > w.a_max : nd.a < w.a_min) continue;
    current.push_back(g);
    deg = nd;
    all[deg].push_back(current);
    frames.push_back({0});
  }
  for (auto& [b, ws] : all) {
    if (b.h < w.h_min || b.h > w.h_max) continue;
    std::sort(ws.begin(), ws.end(), word_less);
    auto& idx = out.index[b];
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) idx.emplace(ws[i], i);
    out.words[b] = std::move(ws);
  }
}

// Leibniz extension of the generator differential to a free word.
NcPoly free_diff_word(const Presentation& pres, const Word& w) {
  NcPoly out;
  long hsum = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    auto it = pres.differential.find(w[i]);
    if (it != pres.differential.end() && !it->second.empty()) {
      const Scalar s = sign_pow(hsum);
      for (const auto& [dw, c] : it->second) {
        Word term(w.begin(), w.begin() + i);
        term.insert(term.end(), dw.begin(), dw.end());
        term.insert(term.end(), w.begin() + i + 1, w.end());
        auto jt = out.find(term);
        if (jt == out.end()) {
          out.emplace(std::move(term), s * c);
        } else {
          jt->second += s * c;
          if (is_zero(jt->second)) out.erase(jt);
        }
      }
    }
    hsum += pres.generators[w[i]].deg.h;
  }
  return out;
}

NcPoly free_diff_poly(const Presentation& pres, const NcPoly& p) {
  NcPoly out;
  for (const auto& [w, c] : p) poly_add(out, c, free_diff_word(pres, w));
  return out;
}

}  // namespace

SparseVec ExpandedAlgebra::reduce(Bidegree b, const NcPoly& p) const {
  SparseVec out;
  if (p.empty()) return out;
  auto wit = words.find(b);
  auto nit = normal_forms.find(b);
  if (wit == words.end() || nit == normal_forms.end())
    throw ExpansionError("bidegree " + to_string(b) + " outside expanded window");
  const auto& ws = wit->second;
  for (const auto& [w, c] : p) {
    auto pos = std::lower_bound(ws.begin(), ws.end(), w, word_less);
    if (pos == ws.end() || *pos != w)
      throw ExpansionError("word outside expanded window at " + to_string(b));
    axpy(out, c, nit->second.at(pos - ws.begin()));
  }
  return out;
}

ExpandedAlgebra expand_presentation(const Presentation& pres, const Window& window) {
  auto problems = pres.validate();
  if (!problems.empty()) throw ExpansionError(problems.front());
  bool has_pos = false, has_neg = false;
  for (const auto& g : pres.generators) {
    if (g.deg.a == 0)
      throw ExpansionError("generator '" + g.label +
                           "' has Adams degree 0; window would be infinite-dimensional");
    (g.deg.a > 0 ? has_pos : has_neg) = true;
  }
  if (has_pos && has_neg)
    throw ExpansionError("generators must have Adams degrees of uniform sign");

  ExpandedAlgebra ex;
  ex.pres = pres;
  ex.algebra.name = pres.name;
  ex.algebra.window = window;

  Buckets buckets;
  enumerate_words(pres, window, buckets);
  ex.words = buckets.words;

  // degreewise span of { u * r * v } and the induced quotient basis
  std::map<Bidegree, Rref> spans;
  for (const auto& r : pres.relations) {
    const Bidegree br = *pres.poly_degree(r);
    for (const auto& [bu, us] : buckets.words)
      for (const auto& [bv, vs] : buckets.words) {
        const Bidegree b = bu + br + bv;
        auto target = buckets.index.find(b);
        if (target == buckets.index.end()) continue;
        for (const Word& u : us)
          for (const Word& v : vs) {
            SparseVec vec;
            for (const auto& [wr, c] : r) {
              Word w = u;
              w.insert(w.end(), wr.begin(), wr.end());
              w.insert(w.end(), v.begin(), v.end());
              auto it = target->second.find(w);
              if (it == target->second.end())
                throw ExpansionError("relation span leaves window at " + to_string(b));
              auto jt = vec.find(it->second);
              if (jt == vec.end()) vec.emplace(it->second, c);
              else {
                jt->second += c;
                if (is_zero(jt->second)) vec.erase(jt);
              }
            }
            spans[b].insert(std::move(vec));
          }
      }
  }

  for (const auto& [b, ws] : buckets.words) {
    const Rref* span = spans.count(b) ? &spans.at(b) : nullptr;
    std::vector<int>& qwords = ex.basis_words[b];
    std::map<int, int> qpos;
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
      if (span && span->pivots().count(i)) continue;
      qpos[i] = static_cast<int>(qwords.size());
      qwords.push_back(i);
    }
    auto& labels = ex.algebra.basis.labels[b];
    for (int i : qwords) labels.push_back(pres.word_label(ws[i]));
    auto& nfs = ex.normal_forms[b];
    nfs.resize(ws.size());
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
      if (qpos.count(i)) {
        nfs[i][qpos[i]] = Scalar(1);
      } else {
        SparseVec e{{i, Scalar(1)}};
        SparseVec residual = span->reduce(std::move(e));
        for (const auto& [c, v] : residual) nfs[i][qpos.at(c)] = v;
      }
    }
  }
  if (ex.algebra.dim({0, 0}) != 1)
    throw ExpansionError("unit component at (0,0) is not one-dimensional");

  // multiplication tables
  for (const auto& [b1, q1] : ex.basis_words)
    for (const auto& [b2, q2] : ex.basis_words) {
      const Bidegree target = b1 + b2;
      if (!window.contains(target) || !buckets.index.count(target)) continue;
      auto& table = ex.algebra.mult[{b1, b2}];
      table.reserve(q1.size() * q2.size());
      const auto& idx = buckets.index.at(target);
      for (int i : q1)
        for (int j : q2) {
          Word w = buckets.words.at(b1)[i];
          const Word& wj = buckets.words.at(b2)[j];
          w.insert(w.end(), wj.begin(), wj.end());
          table.push_back(ex.normal_forms.at(target).at(idx.at(w)));
        }
    }

  // differential well-definedness: d maps the relation ideal into itself
  for (const auto& r : pres.relations) {
    const Bidegree b = *pres.poly_degree(r) + Bidegree{-1, 0};
    if (!window.contains(b) || !buckets.index.count(b)) continue;
    SparseVec img = ex.reduce(b, free_diff_poly(pres, r));
    if (!img.empty())
      throw ExpansionError("differential of relation " + pres.poly_to_string(r) +
                           " does not lie in the relation ideal");
  }

  // differential matrices on the quotient basis
  for (const auto& [b, q] : ex.basis_words) {
    const Bidegree target = diff_target(b);
    if (!window.contains(target)) continue;
    SparseMatrix m(ex.algebra.dim(target), static_cast<int>(q.size()));
    for (int col = 0; col < static_cast<int>(q.size()); ++col) {
      const Word& w = buckets.words.at(b)[q[col]];
      NcPoly dp = free_diff_word(pres, w);
      if (dp.empty()) continue;
      m.set_column(col, ex.reduce(target, dp));
    }
    if (!m.is_zero() || m.rows() > 0) ex.algebra.diff[b] = std::move(m);
  }

  auto violations = check_axioms(ex.algebra);
  if (!violations.empty()) throw ExpansionError(violations.front());
  return ex;
}

FinitenessReport classify_finiteness(const Presentation& pres) {
  FinitenessReport r;
  if (pres.generators.empty()) {
    r.adams_connected = r.strongly_locally_finite = r.weakly_adams_connected =
        Verdict::Holds;
    return r;
  }
  bool has_pos = false, has_neg = false;
  const Generator* zero_gen = nullptr;
  for (const auto& g : pres.generators) {
    if (g.deg.a == 0) zero_gen = &g;
    if (g.deg.a > 0) has_pos = true;
    if (g.deg.a < 0) has_neg = true;
  }
  if (zero_gen) {
    r.adams_connected = Verdict::Fails;
    r.strongly_locally_finite = Verdict::Fails;
    r.weakly_adams_connected = Verdict::Unknown;
    r.witness = "generator '" + zero_gen->label +
                "' at Adams degree 0: I_0 != 0 leaves no vanishing half-line";
    return r;
  }
  if (has_pos && has_neg) {
    r.adams_connected = Verdict::Fails;
    r.strongly_locally_finite = Verdict::Fails;
    r.weakly_adams_connected = Verdict::Unknown;
    r.witness = "generators on both sides of Adams degree 0";
    return r;
  }
  // Uniform-sign nonzero Adams degrees: finitely many words per Adams
  // degree, vanishing on one half-line, bounded homological degrees.
  r.adams_connected = Verdict::Holds;
  r.strongly_locally_finite = Verdict::Holds;
  r.weakly_adams_connected = Verdict::Holds;
  return r;
}

std::vector<std::string> check_axioms(const AlgebraWindow& a) {
  std::vector<std::string> out;
  const Bidegree zero{0, 0};
  if (a.dim(zero) != 1)
    out.push_back("unit component at (0,0) has dimension " + std::to_string(a.dim(zero)));

  for (const auto& [b, d] : a.diff) {
    const Bidegree mid = diff_target(b);
    auto it = a.diff.find(mid);
    if (it == a.diff.end()) continue;
    if (!it->second.multiply(d).is_zero())
      out.push_back("d^2 != 0 at bidegree " + to_string(b));
  }

  // unit axiom
  if (a.dim(zero) == 1) {
    for (const auto& [b, ls] : a.basis.labels) {
      if (!a.has_mult(zero, b) || !a.has_mult(b, zero)) continue;
      for (int i = 0; i < static_cast<int>(ls.size()); ++i) {
        SparseVec e{{i, Scalar(1)}};
        if (a.product(zero, 0, b, i) != e)
          out.push_back("1*x != x at " + to_string(b) + " index " + std::to_string(i));
        if (a.product(b, i, zero, 0) != e)
          out.push_back("x*1 != x at " + to_string(b) + " index " + std::to_string(i));
      }
    }
  }

  // associativity on all in-window triples
  for (const auto& [p12, t12] : a.mult) {
    const auto& [b1, b2] = p12;
    for (const auto& [b3, ls3] : a.basis.labels) {
      if (ls3.empty()) continue;
      if (!a.has_mult(b1 + b2, b3) || !a.has_mult(b2, b3) || !a.has_mult(b1, b2 + b3))
        continue;
      const int n1 = a.dim(b1), n2 = a.dim(b2), n3 = a.dim(b3);
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
          const SparseVec& xy = a.product(b1, i, b2, j);
          for (int k = 0; k < n3; ++k) {
            SparseVec lhs;
            for (const auto& [t, c] : xy) axpy(lhs, c, a.product(b1 + b2, t, b3, k));
            SparseVec rhs;
            for (const auto& [t, c] : a.product(b2, j, b3, k))
              axpy(rhs, c, a.product(b1, i, b2 + b3, t));
            if (lhs != rhs) {
              out.push_back("associativity fails at " + to_string(b1) + "," +
                            to_string(b2) + "," + to_string(b3));
              goto next_triple;
            }
          }
        }
    next_triple:;
    }
  }

  // Leibniz rule on all in-window pairs
  for (const auto& [p12, t12] : a.mult) {
    const auto& [b1, b2] = p12;
    const Bidegree target = b1 + b2;
    const Bidegree tb = diff_target(target);
    if (!a.window.contains(tb)) continue;
    const Bidegree d1 = diff_target(b1), d2 = diff_target(b2);
    const bool need1 = a.dim(d1) > 0;
    const bool need2 = a.dim(d2) > 0;
    if ((need1 && !a.has_mult(d1, b2)) || (need2 && !a.has_mult(b1, d2))) continue;
    const SparseMatrix dt = a.diff_at(target);
    for (int i = 0; i < a.dim(b1); ++i) {
      const SparseVec dx = a.diff_vec(b1, SparseVec{{i, Scalar(1)}});
      for (int j = 0; j < a.dim(b2); ++j) {
        SparseVec lhs = dt.apply(a.product(b1, i, b2, j));
        SparseVec rhs;
        for (const auto& [t, c] : dx) axpy(rhs, c, a.product(d1, t, b2, j));
        const SparseVec dy = a.diff_vec(b2, SparseVec{{j, Scalar(1)}});
        const Scalar s = sign_pow(b1.h);
        for (const auto& [t, c] : dy) axpy(rhs, s * c, a.product(b1, i, d2, t));
        if (lhs != rhs) {
          out.push_back("Leibniz fails at " + to_string(b1) + "x" + to_string(b2) +
                        " indices (" + std::to_string(i) + "," + std::to_string(j) + ")");
          goto next_pair;
        }
      }
    }
  next_pair:;
  }
  return out;
}

std::map<Bidegree, SparseMatrix> induced_on_algebra(const ExpandedAlgebra& src,
                                                    const ExpandedAlgebra& dst,
                                                    const GeneratorImages& images) {
  // generator images: bidegree-preserving, reduced in the target
  std::vector<SparseVec> gen_vec(src.pres.generators.size());
  for (size_t g = 0; g < src.pres.generators.size(); ++g) {
    const Generator& gen = src.pres.generators[g];
    auto it = images.find(gen.label);
    if (it == images.end())
      throw IdentityViolation("no image given for generator '" + gen.label + "'");
    if (!it->second.empty()) {
      auto d = dst.pres.poly_degree(it->second);
      if (!d || *d != gen.deg)
        throw IdentityViolation("image of '" + gen.label +
                                "' does not have bidegree " + to_string(gen.deg));
      gen_vec[g] = dst.reduce(gen.deg, it->second);
    }
  }

  auto eval_word = [&](const Word& w) {
    Bidegree b{0, 0};
    SparseVec v{{0, Scalar(1)}};
    for (int g : w) {
      const Bidegree bg = src.pres.generators[g].deg;
      v = dst.algebra.product_vec(b, v, bg, gen_vec[g]);
      b = b + bg;
      if (v.empty()) break;
    }
    return v;
  };

  // relations must land in the target ideal
  for (const auto& r : src.pres.relations) {
    SparseVec img;
    for (const auto& [w, c] : r) axpy(img, c, eval_word(w));
    if (!img.empty())
      throw IdentityViolation("relation " + src.pres.poly_to_string(r) +
                              " is not preserved");
  }

  std::map<Bidegree, SparseMatrix> maps;
  for (const auto& [b, q] : src.basis_words) {
    SparseMatrix m(dst.algebra.dim(b), static_cast<int>(q.size()));
    for (int col = 0; col < static_cast<int>(q.size()); ++col)
      m.set_column(col, eval_word(src.words.at(b)[q[col]]));
    maps[b] = std::move(m);
  }

  // compatibility with the differentials
  for (const auto& [b, m] : maps) {
    const Bidegree tb = diff_target(b);
    auto it = maps.find(tb);
    if (it == maps.end()) continue;
    if (it->second.multiply(src.algebra.diff_at(b)) !=
        dst.algebra.diff_at(b).multiply(m))
      throw IdentityViolation("morphism does not commute with d at " + to_string(b));
  }
  return maps;
}

}  // namespace kwb
