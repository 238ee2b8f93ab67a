#include "kwb/exactlin.hpp"

#include <algorithm>

namespace kwb {

namespace {

using IRow = std::map<int, BigInt>;

void normalize_content(IRow& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

// row_j := p * row_j - q * row_r, content-normalized.
void eliminate(IRow& target, const BigInt& q, const IRow& pivot_row, const BigInt& p) {
  IRow out;
  auto it = target.begin();
  auto jt = pivot_row.begin();
  while (it != target.end() || jt != pivot_row.end()) {
    if (jt == pivot_row.end() || (it != target.end() && it->first < jt->first)) {
      out.emplace(it->first, p * it->second);
      ++it;
    } else if (it == target.end() || jt->first < it->first) {
      out.emplace(jt->first, -q * jt->second);
      ++jt;
    } else {
      BigInt v = p * it->second - q * jt->second;
      if (v != 0) out.emplace(it->first, std::move(v));
      ++it;
      ++jt;
    }
  }
  normalize_content(out);
  target = std::move(out);
}

struct Elimination {
  std::vector<std::pair<int, IRow>> pivots;  // (pivot column, row)
  int cols = 0;
};

// Fraction-free Gauss-Jordan with pivoting by sparsity. Rows are scaled
// to integers; content is divided out after every update, which keeps
// entries at minor scale on the structured matrices seen here.
Elimination eliminate_all(const SparseMatrix& m) {
  Elimination result;
  result.cols = m.cols();
  std::vector<IRow> active(m.rows());
  for (const auto& [rc, v] : m.entries()) {
    // scale by denominator lcm later; accumulate rational first
    active[rc.first].emplace(rc.second, 0);
  }
  {
    std::vector<BigInt> lcm(m.rows(), 1);
    for (const auto& [rc, v] : m.entries())
      mpz_lcm(lcm[rc.first].get_mpz_t(), lcm[rc.first].get_mpz_t(),
              v.get_den().get_mpz_t());
    for (const auto& [rc, v] : m.entries()) {
      Scalar s = v * lcm[rc.first];
      active[rc.first][rc.second] = s.get_num();
    }
    for (auto& row : active) normalize_content(row);
  }

  std::vector<bool> used(active.size(), false);
  while (true) {
    // candidate: prefer rows with a +-1 entry, then fewest nonzeros
    int best = -1;
    long best_score = 0;
    for (int i = 0; i < static_cast<int>(active.size()); ++i) {
      if (used[i] || active[i].empty()) continue;
      bool unit = false;
      for (const auto& [c, v] : active[i])
        if (v == 1 || v == -1) {
          unit = true;
          break;
        }
      long score = (unit ? 0L : 1L) * 1000000L + static_cast<long>(active[i].size());
      if (best < 0 || score < best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best < 0) break;
    used[best] = true;
    IRow row = std::move(active[best]);
    active[best].clear();
    // pivot column: first unit entry if any, else first entry
    int pcol = row.begin()->first;
    for (const auto& [c, v] : row)
      if (v == 1 || v == -1) {
        pcol = c;
        break;
      }
    const BigInt p = row.at(pcol);
    for (int i = 0; i < static_cast<int>(active.size()); ++i) {
      if (active[i].empty()) continue;
      auto it = active[i].find(pcol);
      if (it != active[i].end()) eliminate(active[i], it->second, row, p);
    }
    for (auto& [pc, prow] : result.pivots) {
      auto it = prow.find(pcol);
      if (it != prow.end()) eliminate(prow, it->second, row, p);
    }
    result.pivots.emplace_back(pcol, std::move(row));
  }
  return result;
}

}  // namespace

int rank(const SparseMatrix& m) {
  if (m.nnz() == 0) return 0;
  return static_cast<int>(eliminate_all(m).pivots.size());
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  Elimination e = eliminate_all(m);
  std::set<int> pivot_cols;
  for (const auto& [pc, row] : e.pivots) pivot_cols.insert(pc);

  std::vector<SparseVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (pivot_cols.count(f)) continue;
    SparseVec x;
    x[f] = Scalar(1);
    for (const auto& [pc, row] : e.pivots) {
      auto it = row.find(f);
      if (it == row.end()) continue;
      Scalar val(-it->second, row.at(pc));
      val.canonicalize();
      if (!is_zero(val)) x[pc] = val;
    }
    // integral, content-free, positive leading entry
    BigInt den_lcm = 1;
    for (const auto& [c, v] : x)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    BigInt g = 0;
    for (auto& [c, v] : x) {
      v *= den_lcm;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (g > 1)
      for (auto& [c, v] : x) v /= g;
    if (sgn(x.begin()->second) < 0)
      for (auto& [c, v] : x) v = -v;
    basis.push_back(std::move(x));
  }
  return basis;
}

bool Rref::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  const Scalar inv = v.begin()->second;
  for (auto& [c, x] : v) x /= inv;
  for (auto& [pc, row] : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) {
      Scalar coeff = it->second;
      axpy(row, -coeff, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  pivot_set_.insert(pivot);
  return true;
}

SparseVec Rref::reduce(SparseVec v) const {
  for (const auto& [pc, row] : rows_) {
    auto it = v.find(pc);
    if (it == v.end()) continue;
    Scalar coeff = it->second;
    axpy(v, -coeff, row);
  }
  return v;
}

SparseMatrix ChainComplexWindow::diff_at(Bidegree b) const {
  auto it = diff.find(b);
  if (it != diff.end()) return it->second;
  const Bidegree target = b + Bidegree{-1, 0};
  return SparseMatrix(basis.dim(target), basis.dim(b));
}

HomologyReport homology(const ChainComplexWindow& complex) {
  const Window& w = complex.window;
  for (const auto& [b, d] : complex.diff) {
    const Bidegree below = b + Bidegree{-1, 0};
    if (below.h - 1 < w.h_min) continue;
    auto it = complex.diff.find(below);
    if (it == complex.diff.end()) continue;
    if (!it->second.multiply(d).is_zero())
      throw IdentityViolation("d∘d != 0 at bidegree " + to_string(b));
  }

  HomologyReport report;
  for (const auto& [b, ls] : complex.basis.labels) {
    const int n = static_cast<int>(ls.size());
    if (n == 0) continue;
    const int rank_out = rank(complex.diff_at(b));
    const int rank_in = rank(complex.diff_at(b + Bidegree{1, 0}));
    report.dims[b] = std::max(0, n - rank_out - rank_in);
    if (b.h - 1 < w.h_min || b.h + 1 > w.h_max) report.truncated.insert(b);
  }
  return report;
}

}  // namespace kwb
