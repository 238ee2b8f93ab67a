#include "kwb/sparse.hpp"

#include <stdexcept>

namespace kwb {

void axpy(SparseVec& dst, const Scalar& c, const SparseVec& src) {
  if (is_zero(c)) return;
  for (const auto& [i, v] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      dst.emplace(i, c * v);
    } else {
      it->second += c * v;
      if (is_zero(it->second)) dst.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& v, const Scalar& c) {
  SparseVec out;
  if (is_zero(c)) return out;
  for (const auto& [i, x] : v) out.emplace(i, c * x);
  return out;
}

bool vec_is_zero(const SparseVec& v) { return v.empty(); }

Scalar SparseMatrix::get(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Scalar(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("SparseMatrix::set index");
  if (kwb::is_zero(v))
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
  if (kwb::is_zero(v)) return;
  auto it = entries_.find({r, c});
  if (it == entries_.end()) {
    set(r, c, v);
  } else {
    it->second += v;
    if (kwb::is_zero(it->second)) entries_.erase(it);
  }
}

SparseVec SparseMatrix::column(int c) const {
  SparseVec out;
  for (const auto& [rc, v] : entries_)
    if (rc.second == c) out.emplace(rc.first, v);
  return out;
}

void SparseMatrix::set_column(int c, const SparseVec& v) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (it->first.second == c)
      it = entries_.erase(it);
    else
      ++it;
  }
  for (const auto& [r, x] : v) set(r, c, x);
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [rc, mv] : entries_) {
    auto jt = v.find(rc.second);
    if (jt == v.end()) continue;
    auto ot = out.find(rc.first);
    if (ot == out.end()) {
      out.emplace(rc.first, mv * jt->second);
    } else {
      ot->second += mv * jt->second;
      if (kwb::is_zero(ot->second)) out.erase(ot);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix::multiply shape");
  SparseMatrix out(rows_, rhs.cols_);
  // rhs entries grouped by row == this column
  for (const auto& [rc, v] : entries_) {
    auto it = rhs.entries_.lower_bound({rc.second, 0});
    for (; it != rhs.entries_.end() && it->first.first == rc.second; ++it)
      out.add(rc.first, it->first.second, v * it->second);
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_);
  for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, v);
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.set(i, i, Scalar(1));
  return out;
}

}  // namespace kwb
