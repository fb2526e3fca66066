#include "atyp/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace atyp {

RatVector apply(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: size mismatch");
  RatVector out = RatVector::Constant(m.rows(), Rational(0));
  for (Index j = 0; j < v.size(); ++j) {
    if (v(j).is_zero()) continue;
    for (Index i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      out(i) += m(i, j) * v(j);
    }
  }
  return out;
}

bool is_zero(const RatVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

RatVector SpanBasis::reduce(const RatVector& v) const {
  RatVector r = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational& c = r(pivots_[k]);
    if (c.is_zero()) continue;
    Rational f = c;  // rows are pivot-normalized to 1
    for (Index i = 0; i < ambient_; ++i) {
      if (rows_[k](i).is_zero()) continue;
      r(i) -= f * rows_[k](i);
    }
  }
  return r;
}

bool SpanBasis::insert(const RatVector& v) {
  if (v.size() != ambient_) throw std::invalid_argument("SpanBasis: ambient mismatch");
  RatVector r = v;
  RatVector combo = RatVector::Constant(static_cast<Index>(raws_.size()) + 1, Rational(0));
  combo(static_cast<Index>(raws_.size())) = Rational(1);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = r(pivots_[k]);
    if (c.is_zero()) continue;
    for (Index i = 0; i < ambient_; ++i)
      if (!rows_[k](i).is_zero()) r(i) -= c * rows_[k](i);
    for (Index j = 0; j < row_combo_[k].size(); ++j)
      if (!row_combo_[k](j).is_zero()) combo(j) -= c * row_combo_[k](j);
  }
  Index piv = -1;
  for (Index i = 0; i < ambient_; ++i)
    if (!r(i).is_zero()) { piv = i; break; }
  if (piv < 0) return false;
  Rational inv = Rational(1) / r(piv);
  for (Index i = 0; i < ambient_; ++i)
    if (!r(i).is_zero()) r(i) *= inv;
  for (Index j = 0; j < combo.size(); ++j)
    if (!combo(j).is_zero()) combo(j) *= inv;
  raws_.push_back(v);
  // resize earlier combos to the new raw count
  for (auto& rc : row_combo_) {
    RatVector grown = RatVector::Constant(static_cast<Index>(raws_.size()), Rational(0));
    grown.head(rc.size()) = rc;
    rc = grown;
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  row_combo_.push_back(std::move(combo));
  return true;
}

std::optional<RatVector> SpanBasis::coords(const RatVector& v) const {
  RatVector r = v;
  RatVector acc = RatVector::Constant(static_cast<Index>(raws_.size()), Rational(0));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rational c = r(pivots_[k]);
    if (c.is_zero()) continue;
    for (Index i = 0; i < ambient_; ++i)
      if (!rows_[k](i).is_zero()) r(i) -= c * rows_[k](i);
    for (Index j = 0; j < row_combo_[k].size(); ++j)
      if (!row_combo_[k](j).is_zero()) acc(j) += c * row_combo_[k](j);
  }
  if (!is_zero(r)) return std::nullopt;
  return acc;
}

namespace {

// Row echelon with recorded pivot columns; returns rank.
Index echelonize(RatMatrix& a, std::vector<Index>& pivot_cols) {
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Rational inv = Rational(1) / a(r, c);
    for (Index j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = a(i, c);
      if (f.is_zero()) continue;
      for (Index j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

RatMatrix kernel_basis(const RatMatrix& a) {
  RatMatrix m = a;
  std::vector<Index> piv;
  const Index rank = echelonize(m, piv);
  const Index cols = a.cols();
  std::vector<bool> is_piv(static_cast<size_t>(cols), false);
  for (Index c : piv) is_piv[static_cast<size_t>(c)] = true;
  RatMatrix k = RatMatrix::Constant(cols, cols - rank, Rational(0));
  Index out = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_piv[static_cast<size_t>(free)]) continue;
    k(free, out) = Rational(1);
    for (Index r = 0; r < rank; ++r) {
      // pivot row r has pivot at piv[r]; entry at `free` gives the dependence
      if (!m(r, free).is_zero()) k(piv[static_cast<size_t>(r)], out) = -m(r, free);
    }
    ++out;
  }
  return k;
}

Index rank_of(const RatMatrix& a) {
  RatMatrix m = a;
  std::vector<Index> piv;
  return echelonize(m, piv);
}

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> piv;
  echelonize(aug, piv);
  RatVector x = RatVector::Constant(a.cols(), Rational(0));
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == a.cols()) return std::nullopt;  // inconsistent row
    x(piv[r]) = aug(static_cast<Index>(r), a.cols());
  }
  return x;
}

std::vector<int> nilpotent_jordan_profile(const RatMatrix& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("jordan: square required");
  const Index d = n.rows();
  std::vector<Index> ranks;  // ranks of n^k, k = 1, 2, ...
  RatMatrix p = n;
  while (true) {
    Index r = rank_of(p);
    ranks.push_back(r);
    if (r == 0) break;
    p = p * n;
    if (static_cast<Index>(ranks.size()) > d) throw std::domain_error("jordan: matrix not nilpotent");
  }
  // blocks of size >= k: rank(n^{k-1}) - rank(n^k), with rank(n^0) = d
  std::vector<Index> ge;
  Index prev = d;
  for (Index rk : ranks) {
    ge.push_back(prev - rk);
    prev = rk;
  }
  std::vector<int> profile;
  for (size_t k = 0; k < ge.size(); ++k) {
    Index count = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
    for (Index i = 0; i < count; ++i) profile.push_back(static_cast<int>(k + 1));
  }
  std::sort(profile.rbegin(), profile.rend());
  return profile;
}

}  // namespace atyp
