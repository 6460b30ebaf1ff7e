#include "nilorb/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace nilorb {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols())
      throw std::invalid_argument("QMatrix: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> QMatrix::row(int i) const {
  return std::vector<Rational>(a_.begin() + size_t(i) * cols_,
                               a_.begin() + size_t(i + 1) * cols_);
}

void QMatrix::set_row(int i, const std::vector<Rational>& r) {
  if (int(r.size()) != cols_) throw std::invalid_argument("QMatrix: bad row size");
  for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::mul(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: dimension mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += aik * b;
      }
    }
  return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("QMatrix: dimension mismatch");
  std::vector<Rational> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<int> rref_in_place(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = m.at(r, c).inverse();
    if (!inv.is_one())
      for (int j = c; j < m.cols(); ++j)
        if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Rational f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols(); ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.r = m;
  res.pivots = rref_in_place(res.r);
  return res;
}

int rank(const QMatrix& m) {
  QMatrix c = m;
  return int(rref_in_place(c).size());
}

QMatrix kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> piv = rref_in_place(r);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : piv) is_pivot[c] = 1;
  int nfree = m.cols() - int(piv.size());
  QMatrix k(nfree, m.cols());
  int kr = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k.at(kr, f) = Rational(1);
    for (size_t pi = 0; pi < piv.size(); ++pi)
      k.at(kr, piv[pi]) = -r.at(int(pi), f);
    ++kr;
  }
  rref_in_place(k);
  return k;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b) {
  if (int(b.size()) != m.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (size_t pi = 0; pi < piv.size(); ++pi) x[piv[pi]] = aug.at(int(pi), m.cols());
  return x;
}

QMatrix vstack(const std::vector<QMatrix>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    if (b.cols() > 0) cols = b.cols();
  }
  QMatrix m(rows, cols);
  int r = 0;
  for (const auto& b : blocks) {
    if (b.rows() > 0 && b.cols() != cols)
      throw std::invalid_argument("vstack: column mismatch");
    for (int i = 0; i < b.rows(); ++i, ++r)
      for (int j = 0; j < cols; ++j) m.at(r, j) = b.at(i, j);
  }
  return m;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  QMatrix a = m;
  int n = m.rows();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = c; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Rational inv = a.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      Rational f = a.at(i, c) * inv;
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j)
        if (!a.at(c, j).is_zero()) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

}  // namespace nilorb
