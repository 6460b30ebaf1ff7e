#ifndef NILORB_QMATRIX_HPP
#define NILORB_QMATRIX_HPP

#include <optional>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

/// Dense matrix over Q, row-major. Dimensions are fixed at construction.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<Rational> row(int i) const;
  void set_row(int i, const std::vector<Rational>& r);

  QMatrix transpose() const;
  QMatrix mul(const QMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  QMatrix r;
  std::vector<int> pivots;  // strictly increasing pivot columns
};

/// Reduced row echelon form with deterministic pivoting: leftmost pivot
/// column, topmost nonzero row, pivots normalized to 1.
RrefResult rref(const QMatrix& m);

/// In-place variant used by the heavier callers.
std::vector<int> rref_in_place(QMatrix& m);

int rank(const QMatrix& m);

/// Basis of {v : M v = 0}, rows in reduced echelon form. Row count equals
/// cols - rank(M).
QMatrix kernel_basis(const QMatrix& m);

/// Some x with M x = b when consistent (free variables set to zero);
/// std::nullopt otherwise. Throws on dimension mismatch.
std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b);

/// Stacks matrices with equal column counts on top of each other.
QMatrix vstack(const std::vector<QMatrix>& blocks);

/// Determinant by fraction-aware Gaussian elimination; square input only.
Rational determinant(const QMatrix& m);

}  // namespace nilorb

#endif
