#ifndef NILORB_LIEALG_HPP
#define NILORB_LIEALG_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/errors.hpp"
#include "nilorb/qmatrix.hpp"

namespace nilorb {

class Element;
class Subspace;

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// labeled basis. Immutable after construction; safe to share across threads.
class LieAlgebra {
public:
  struct Term {
    int k;
    Rational c;
  };
  using Sc = std::vector<Term>;  // sparse coordinates of one basis bracket

  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sparse coordinates of [b_i, b_j].
  const Sc& sc(int i, int j) const { return table_[size_t(i) * dim_ + j]; }

  const std::optional<std::vector<int>>& cartan_indices() const { return cartan_; }
  std::optional<int> lie_rank() const { return lie_rank_; }

  /// Gram matrix of the Killing form on the basis; computed lazily.
  const QMatrix& killing_gram() const;
  bool killing_nondegenerate() const;

  /// Exhaustive Jacobi check over basis triples i < j < k. Returns false as
  /// soon as a violating triple is found.
  bool jacobi_holds_exhaustive() const;
  /// Jacobi check on `samples` seeded random triples.
  bool jacobi_holds_sampled(long long samples, std::uint64_t seed) const;

private:
  friend class LieAlgebraBuilder;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Sc> table_;
  std::optional<std::vector<int>> cartan_;
  std::optional<int> lie_rank_;

  mutable std::once_flag gram_once_;
  mutable std::unique_ptr<QMatrix> gram_;
  mutable bool gram_nondeg_ = false;

  bool jacobi_triple_ok(int i, int j, int k) const;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Assembles a LieAlgebra. Brackets are set once per unordered basis pair;
/// antisymmetry is filled in automatically.
class LieAlgebraBuilder {
public:
  LieAlgebraBuilder(int dim, std::vector<std::string> labels);

  void set_bracket(int i, int j, LieAlgebra::Sc terms);
  void set_cartan(std::vector<int> indices);
  void set_rank(int rank);

  LieAlgebraPtr build();

private:
  std::shared_ptr<LieAlgebra> alg_;
  std::vector<char> assigned_;
};

/// Vector in a fixed LieAlgebra, stored as a dense coefficient vector.
class Element {
public:
  Element() : alg_(nullptr) {}
  explicit Element(const LieAlgebra* alg)
      : alg_(alg), c_(alg ? size_t(alg->dim()) : 0) {}
  Element(const LieAlgebra* alg, std::vector<Rational> coeffs);

  const LieAlgebra* algebra() const { return alg_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational& operator[](int i) { return c_[size_t(i)]; }
  const Rational& operator[](int i) const { return c_[size_t(i)]; }

  bool is_zero() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element scaled(const Rational& f) const;
  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.c_ == b.c_;
  }

  std::string str() const;

private:
  const LieAlgebra* alg_;
  std::vector<Rational> c_;
};

Element bracket(const Element& x, const Element& y);
QMatrix ad_matrix(const Element& x);
Rational killing(const Element& x, const Element& y);

/// Subspace of a LieAlgebra, stored as a reduced-echelon basis matrix so that
/// equal subspaces compare equal as matrices.
class Subspace {
public:
  Subspace() : alg_(nullptr), basis_(0, 0) {}  // empty placeholder
  explicit Subspace(const LieAlgebra* alg) : alg_(alg), basis_(0, alg->dim()) {}
  static Subspace full(const LieAlgebra* alg);
  static Subspace from_elements(const LieAlgebra* alg, const std::vector<Element>& gens);
  static Subspace from_rows(const LieAlgebra* alg, QMatrix rows);

  const LieAlgebra* algebra() const { return alg_; }
  const QMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  int dim() const { return basis_.rows(); }
  Element basis_element(int i) const;

  bool contains(const Element& v) const;
  bool contains(const Subspace& s) const;
  /// v reduced modulo this subspace.
  std::vector<Rational> residual(const std::vector<Rational>& v) const;
  /// Coordinates of a member in this basis; throws input_error otherwise.
  std::vector<Rational> coords(const Element& v) const;
  Element from_coords(const std::vector<Rational>& c) const;

  bool is_subalgebra() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.alg_ == b.alg_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  const LieAlgebra* alg_;
  QMatrix basis_;
  std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Span of [x, s] over a basis of s.
Subspace bracket_span(const Element& x, const Subspace& s);
/// Span of [a_i, b_j] over bases of a and b.
Subspace bracket_span(const Subspace& a, const Subspace& b);

/// Centralizer of x in its parent algebra.
Subspace centralizer(const Element& x);
/// Center of a subalgebra; throws input_error when s is not bracket-closed.
Subspace center_of(const Subspace& s);
/// Normalizer of s in the ambient algebra: {y : [y, s] in s}.
Subspace normalizer(const Subspace& s);
/// Killing-orthogonal complement; throws unsupported_error when the Killing
/// form is degenerate.
Subspace orthogonal(const Subspace& s);

/// Eigenspace decomposition of ad(x) restricted to an invariant subspace.
/// Eigenvalues must be integers in [-2 dim g, 2 dim g] and the restriction
/// diagonalizable; otherwise unsupported_error. Sorted by eigenvalue.
std::vector<std::pair<Rational, Subspace>> eigenspaces(const Element& x, const Subspace& s);

/// Kernel of ad(x) - lambda restricted to s.
Subspace eigenspace_of(const Element& x, const Subspace& s, const Rational& lambda);

}  // namespace nilorb

#endif
