#ifndef NILORB_INDEX_HPP
#define NILORB_INDEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilorb/liealg.hpp"
#include "nilorb/slice.hpp"

namespace nilorb {

/// Matrix whose entries are elements of a target space V', identified with
/// the degree-1 part of S(V'). Entries are stored as coordinate vectors over
/// the target's basis, so evaluation at a linear form is a dot product.
class VectorMatrix {
public:
  VectorMatrix() : rows_(0), cols_(0) {}
  VectorMatrix(int rows, int cols, Subspace target);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Subspace& target() const { return target_; }

  void set_entry(int i, int j, const Element& v);  // must lie in the target
  const std::vector<Rational>& entry_coords(int i, int j) const {
    return coords_[size_t(i) * cols_ + j];
  }

  /// Evaluation at a linear form given by its values on the target basis.
  QMatrix eval(const std::vector<Rational>& form) const;
  bool is_zero() const;

private:
  int rows_, cols_;
  Subspace target_;
  std::vector<std::vector<Rational>> coords_;
};

/// Sampling parameters for randomized generic-rank computation.
struct RankConfig {
  long long trials = 5;
  long long bound = 1000;
  std::uint64_t seed = 0;

  RankConfig with_seed(std::uint64_t s) const { return {trials, bound, s}; }
  /// Stream derived from a textual tag, so concurrent or reordered callers
  /// stay reproducible.
  RankConfig stream(const std::string& tag) const;
};

/// Max over seeded random integer forms in [-bound, bound]^dim of the rank of
/// the evaluated matrix. A lower bound for the true generic rank; equal to it
/// up to the Schwartz-Zippel failure probability (minor degree over 2*bound+1,
/// per trial).
int generic_rank(const VectorMatrix& m, const RankConfig& cfg);

/// Kirillov matrix K(q, V): rows indexed by V, columns by q, entry (i, j) =
/// [q_j, v_i] as an element of V. Requires [q, V] inside V.
VectorMatrix kirillov(const Subspace& q, const Subspace& v);
/// K(q, V, V'): same bracket entries, coordinates taken in an explicit target.
VectorMatrix kirillov_in(const std::vector<Element>& qbasis,
                         const std::vector<Element>& vbasis, const Subspace& target);

/// ind q = dim q - rank K(q).
int index_of(const Subspace& q, const RankConfig& cfg);
/// ind(q, V) = dim V - rank K(q, V).
int index_rep(const Subspace& q, const Subspace& v, const RankConfig& cfg);

/// The [D; E] matrix: rows over a z-first weight-ordered basis of g^e,
/// columns over the z part, entry (i, j) = [[f, e_j], e_i] in g^e.
VectorMatrix de_matrix(const Sl2Triple& t);
VectorMatrix de_matrix(const Sl2Triple& t, const WeightDecomposition& wd);

/// End-to-end verification data for the two index identities on one orbit.
struct TheoremReport {
  int dim_gxi = 0, dim_z = 0, dim_n = 0;
  int rank_g = 0;
  int target = 0;      // rank g - dim z
  int ind_gxi = 0;     // must equal rank g
  int ind_n = 0;
  int ind_n_gxi = 0;
  int de_rank = 0;
  bool ind_gxi_ok = false;
  bool alg_identity_ok = false;   // ind n(g^e) = rk g - dim z
  bool mod_identity_ok = false;   // ind(n(g^e), g^e) = rk g - dim z
  bool prop4_ok = false;      // rank [D;E] = dim z
  bool prop4_equiv_ok = false;  // theorem2 and the rank criterion agree
  bool lemma1_ok = false;     // ind g^e + ind n <= dim(n/g^e) + 2 ind(n, g^e)
  bool block_structure_ok = false;  // K(g^e) vanishes on the z rows/columns
  bool rank_chain_ok = false;  // rank K(n, g^e) <= rank C + dim z,
                               // rank K(n) <= rank C + 2 dim z

  bool all_ok() const {
    return ind_gxi_ok && alg_identity_ok && mod_identity_ok && prop4_ok &&
           prop4_equiv_ok && lemma1_ok && block_structure_ok && rank_chain_ok;
  }
};

TheoremReport verify_theorems(const Sl2Triple& t, const RankConfig& cfg);
TheoremReport verify_theorems(const Sl2Triple& t, const WeightDecomposition& wd,
                              const RankConfig& cfg);

}  // namespace nilorb

#endif
