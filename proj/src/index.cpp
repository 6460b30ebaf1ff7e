#include "nilorb/index.hpp"

#include "nilorb/rng.hpp"

namespace nilorb {

VectorMatrix::VectorMatrix(int rows, int cols, Subspace target)
    : rows_(rows), cols_(cols), target_(std::move(target)),
      coords_(size_t(rows) * cols,
              std::vector<Rational>(static_cast<size_t>(target_.dim()))) {}

void VectorMatrix::set_entry(int i, int j, const Element& v) {
  coords_[size_t(i) * cols_ + j] = target_.coords(v);
}

QMatrix VectorMatrix::eval(const std::vector<Rational>& form) const {
  if (int(form.size()) != target_.dim())
    throw input_error("VectorMatrix::eval: form length mismatch");
  QMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const auto& c = entry_coords(i, j);
      Rational acc(0);
      for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero() && !form[k].is_zero()) acc += c[k] * form[k];
      m.at(i, j) = acc;
    }
  return m;
}

bool VectorMatrix::is_zero() const {
  for (const auto& c : coords_)
    for (const auto& x : c)
      if (!x.is_zero()) return false;
  return true;
}

RankConfig RankConfig::stream(const std::string& tag) const {
  return {trials, bound, seed ^ fnv1a64(tag)};
}

int generic_rank(const VectorMatrix& m, const RankConfig& cfg) {
  if (cfg.trials < 1 || cfg.bound < 1)
    throw input_error("generic_rank: trials and bound must be positive");
  Rng rng(cfg.seed);
  int best = 0;
  int cap = std::min(m.rows(), m.cols());
  for (long long t = 0; t < cfg.trials && best < cap; ++t) {
    std::vector<Rational> form(static_cast<size_t>(m.target().dim()));
    for (auto& x : form) x = Rational(rng.uniform_int(-cfg.bound, cfg.bound));
    best = std::max(best, rank(m.eval(form)));
  }
  return best;
}

VectorMatrix kirillov_in(const std::vector<Element>& qbasis,
                         const std::vector<Element>& vbasis, const Subspace& target) {
  VectorMatrix m(int(vbasis.size()), int(qbasis.size()), target);
  for (size_t j = 0; j < qbasis.size(); ++j)
    for (size_t i = 0; i < vbasis.size(); ++i) {
      Element w = bracket(qbasis[j], vbasis[i]);
      try {
        m.set_entry(int(i), int(j), w);
      } catch (const input_error&) {
        throw input_error("kirillov: module is not closed under the action");
      }
    }
  return m;
}

VectorMatrix kirillov(const Subspace& q, const Subspace& v) {
  std::vector<Element> qb, vb;
  for (int i = 0; i < q.dim(); ++i) qb.push_back(q.basis_element(i));
  for (int i = 0; i < v.dim(); ++i) vb.push_back(v.basis_element(i));
  return kirillov_in(qb, vb, v);
}

int index_of(const Subspace& q, const RankConfig& cfg) {
  return q.dim() - generic_rank(kirillov(q, q), cfg);
}

int index_rep(const Subspace& q, const Subspace& v, const RankConfig& cfg) {
  return v.dim() - generic_rank(kirillov(q, v), cfg);
}

VectorMatrix de_matrix(const Sl2Triple& t) {
  return de_matrix(t, weight_decomposition(t));
}

VectorMatrix de_matrix(const Sl2Triple& t, const WeightDecomposition& wd) {
  std::vector<Element> basis = wd.z_first_basis();
  int n = int(basis.size());
  int m = wd.z_dim();
  VectorMatrix de(n, m, wd.gxi);
  std::vector<Element> eta_cols;
  for (int j = 0; j < m; ++j) eta_cols.push_back(bracket(t.f, basis[size_t(j)]));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      Element w = bracket(eta_cols[size_t(j)], basis[size_t(i)]);
      de.set_entry(i, j, w);
    }
  // Symmetry over the central block: [[f,e_j],e_i] = [[f,e_i],e_j].
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (de.entry_coords(i, j) != de.entry_coords(j, i))
        throw property_violation("de_matrix: central block not symmetric");
  return de;
}

TheoremReport verify_theorems(const Sl2Triple& t, const RankConfig& cfg) {
  return verify_theorems(t, weight_decomposition(t), cfg);
}

TheoremReport verify_theorems(const Sl2Triple& t, const WeightDecomposition& wd,
                              const RankConfig& cfg) {
  const LieAlgebra* g = t.e.algebra();
  if (!g->lie_rank()) throw unsupported_error("verify_theorems: rank unknown");
  TheoremReport r;
  r.rank_g = *g->lie_rank();
  r.dim_gxi = wd.gxi.dim();
  r.dim_z = wd.z.dim();
  r.target = r.rank_g - r.dim_z;

  Subspace n = normalizer_of_centralizer(t, wd.gxi, wd.z);
  r.dim_n = n.dim();

  r.ind_gxi = index_of(wd.gxi, cfg.stream("ind_gxi"));
  r.ind_gxi_ok = (r.ind_gxi == r.rank_g);
  r.ind_n = index_of(n, cfg.stream("ind_n"));
  r.ind_n_gxi = index_rep(n, wd.gxi, cfg.stream("ind_n_gxi"));
  r.alg_identity_ok = (r.ind_n == r.target);
  r.mod_identity_ok = (r.ind_n_gxi == r.target);

  VectorMatrix de = de_matrix(t, wd);
  r.de_rank = generic_rank(de, cfg.stream("de"));
  r.prop4_ok = (r.de_rank == r.dim_z);
  r.prop4_equiv_ok = (r.prop4_ok == r.mod_identity_ok);

  // ind q~ + ind q <= dim(q~/q) + 2 ind(q~, q) for the ideal q = g^e of n.
  r.lemma1_ok =
      (r.ind_gxi + r.ind_n <= (r.dim_n - r.dim_gxi) + 2 * r.ind_n_gxi);

  // Rank chain: with rank C = dim g^e - ind g^e,
  //   rank K(n, g^e) <= rank C + dim z and rank K(n) <= rank C + 2 dim z.
  {
    int rank_c = r.dim_gxi - r.ind_gxi;
    int rank_kn_gxi = r.dim_gxi - r.ind_n_gxi;
    int rank_kn = r.dim_n - r.ind_n;
    r.rank_chain_ok =
        rank_kn_gxi <= rank_c + r.dim_z && rank_kn <= rank_c + 2 * r.dim_z;
  }

  // K(g^e) in the z-first basis vanishes on the first dim z rows and columns.
  std::vector<Element> basis = wd.z_first_basis();
  VectorMatrix kg = kirillov_in(basis, basis, wd.gxi);
  r.block_structure_ok = true;
  for (int i = 0; i < r.dim_gxi && r.block_structure_ok; ++i)
    for (int j = 0; j < r.dim_gxi && r.block_structure_ok; ++j) {
      if (i >= r.dim_z && j >= r.dim_z) continue;
      for (const auto& c : kg.entry_coords(i, j))
        if (!c.is_zero()) {
          r.block_structure_ok = false;
          break;
        }
    }
  return r;
}

}  // namespace nilorb
