#include "nilorb/propp.hpp"

#include <algorithm>

#include "nilorb/rng.hpp"

namespace nilorb {

QMatrix ParamMatrix::eval(const std::vector<Rational>& point) const {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j).eval(point);
  return m;
}

std::string to_string(PStatus s) {
  switch (s) {
    case PStatus::exact_pass: return "exact-pass";
    case PStatus::exact_fail: return "exact-fail";
    case PStatus::probabilistic_pass: return "probabilistic-pass";
  }
  return "?";
}

PStatus combine(PStatus a, PStatus b) {
  if (a == PStatus::exact_fail || b == PStatus::exact_fail) return PStatus::exact_fail;
  if (a == PStatus::probabilistic_pass || b == PStatus::probabilistic_pass)
    return PStatus::probabilistic_pass;
  return PStatus::exact_pass;
}

Subspace top_weight_space(const Sl2Triple& t) {
  WeightDecomposition wd = weight_decomposition(t);
  int ti = wd.weight_index(wd.top_z_weight());
  return Subspace::from_elements(t.e.algebra(), wd.zpart[size_t(ti)]);
}

namespace {

// Coordinates of w over an explicit list of independent vectors; nullopt when
// w is outside their span.
std::optional<std::vector<Rational>> coords_over(const std::vector<Element>& basis,
                                                 const Element& w) {
  if (basis.empty()) return std::nullopt;
  int n = basis[0].algebra()->dim();
  QMatrix cols(n, int(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < n; ++i) cols.at(i, int(j)) = basis[j][i];
  return solve(cols, w.coeffs());
}

std::vector<Element> weight_space_basis(const WeightDecomposition& wd, int wi) {
  std::vector<Element> b = wd.zpart[size_t(wi)];
  for (const auto& v : wd.cpart[size_t(wi)]) b.push_back(v);
  return b;
}

// Determinant of a square Poly matrix by Laplace expansion; fine for the
// small sizes that occur here.
Poly poly_det(const ParamMatrix& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return m.at(rows[0], cols[0]);
  Poly acc(m.nparams);
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const Poly& pivot = m.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<int> subcols;
    for (size_t c = 0; c < k; ++c)
      if (c != j) subcols.push_back(cols[c]);
    Poly minor = poly_det(m, subrows, subcols);
    Poly term = pivot * minor;
    if (j % 2 == 1) term = term.scaled(Rational(-1));
    acc = acc + term;
  }
  return acc;
}

void enumerate_subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[size_t(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[size_t(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[size_t(i)];
    for (int j = i + 1; j < k; ++j) cur[size_t(j)] = cur[size_t(j - 1)] + 1;
  }
}

// Remaps a polynomial supported on two variables to a fresh 2-variable one.
Poly remap_to_binary(const Poly& p, int va, int vb) {
  Poly q(2);
  for (const auto& [e, c] : p.terms()) {
    Poly::Exps ne{e[va], e[vb], 0, 0};
    q.add_term(ne, c);
  }
  return q;
}

// Rational projective root of a binary form with both coordinates nonzero,
// if a small one exists.
std::optional<std::pair<Rational, Rational>> binary_rational_root(const Poly& g) {
  // Dehomogenize at alpha = 1 after stripping variable powers.
  int minB = g.total_degree();
  for (const auto& [e, c] : g.terms()) minB = std::min(minB, e[1]);
  UPoly u;
  for (const auto& [e, c] : g.terms()) {
    size_t k = size_t(e[1] - minB);
    if (u.size() <= k) u.resize(k + 1);
    u[k] += c;
  }
  upoly_trim(u);
  if (upoly_deg(u) < 1) return std::nullopt;
  for (long long p = -200; p <= 200; ++p) {
    if (p == 0) continue;
    for (long long q = 1; q <= 20; ++q) {
      Rational t(p, q);
      if (upoly_eval(u, t).is_zero()) return std::make_pair(Rational(1), t);
    }
  }
  return std::nullopt;
}

}  // namespace

ParamMatrix structure_coeffs(const Sl2Triple& t, const WeightDecomposition& wd,
                             int i1, int k1) {
  int ti = wd.weight_index(wd.top_z_weight());
  const std::vector<Element>& wbasis = wd.zpart[size_t(ti)];
  const std::vector<Element>& vslice = wd.zpart[size_t(i1)];
  std::vector<Element> ubasis = weight_space_basis(wd, k1);
  if (vslice.empty()) throw input_error("structure_coeffs: empty center slice");
  if (ubasis.empty()) throw input_error("structure_coeffs: empty candidate weight");

  int delta = int(vslice.size());
  if (delta > 4)
    throw unsupported_error("structure_coeffs: more than four parameters");
  ParamMatrix m(int(wbasis.size()), int(ubasis.size()), delta);
  for (int s = 0; s < delta; ++s) {
    for (int q = 0; q < m.cols; ++q) {
      Element w = bracket(bracket(t.f, ubasis[size_t(q)]), vslice[size_t(s)]);
      std::optional<std::vector<Rational>> c;
      if (w.is_zero())
        c = std::vector<Rational>(wbasis.size());
      else
        c = coords_over(wbasis, w);
      if (!c)
        throw property_violation(
            "structure_coeffs: bracket left the top weight space");
      for (int p = 0; p < m.rows; ++p) {
        if ((*c)[size_t(p)].is_zero()) continue;
        Poly::Exps e{0, 0, 0, 0};
        e[s] = 1;
        m.at(p, q).add_term(e, (*c)[size_t(p)]);
      }
    }
  }
  return m;
}

BlockVerdict surjective_all_nonzero(const ParamMatrix& m, const SurjConfig& cfg) {
  BlockVerdict out;
  out.params = m.nparams;
  out.rows = m.rows;
  out.cols = m.cols;
  out.status = PStatus::exact_pass;
  if (m.rows == 0) return out;

  const int np = m.nparams;
  auto ones_on = [&](unsigned mask) {
    std::vector<Rational> pt(static_cast<size_t>(np));
    for (int v = 0; v < np; ++v)
      if (mask & (1u << v)) pt[size_t(v)] = Rational(1);
    return pt;
  };

  if (m.rows > m.cols) {
    out.status = PStatus::exact_fail;
    out.witness = ones_on((1u << np) - 1);
    out.note = "more rows than columns";
    return out;
  }

  std::vector<std::vector<int>> col_subsets;
  enumerate_subsets(m.cols, m.rows, col_subsets);
  std::vector<int> all_rows(static_cast<size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) all_rows[size_t(i)] = i;

  Rng rng(cfg.seed);
  for (unsigned mask = 1; mask < (1u << np); ++mask) {
    // Substitute zero outside the stratum.
    ParamMatrix ms = m;
    for (int v = 0; v < np; ++v)
      if (!(mask & (1u << v)))
        for (auto& e : ms.entries) e = e.substituted_zero(v);

    std::vector<Poly> minors;
    bool monomial_cert = false;
    if (m.rows <= 5) {
      for (const auto& cs : col_subsets) {
        Poly d = poly_det(ms, all_rows, cs);
        if (d.is_zero()) continue;
        minors.push_back(d);
        if (d.as_monomial()) {
          monomial_cert = true;
          break;
        }
      }
    }
    if (monomial_cert) continue;

    if (m.rows <= 5 && minors.empty()) {
      out.status = PStatus::exact_fail;
      out.witness = ones_on(mask);
      out.note = "all maximal minors vanish on a parameter stratum";
      return out;
    }

    int nvars = __builtin_popcount(mask);
    bool decided = false;
    if (m.rows <= 5 && nvars == 2) {
      int va = -1, vb = -1;
      for (int v = 0; v < np; ++v)
        if (mask & (1u << v)) (va < 0 ? va : vb) = v;
      std::vector<Poly> forms;
      for (const auto& d : minors) forms.push_back(remap_to_binary(d, va, vb));
      Poly g = poly_gcd_binary(forms);
      if (g.as_monomial()) {
        decided = true;  // common zeros only where a coordinate vanishes
      } else {
        out.status = PStatus::exact_fail;
        out.note = "common minor factor " + g.str({"a", "b", "c", "d"});
        if (auto root = binary_rational_root(g)) {
          std::vector<Rational> pt(static_cast<size_t>(np));
          pt[size_t(va)] = root->first;
          pt[size_t(vb)] = root->second;
          if (rank(m.eval(pt)) < m.rows) out.witness = pt;
        }
        return out;
      }
    } else if (m.rows <= 5 && nvars > 2) {
      // A pair of variables whose private minors already have no common
      // nonvanishing zero certifies the stratum.
      for (int va = 0; va < np && !decided; ++va) {
        if (!(mask & (1u << va))) continue;
        for (int vb = va + 1; vb < np && !decided; ++vb) {
          if (!(mask & (1u << vb))) continue;
          unsigned pairmask = (1u << va) | (1u << vb);
          std::vector<Poly> forms;
          for (const auto& d : minors)
            if ((d.support_mask() & ~pairmask) == 0)
              forms.push_back(remap_to_binary(d, va, vb));
          if (forms.empty()) continue;
          Poly g = poly_gcd_binary(forms);
          if (g.as_monomial()) decided = true;
        }
      }
    } else if (nvars == 1) {
      // A nonzero homogeneous form in one variable is a monomial, so this is
      // only reached when no minors survive; handled above.
      decided = !minors.empty();
    }
    if (decided) continue;

    // Randomized fallback: exhaustive small grid plus seeded random points,
    // all stratum coordinates nonzero.
    long long tested = 0;
    std::vector<int> vars;
    for (int v = 0; v < np; ++v)
      if (mask & (1u << v)) vars.push_back(v);
    std::vector<int> grid(vars.size(), 0);
    const int gridvals[4] = {-2, -1, 1, 2};
    bool bad = false;
    std::vector<Rational> badpt;
    long long gridtotal = 1;
    for (size_t i = 0; i < vars.size(); ++i) gridtotal *= 4;
    for (long long g = 0; g < gridtotal && !bad; ++g) {
      long long x = g;
      std::vector<Rational> pt(static_cast<size_t>(np));
      for (size_t i = 0; i < vars.size(); ++i) {
        pt[size_t(vars[i])] = Rational(gridvals[x % 4]);
        x /= 4;
      }
      ++tested;
      if (rank(m.eval(pt)) < m.rows) {
        bad = true;
        badpt = pt;
      }
    }
    for (long long it = 0; it < cfg.random_points && !bad; ++it) {
      std::vector<Rational> pt(static_cast<size_t>(np));
      for (int v : vars) {
        long long val = 0;
        while (val == 0) val = rng.uniform_int(-1000, 1000);
        pt[size_t(v)] = Rational(val);
      }
      ++tested;
      if (rank(m.eval(pt)) < m.rows) {
        bad = true;
        badpt = pt;
      }
    }
    if (bad) {
      out.status = PStatus::exact_fail;
      out.witness = badpt;
      out.note = "rank drop found by sampling";
      return out;
    }
    out.status = combine(out.status, PStatus::probabilistic_pass);
    out.evidence += tested;
    if (out.note.empty()) out.note = "stratum settled by sampling only";
  }
  return out;
}

bool direct_witness_check(const Sl2Triple& t, const WeightDecomposition& wd,
                          const Element& v) {
  std::vector<Element> gens;
  for (int i = 0; i < wd.gxi.dim(); ++i)
    gens.push_back(bracket(bracket(t.f, wd.gxi.basis_element(i)), v));
  Subspace image = Subspace::from_elements(t.e.algebra(), gens);
  int ti = wd.weight_index(wd.top_z_weight());
  for (const auto& w : wd.zpart[size_t(ti)])
    if (!image.contains(w)) return false;
  return true;
}

PVerdict check_property_p(const Sl2Triple& t, std::uint64_t seed) {
  return check_property_p(t, weight_decomposition(t), seed);
}

PVerdict check_property_p(const Sl2Triple& t, const WeightDecomposition& wd,
                          std::uint64_t seed) {
  PVerdict v;
  if (!is_distinguished(t) || is_regular(t))
    v.warning = "input is not a distinguished non-regular nilpotent";

  Rational mr = wd.top_z_weight();
  int ti = wd.weight_index(mr);
  int dr = int(wd.zpart[size_t(ti)].size());

  // Weight-2 slice: [[f, w_p], e] = -m_r w_p settles every v with a nonzero
  // e-coordinate.
  {
    BlockVerdict b;
    b.weight_i1 = 2;
    b.via_shortcut = true;
    b.rows = dr;
    b.note = "lowest-weight-2 reduction";
    for (const auto& wp : wd.zpart[size_t(ti)]) {
      Element lhs = bracket(bracket(t.f, wp), t.e);
      if (!(lhs == wp.scaled(-mr))) {
        b.status = PStatus::exact_fail;
        b.note = "weight-2 reduction identity failed";
        break;
      }
    }
    v.blocks.push_back(b);
  }

  Rng rng(seed ^ fnv1a64("witness"));
  auto sampled_witness_block = [&](int i1, const std::string& why) {
    BlockVerdict b;
    b.weight_i1 = wd.weights[size_t(i1)].to_int();
    b.vacuous = true;
    b.note = why;
    for (int it = 0; it < 20; ++it) {
      Element vv(t.e.algebra());
      bool nz = false;
      for (size_t wi = size_t(i1); wi < wd.weights.size(); ++wi)
        for (const auto& zv : wd.zpart[wi]) {
          Rational c(rng.uniform_int(-5, 5));
          if (wi == size_t(i1) && !nz && c.is_zero()) c = Rational(1);
          if (wi == size_t(i1) && !c.is_zero()) nz = true;
          vv = vv + zv.scaled(c);
        }
      ++b.evidence;
      if (!direct_witness_check(t, wd, vv)) {
        b.status = PStatus::exact_fail;
        b.note += "; witness element fails the inclusion";
        return b;
      }
    }
    b.status = PStatus::probabilistic_pass;
    return b;
  };

  if (!wd.cpart[size_t(ti)].empty()) {
    // The top ad-h weight space of g^e is larger than W (only possible away
    // from distinguished orbits); decide by direct sampling.
    v.blocks.push_back(sampled_witness_block(ti, "top weight space exceeds W"));
  } else {
    for (size_t i1 = 0; i1 < wd.weights.size(); ++i1) {
      if (wd.zpart[i1].empty()) continue;
      if (!(wd.weights[i1] > Rational(2))) continue;
      int delta = int(wd.zpart[i1].size());
      if (wd.weights[i1] == mr && delta == 1 && dr == 1) {
        // v spans W; [[f, -e/m_r], v] = v gives the inclusion at once.
        BlockVerdict b;
        b.weight_i1 = mr.to_int();
        b.via_shortcut = true;
        b.rows = dr;
        b.params = 1;
        const Element& vv = wd.zpart[i1][0];
        Element u = t.e.scaled(Rational(-1) / mr);
        b.status = bracket(bracket(t.f, u), vv) == vv ? PStatus::exact_pass
                                                      : PStatus::exact_fail;
        b.note = "one-dimensional top weight shortcut";
        v.blocks.push_back(b);
        continue;
      }
      Rational mk1 = mr - wd.weights[i1] + Rational(2);
      int k1 = wd.weight_index(mk1);
      if (k1 < 0 || wd.dim_weight(k1) == 0) {
        v.blocks.push_back(sampled_witness_block(int(i1), "vacuous - no candidate weight"));
        continue;
      }
      ParamMatrix m = structure_coeffs(t, wd, int(i1), k1);
      SurjConfig scfg;
      scfg.seed = seed ^ fnv1a64("block" + std::to_string(wd.weights[i1].to_int()));
      BlockVerdict b = surjective_all_nonzero(m, scfg);
      b.weight_i1 = wd.weights[i1].to_int();
      b.weight_k1 = mk1.to_int();
      v.blocks.push_back(b);
    }
  }

  v.status = PStatus::exact_pass;
  for (const auto& b : v.blocks) v.status = combine(v.status, b.status);
  return v;
}

}  // namespace nilorb
