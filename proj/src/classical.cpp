#include "nilorb/classical.hpp"

#include <algorithm>
#include <map>

namespace nilorb {

Family family_from_string(const std::string& s) {
  if (s == "sl") return Family::sl;
  if (s == "so") return Family::so;
  if (s == "sp") return Family::sp;
  throw input_error("family must be sl, so or sp");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::sl: return "sl";
    case Family::so: return "so";
    case Family::sp: return "sp";
  }
  return "?";
}

bool partition_valid(Family f, const std::vector<int>& parts) {
  if (parts.empty()) return false;
  std::map<int, int> mult;
  for (int p : parts) {
    if (p < 1) return false;
    ++mult[p];
  }
  if (f == Family::so) {
    for (auto [p, m] : mult)
      if (p % 2 == 0 && m % 2 != 0) return false;
  } else if (f == Family::sp) {
    for (auto [p, m] : mult)
      if (p % 2 == 1 && m % 2 != 0) return false;
  }
  return true;
}

Element ClassicalRealization::to_element(const QMatrix& m) const {
  // Every basis matrix has at most two nonzero cells and distinct leading
  // cells, so coordinates can be read off and verified by reconstruction.
  Element v(alg());
  QMatrix rest = m;
  for (size_t p = 0; p < basis_mats.size(); ++p) {
    const QMatrix& b = basis_mats[p];
    int li = -1, lj = -1;
    for (int i = 0; i < n && li < 0; ++i)
      for (int j = 0; j < n; ++j)
        if (!b.at(i, j).is_zero()) {
          li = i;
          lj = j;
          break;
        }
    Rational c = rest.at(li, lj) / b.at(li, lj);
    if (c.is_zero()) continue;
    v[int(p)] = c;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!b.at(i, j).is_zero()) rest.at(i, j) -= c * b.at(i, j);
  }
  if (!rest.is_zero())
    throw input_error("ClassicalRealization: matrix outside the algebra");
  return v;
}

QMatrix ClassicalRealization::to_matrix(const Element& v) const {
  QMatrix m(n, n);
  for (size_t p = 0; p < basis_mats.size(); ++p) {
    if (v[int(p)].is_zero()) continue;
    const QMatrix& b = basis_mats[p];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!b.at(i, j).is_zero()) m.at(i, j) += v[int(p)] * b.at(i, j);
  }
  return m;
}

namespace {

QMatrix jordan_block(int m) {
  QMatrix j(m, m);
  for (int i = 0; i + 1 < m; ++i) j.at(i, i + 1) = Rational(1);
  return j;
}

struct FormSupport {
  std::vector<int> sigma;       // column of the unique nonzero in each row
  std::vector<Rational> eps;    // that entry
};

FormSupport form_support(const QMatrix& f) {
  FormSupport s;
  s.sigma.assign(size_t(f.rows()), -1);
  s.eps.assign(size_t(f.rows()), Rational(0));
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      if (!f.at(i, j).is_zero()) {
        if (s.sigma[size_t(i)] >= 0)
          throw property_violation("form is not monomial");
        s.sigma[size_t(i)] = j;
        s.eps[size_t(i)] = f.at(i, j);
      }
  return s;
}

ClassicalRealization make_realization(Family fam, int n, QMatrix form) {
  ClassicalRealization real;
  real.family = fam;
  real.n = n;
  real.form = std::move(form);

  std::vector<QMatrix> basis;
  std::vector<int> cartan;
  if (fam == Family::sl) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        QMatrix m(n, n);
        m.at(i, j) = Rational(1);
        basis.push_back(std::move(m));
      }
    for (int i = 0; i + 1 < n; ++i) {
      QMatrix m(n, n);
      m.at(i, i) = Rational(1);
      m.at(i + 1, i + 1) = Rational(-1);
      cartan.push_back(int(basis.size()));
      basis.push_back(std::move(m));
    }
  } else {
    FormSupport fs = form_support(real.form);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // E_ij - (eps_i / eps_j) E_{sigma(j), sigma(i)}, deduplicated by
        // keeping the lexicographically first pair of each orbit.
        int pi = fs.sigma[size_t(j)], pj = fs.sigma[size_t(i)];
        if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
        QMatrix m(n, n);
        m.at(i, j) += Rational(1);
        m.at(pi, pj) -= fs.eps[size_t(i)] / fs.eps[size_t(j)];
        if (m.is_zero()) continue;
        if (i == j) cartan.push_back(int(basis.size()));
        basis.push_back(std::move(m));
      }
  }

  int dim = int(basis.size());
  std::vector<std::string> labels(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) labels[size_t(i)] = "b" + std::to_string(i + 1);
  LieAlgebraBuilder bld(dim, std::move(labels));

  // Coordinates of a matrix over the basis via each basis element's leading
  // cell (leading cells are pairwise distinct by construction).
  auto decompose = [&](const QMatrix& m) {
    std::vector<Rational> c(static_cast<size_t>(dim));
    QMatrix rest = m;
    for (int p = 0; p < dim; ++p) {
      const QMatrix& b = basis[size_t(p)];
      int li = -1, lj = -1;
      for (int i = 0; i < n && li < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (!b.at(i, j).is_zero()) {
            li = i;
            lj = j;
            break;
          }
      Rational f = rest.at(li, lj) / b.at(li, lj);
      if (f.is_zero()) continue;
      c[size_t(p)] = f;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!b.at(i, j).is_zero()) rest.at(i, j) -= f * b.at(i, j);
    }
    if (!rest.is_zero())
      throw property_violation("classical: bracket left the algebra");
    return c;
  };

  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) {
      QMatrix br = basis[size_t(p)].mul(basis[size_t(q)]);
      QMatrix br2 = basis[size_t(q)].mul(basis[size_t(p)]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) br.at(i, j) -= br2.at(i, j);
      auto c = decompose(br);
      LieAlgebra::Sc terms;
      for (int k = 0; k < dim; ++k)
        if (!c[size_t(k)].is_zero()) terms.push_back({k, c[size_t(k)]});
      if (!terms.empty()) bld.set_bracket(p, q, std::move(terms));
    }

  if (!cartan.empty()) bld.set_cartan(std::move(cartan));
  int rank = fam == Family::sl ? n - 1 : n / 2;
  bld.set_rank(rank);
  real.algebra = bld.build();
  real.basis_mats = std::move(basis);
  return real;
}

// Split regular nilpotent compatible with the (skew) exchange form:
// bidiagonal with floor(m/2) ones followed by minus-ones.
QMatrix split_bidiagonal_block(int m) {
  QMatrix x(m, m);
  int k = m / 2;
  for (int i = 0; i + 1 < m; ++i) x.at(i, i + 1) = Rational(i < k ? 1 : -1);
  return x;
}

QMatrix exchange_form(int m, bool skew) {
  QMatrix f(m, m);
  for (int i = 0; i < m; ++i) {
    Rational v(1);
    if (skew && i >= m - 1 - i) v = Rational(-1);
    f.at(i, m - 1 - i) = v;
  }
  return f;
}

std::vector<int> jordan_type(const QMatrix& x) {
  // multiplicity of part m: rank(x^{m-1}) - 2 rank(x^m) + rank(x^{m+1})
  int n = x.rows();
  std::vector<int> ranks{n};
  QMatrix p = x;
  while (true) {
    ranks.push_back(rank(p));
    if (ranks.back() == 0) break;
    p = p.mul(x);
  }
  std::vector<int> parts;
  for (int m = 1; m + 1 < int(ranks.size()) + 1; ++m) {
    int rm1 = ranks[size_t(m - 1)];
    int rm = m < int(ranks.size()) ? ranks[size_t(m)] : 0;
    int rp1 = m + 1 < int(ranks.size()) ? ranks[size_t(m + 1)] : 0;
    int mult = rm1 - 2 * rm + rp1;
    for (int c = 0; c < mult; ++c) parts.push_back(m);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

PartitionNilpotent build_partition_nilpotent(Family fam, std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  if (!partition_valid(fam, parts))
    throw input_error("build_partition_nilpotent: invalid partition for " +
                      to_string(fam));
  int n = 0;
  for (int p : parts) n += p;
  if (fam == Family::sl && n < 2)
    throw input_error("build_partition_nilpotent: sl needs n >= 2");
  if (fam == Family::sp && n % 2 != 0)
    throw input_error("build_partition_nilpotent: sp needs even size");

  PartitionNilpotent pn;
  pn.partition = parts;

  QMatrix xi(n, n);
  QMatrix form(n, n);
  int off = 0;
  auto put_block = [&](const QMatrix& x, const QMatrix& f) {
    pn.block_offsets.push_back(off);
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) {
        if (!x.at(i, j).is_zero()) xi.at(off + i, off + j) = x.at(i, j);
        if (f.rows() > 0 && !f.at(i, j).is_zero())
          form.at(off + i, off + j) = f.at(i, j);
      }
    off += x.rows();
  };

  if (fam == Family::sl) {
    for (int p : parts) put_block(jordan_block(p), QMatrix());
  } else {
    // Pair equal parts into hyperbolic blocks; leftovers are single blocks
    // (odd for so, even for sp, by validity).
    size_t i = 0;
    bool skew = fam == Family::sp;
    while (i < parts.size()) {
      if (i + 1 < parts.size() && parts[i] == parts[i + 1] &&
          ((fam == Family::so && parts[i] % 2 == 0) ||
           (fam == Family::sp && parts[i] % 2 == 1))) {
        int m = parts[i];
        QMatrix x(2 * m, 2 * m), f(2 * m, 2 * m);
        QMatrix j = jordan_block(m);
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) {
            if (!j.at(a, b).is_zero()) {
              x.at(a, b) = j.at(a, b);
              x.at(m + b, m + a) = -j.at(a, b);
            }
          }
        for (int a = 0; a < m; ++a) {
          f.at(a, m + a) = Rational(1);
          f.at(m + a, a) = Rational(skew ? -1 : 1);
        }
        put_block(x, f);
        i += 2;
      } else if (fam == Family::so && parts[i] % 2 == 1) {
        put_block(split_bidiagonal_block(parts[i]), exchange_form(parts[i], false));
        i += 1;
      } else if (fam == Family::sp && parts[i] % 2 == 0) {
        put_block(split_bidiagonal_block(parts[i]), exchange_form(parts[i], true));
        i += 1;
      } else {
        throw property_violation("build_partition_nilpotent: pairing failed");
      }
    }
  }

  pn.real = make_realization(fam, n, fam == Family::sl ? QMatrix() : form);
  pn.xi = xi;

  // The constructed matrix must be in the algebra with the right Jordan type.
  Element e = pn.real.to_element(xi);
  if (jordan_type(xi) != parts)
    throw property_violation("build_partition_nilpotent: wrong Jordan type");
  pn.triple = jacobson_morozov(e);
  return pn;
}

namespace {

std::vector<int> power_exponents(const PartitionNilpotent& p) {
  int d = p.partition[0];
  std::vector<int> exps;
  if (p.real.family == Family::sl) {
    for (int i = 1; i <= d - 1; ++i) exps.push_back(i);
  } else {
    for (int i = 1; 2 * i - 1 <= d - 1; ++i) exps.push_back(2 * i - 1);
  }
  return exps;
}

std::vector<Element> power_basis(const PartitionNilpotent& p) {
  std::vector<Element> out;
  QMatrix pw = p.xi;
  int cur = 1;
  for (int e : power_exponents(p)) {
    while (cur < e) {
      pw = pw.mul(p.xi);
      ++cur;
    }
    out.push_back(p.real.to_element(pw));
  }
  return out;
}

}  // namespace

Subspace zprime(const PartitionNilpotent& p) {
  Subspace s = Subspace::from_elements(p.real.alg(), power_basis(p));
  if (s.dim() != int(power_exponents(p).size()))
    throw property_violation("zprime: powers are dependent");
  return s;
}

DMatrixData dmatrix(const PartitionNilpotent& p) {
  DMatrixData dd;
  dd.d = p.partition[0];
  dd.r = dd.d / 2;
  dd.powers = power_basis(p);
  Subspace zp = zprime(p);
  int msize = int(dd.powers.size());
  dd.m = VectorMatrix(msize, msize, zp);
  std::vector<int> exps = power_exponents(p);
  for (int j = 0; j < msize; ++j) {
    Element col = bracket(p.triple.f, dd.powers[size_t(j)]);
    for (int i = 0; i < msize; ++i) {
      Element w = bracket(col, dd.powers[size_t(i)]);
      dd.m.set_entry(i, j, w);
      // Closed form from [[xi^k, f], xi^i] = 2 k i xi^{k+i-1}.
      long long ki = (long long)exps[size_t(j)] * exps[size_t(i)];
      int pw = exps[size_t(j)] + exps[size_t(i)] - 1;
      Element expect(p.real.alg());
      if (pw <= dd.d - 1) {
        QMatrix mx = p.xi;
        for (int c = 1; c < pw; ++c) mx = mx.mul(p.xi);
        expect = p.real.to_element(mx).scaled(Rational(-2 * ki));
      }
      if (!(w == expect))
        throw property_violation("dmatrix: closed form mismatch");
    }
  }
  return dd;
}

Element xi2_element(const PartitionNilpotent& p) {
  if (p.block_offsets.size() != 2)
    throw input_error("xi2: needs a two-block partition");
  int off = p.block_offsets[1];
  int m2 = p.real.n - off;
  QMatrix x2(p.real.n, p.real.n);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < m2; ++j) x2.at(off + i, off + j) = p.xi.at(off + i, off + j);
  return p.real.to_element(x2);
}

SpecialCenter special_center_element(const PartitionNilpotent& p) {
  if (p.real.family != Family::so || p.partition.size() != 2 ||
      p.partition[0] % 2 == 0 || p.partition[1] % 2 == 0 ||
      p.partition[0] == p.partition[1])
    throw input_error("special_center_element: needs so with two distinct odd parts");
  int m1 = p.partition[0], m2 = p.partition[1];
  QMatrix x1(m1, m1), x2(m2, m2);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m1; ++j) x1.at(i, j) = p.xi.at(i, j);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < m2; ++j) x2.at(i, j) = p.xi.at(m1 + i, m1 + j);

  // A = k1 c^T with X1 k1 = 0 and c^T X2 = 0; both kernels are lines since
  // the blocks are regular.
  QMatrix k1b = kernel_basis(x1);
  QMatrix c = kernel_basis(x2.transpose());
  if (k1b.rows() != 1 || c.rows() != 1)
    throw property_violation("special_center_element: kernels not lines");
  QMatrix a(m1, m2);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m2; ++j) a.at(i, j) = k1b.at(0, i) * c.at(0, j);
  if (rank(a) != 1) throw property_violation("special_center_element: A not rank 1");

  // w = [[0, A], [-B2^-1 A^t B1, 0]] is anti-selfadjoint for the block form.
  QMatrix b1(m1, m1), b2(m2, m2);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m1; ++j) b1.at(i, j) = p.real.form.at(i, j);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < m2; ++j) b2.at(i, j) = p.real.form.at(m1 + i, m1 + j);
  // Exchange forms are involutions, so B^-1 = B.
  QMatrix cblock = b2.mul(a.transpose()).mul(b1);
  QMatrix w(p.real.n, p.real.n);
  for (int i = 0; i < m1; ++i)
    for (int j = 0; j < m2; ++j) w.at(i, m1 + j) = a.at(i, j);
  for (int i = 0; i < m2; ++i)
    for (int j = 0; j < m1; ++j) w.at(m1 + i, j) = -cblock.at(i, j);

  SpecialCenter sc;
  sc.a = a;
  sc.w = p.real.to_element(w);
  Element hw = bracket(p.triple.h, sc.w);
  // hw must be a scalar multiple of w.
  Rational lambda(0);
  for (int i = 0; i < p.real.alg()->dim(); ++i)
    if (!sc.w[i].is_zero()) {
      lambda = hw[i] / sc.w[i];
      break;
    }
  if (!(hw == sc.w.scaled(lambda)))
    throw property_violation("special_center_element: w is not an ad-h eigenvector");
  sc.lambda = lambda;
  return sc;
}

CrochetReport verify_crochet(const PartitionNilpotent& p, const SpecialCenter& sc) {
  CrochetReport rep{false, false, false, Element(p.real.alg())};
  int s = p.partition[0] / 2;
  std::vector<Element> powers = power_basis(p);
  Element fw = bracket(p.triple.f, sc.w);
  rep.vanishing_ok = true;
  for (int i = 1; i <= s; ++i) {
    Element lhs = bracket(fw, powers[size_t(i - 1)]);
    Element expect = i == 1 ? sc.w.scaled(-sc.lambda) : Element(p.real.alg());
    if (!(lhs == expect)) rep.vanishing_ok = false;
  }
  Element xi2 = xi2_element(p);
  rep.x = bracket(fw, xi2);
  Subspace gxi = centralizer(p.triple.e);
  rep.x_ok = !rep.x.is_zero() && gxi.contains(rep.x);
  Element ftop = bracket(p.triple.f, powers[size_t(s - 1)]);
  rep.top_power_ok = bracket(ftop, xi2).is_zero();
  return rep;
}

TwoPartSuite two_part_suite(const PartitionNilpotent& p) {
  TwoPartSuite ts;
  ts.s = p.partition[0] / 2;
  ts.t = p.partition[1] / 2;
  ts.sc = special_center_element(p);
  ts.crochet = verify_crochet(p, ts.sc);
  ts.xi2 = xi2_element(p);

  Subspace gxi = centralizer(p.triple.e);
  Subspace z = center_of(gxi);
  std::vector<Element> zbasis = power_basis(p);
  zbasis.push_back(ts.sc.w);
  Subspace zspan = Subspace::from_elements(p.real.alg(), zbasis);
  ts.z_basis_ok = (int(zbasis.size()) == ts.s + 1) && (zspan == z);

  // Full D over the z basis {xi, xi^3, ..., xi^{2s-1}, w}.
  int m = int(zbasis.size());
  ts.dfull = VectorMatrix(m, m, gxi);
  for (int j = 0; j < m; ++j) {
    Element col = bracket(p.triple.f, zbasis[size_t(j)]);
    for (int i = 0; i < m; ++i) ts.dfull.set_entry(i, j, bracket(col, zbasis[size_t(i)]));
  }
  // Rows for xi^{2s-1} and w live in column one only, so every determinant
  // term hits a zero: D is singular identically.
  ts.dfull_singular = true;
  for (int i : {m - 2, m - 1})
    for (int j = 1; j < m; ++j)
      for (const auto& c : ts.dfull.entry_coords(i, j))
        if (!c.is_zero()) ts.dfull_singular = false;

  // M': rows e_1..e_s, xi_2; columns e_1..e_s, w.
  std::vector<Element> rows(zbasis.begin(), zbasis.end() - 1);
  rows.push_back(ts.xi2);
  ts.mprime = VectorMatrix(m, m, gxi);
  for (int j = 0; j < m; ++j) {
    Element col = bracket(p.triple.f, zbasis[size_t(j)]);
    for (int i = 0; i < m; ++i) ts.mprime.set_entry(i, j, bracket(col, rows[size_t(i)]));
  }
  return ts;
}

}  // namespace nilorb
