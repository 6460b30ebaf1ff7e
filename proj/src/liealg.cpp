#include "nilorb/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "nilorb/poly.hpp"
#include "nilorb/rng.hpp"

namespace nilorb {

namespace {

// Accumulates sparse bracket contributions into a dense scratch vector.
void accumulate_bracket(const LieAlgebra& alg, const std::vector<Rational>& x,
                        const std::vector<Rational>& y, std::vector<Rational>& out) {
  int n = alg.dim();
  for (int i = 0; i < n; ++i) {
    if (x[size_t(i)].is_zero()) continue;
    const Rational& xi = x[size_t(i)];
    for (int j = 0; j < n; ++j) {
      if (y[size_t(j)].is_zero()) continue;
      const auto& terms = alg.sc(i, j);
      if (terms.empty()) continue;
      Rational f = xi * y[size_t(j)];
      for (const auto& t : terms) out[size_t(t.k)] += f * t.c;
    }
  }
}

}  // namespace

LieAlgebraBuilder::LieAlgebraBuilder(int dim, std::vector<std::string> labels) {
  if (dim <= 0 || int(labels.size()) != dim)
    throw input_error("LieAlgebraBuilder: bad dimension or labels");
  alg_ = std::make_shared<LieAlgebra>();
  alg_->dim_ = dim;
  alg_->labels_ = std::move(labels);
  alg_->table_.assign(size_t(dim) * dim, {});
  assigned_.assign(size_t(dim) * dim, 0);
}

void LieAlgebraBuilder::set_bracket(int i, int j, LieAlgebra::Sc terms) {
  int n = alg_->dim_;
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw input_error("set_bracket: bad basis pair");
  for (const auto& t : terms)
    if (t.k < 0 || t.k >= n) throw input_error("set_bracket: bad target index");
  LieAlgebra::Sc neg;
  neg.reserve(terms.size());
  for (const auto& t : terms) neg.push_back({t.k, -t.c});
  alg_->table_[size_t(i) * n + j] = std::move(terms);
  alg_->table_[size_t(j) * n + i] = std::move(neg);
  assigned_[size_t(i) * n + j] = assigned_[size_t(j) * n + i] = 1;
}

void LieAlgebraBuilder::set_cartan(std::vector<int> indices) {
  alg_->cartan_ = std::move(indices);
}

void LieAlgebraBuilder::set_rank(int rank) { alg_->lie_rank_ = rank; }

LieAlgebraPtr LieAlgebraBuilder::build() { return alg_; }

const QMatrix& LieAlgebra::killing_gram() const {
  std::call_once(gram_once_, [this]() {
    int n = dim_;
    auto g = std::make_unique<QMatrix>(n, n);
    // tr(ad b_i ad b_j) = sum_l sum_{(k,c) in [b_i,b_l]} c * coeff_l([b_j,b_k])
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Rational tr(0);
        for (int l = 0; l < n; ++l) {
          for (const auto& t : sc(i, l)) {
            for (const auto& u : sc(j, t.k)) {
              if (u.k == l) {
                tr += t.c * u.c;
                break;
              }
            }
          }
        }
        g->at(i, j) = tr;
        g->at(j, i) = tr;
      }
    }
    gram_nondeg_ = (rank(*g) == n);
    gram_ = std::move(g);
  });
  return *gram_;
}

bool LieAlgebra::killing_nondegenerate() const {
  killing_gram();
  return gram_nondeg_;
}

bool LieAlgebra::jacobi_triple_ok(int i, int j, int k) const {
  // [[bi,bj],bk] + [[bj,bk],bi] + [[bk,bi],bj] accumulated sparsely.
  std::vector<std::pair<int, Rational>> acc;
  auto add = [&](int a, int b, int c) {
    for (const auto& t : sc(a, b))
      for (const auto& u : sc(t.k, c)) acc.push_back({u.k, t.c * u.c});
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t p = 0;
  while (p < acc.size()) {
    size_t q = p;
    Rational s(0);
    while (q < acc.size() && acc[q].first == acc[p].first) s += acc[q++].second;
    if (!s.is_zero()) return false;
    p = q;
  }
  return true;
}

bool LieAlgebra::jacobi_holds_exhaustive() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k)
        if (!jacobi_triple_ok(i, j, k)) return false;
  return true;
}

bool LieAlgebra::jacobi_holds_sampled(long long samples, std::uint64_t seed) const {
  Rng rng(seed);
  for (long long s = 0; s < samples; ++s) {
    int i = int(rng.uniform_int(0, dim_ - 1));
    int j = int(rng.uniform_int(0, dim_ - 1));
    int k = int(rng.uniform_int(0, dim_ - 1));
    if (i == j || j == k || i == k) continue;
    if (!jacobi_triple_ok(i, j, k)) return false;
  }
  return true;
}

Element::Element(const LieAlgebra* alg, std::vector<Rational> coeffs)
    : alg_(alg), c_(std::move(coeffs)) {
  if (!alg_ || int(c_.size()) != alg_->dim())
    throw input_error("Element: coefficient length mismatch");
}

bool Element::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Element Element::operator+(const Element& o) const {
  if (alg_ != o.alg_) throw input_error("Element: parent mismatch");
  Element r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Element Element::operator-(const Element& o) const {
  if (alg_ != o.alg_) throw input_error("Element: parent mismatch");
  Element r(*this);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Element Element::scaled(const Rational& f) const {
  Element r(*this);
  for (auto& x : r.c_) x *= f;
  return r;
}

std::string Element::str() const {
  if (!alg_) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg_->dim(); ++i) {
    if (c_[size_t(i)].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c_[size_t(i)].is_one()) os << "(" << c_[size_t(i)] << ")*";
    os << alg_->label(i);
  }
  return first ? "0" : os.str();
}

Element bracket(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra() || !x.algebra())
    throw input_error("bracket: parent mismatch");
  Element r(x.algebra());
  std::vector<Rational> out(size_t(x.algebra()->dim()));
  accumulate_bracket(*x.algebra(), x.coeffs(), y.coeffs(), out);
  return Element(x.algebra(), std::move(out));
}

QMatrix ad_matrix(const Element& x) {
  const LieAlgebra& alg = *x.algebra();
  int n = alg.dim();
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& t : alg.sc(i, j)) m.at(t.k, j) += x[i] * t.c;
  }
  return m;
}

Rational killing(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra() || !x.algebra())
    throw input_error("killing: parent mismatch");
  const QMatrix& g = x.algebra()->killing_gram();
  Rational acc(0);
  int n = x.algebra()->dim();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!y[j].is_zero() && !g.at(i, j).is_zero()) acc += x[i] * g.at(i, j) * y[j];
  }
  return acc;
}

Subspace Subspace::full(const LieAlgebra* alg) {
  return from_rows(alg, QMatrix::identity(alg->dim()));
}

Subspace Subspace::from_elements(const LieAlgebra* alg, const std::vector<Element>& gens) {
  QMatrix m(int(gens.size()), alg->dim());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].algebra() != alg) throw input_error("Subspace: parent mismatch");
    m.set_row(int(i), gens[i].coeffs());
  }
  return from_rows(alg, std::move(m));
}

Subspace Subspace::from_rows(const LieAlgebra* alg, QMatrix rows) {
  Subspace s(alg);
  std::vector<int> piv = rref_in_place(rows);
  QMatrix b(int(piv.size()), alg->dim());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < alg->dim(); ++j) b.at(i, j) = rows.at(i, j);
  s.basis_ = std::move(b);
  s.pivots_ = std::move(piv);
  return s;
}

Element Subspace::basis_element(int i) const {
  return Element(alg_, basis_.row(i));
}

std::vector<Rational> Subspace::residual(const std::vector<Rational>& v) const {
  std::vector<Rational> r = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    const Rational f = r[size_t(pivots_[size_t(i)])];
    if (f.is_zero()) continue;
    for (int j = 0; j < basis_.cols(); ++j)
      if (!basis_.at(i, j).is_zero()) r[size_t(j)] -= f * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Element& v) const {
  if (v.algebra() != alg_) throw input_error("Subspace: parent mismatch");
  auto r = residual(v.coeffs());
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& s) const {
  if (s.alg_ != alg_) throw input_error("Subspace: parent mismatch");
  for (int i = 0; i < s.dim(); ++i)
    if (!contains(s.basis_element(i))) return false;
  return true;
}

std::vector<Rational> Subspace::coords(const Element& v) const {
  if (v.algebra() != alg_) throw input_error("Subspace: parent mismatch");
  std::vector<Rational> r = v.coeffs();
  std::vector<Rational> c(static_cast<size_t>(basis_.rows()));
  for (int i = 0; i < basis_.rows(); ++i) {
    const Rational f = r[size_t(pivots_[size_t(i)])];
    c[size_t(i)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j < basis_.cols(); ++j)
      if (!basis_.at(i, j).is_zero()) r[size_t(j)] -= f * basis_.at(i, j);
  }
  for (const auto& x : r)
    if (!x.is_zero()) throw input_error("Subspace::coords: not a member");
  return c;
}

Element Subspace::from_coords(const std::vector<Rational>& c) const {
  if (int(c.size()) != dim()) throw input_error("from_coords: length mismatch");
  Element v(alg_);
  for (int i = 0; i < dim(); ++i)
    if (!c[size_t(i)].is_zero())
      for (int j = 0; j < basis_.cols(); ++j)
        if (!basis_.at(i, j).is_zero()) v[j] += c[size_t(i)] * basis_.at(i, j);
  return v;
}

bool Subspace::is_subalgebra() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      if (!contains(bracket(basis_element(i), basis_element(j)))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.algebra() != b.algebra()) throw input_error("sum: parent mismatch");
  return Subspace::from_rows(a.algebra(), vstack({a.basis(), b.basis()}));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.algebra() != b.algebra()) throw input_error("intersect: parent mismatch");
  int p = a.dim(), q = b.dim(), n = a.algebra()->dim();
  if (p == 0 || q == 0) return Subspace(a.algebra());
  // Columns are the basis vectors of a followed by those of b; kernel rows
  // (u, w) satisfy u*A = -w*B, so u*A spans the intersection.
  QMatrix m(n, p + q);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = a.basis().at(j, i);
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < n; ++i) m.at(i, p + j) = b.basis().at(j, i);
  QMatrix ker = kernel_basis(m);
  QMatrix rows(ker.rows(), n);
  for (int r = 0; r < ker.rows(); ++r)
    for (int j = 0; j < p; ++j)
      if (!ker.at(r, j).is_zero())
        for (int i = 0; i < n; ++i)
          if (!a.basis().at(j, i).is_zero())
            rows.at(r, i) += ker.at(r, j) * a.basis().at(j, i);
  return Subspace::from_rows(a.algebra(), std::move(rows));
}

Subspace bracket_span(const Element& x, const Subspace& s) {
  std::vector<Element> gens;
  gens.reserve(size_t(s.dim()));
  for (int i = 0; i < s.dim(); ++i) gens.push_back(bracket(x, s.basis_element(i)));
  return Subspace::from_elements(s.algebra(), gens);
}

Subspace bracket_span(const Subspace& a, const Subspace& b) {
  if (a.algebra() != b.algebra()) throw input_error("bracket_span: parent mismatch");
  std::vector<Element> gens;
  gens.reserve(size_t(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    Element ai = a.basis_element(i);
    for (int j = 0; j < b.dim(); ++j) gens.push_back(bracket(ai, b.basis_element(j)));
  }
  return Subspace::from_elements(a.algebra(), gens);
}

Subspace centralizer(const Element& x) {
  return Subspace::from_rows(x.algebra(), kernel_basis(ad_matrix(x)));
}

namespace {

// Restricts a running basis K to the kernel of a linear map given by its
// values on the rows of K.
QMatrix restrict_to_kernel(const QMatrix& k, const std::vector<std::vector<Rational>>& images) {
  if (k.rows() == 0) return k;
  size_t imdim = images[0].size();
  QMatrix m(int(imdim), k.rows());
  for (int j = 0; j < k.rows(); ++j)
    for (size_t i = 0; i < imdim; ++i) m.at(int(i), j) = images[size_t(j)][i];
  QMatrix ker = kernel_basis(m);
  return ker.mul(k);
}

}  // namespace

Subspace center_of(const Subspace& s) {
  if (!s.is_subalgebra()) throw input_error("center_of: not a subalgebra");
  const LieAlgebra* alg = s.algebra();
  QMatrix k = s.basis();
  for (int j = 0; j < s.dim() && k.rows() > 0; ++j) {
    Element sj = s.basis_element(j);
    std::vector<std::vector<Rational>> images;
    images.reserve(size_t(k.rows()));
    for (int i = 0; i < k.rows(); ++i)
      images.push_back(bracket(Element(alg, k.row(i)), sj).coeffs());
    k = restrict_to_kernel(k, images);
  }
  return Subspace::from_rows(alg, std::move(k));
}

Subspace normalizer(const Subspace& s) {
  const LieAlgebra* alg = s.algebra();
  QMatrix k = QMatrix::identity(alg->dim());
  for (int j = 0; j < s.dim() && k.rows() > 0; ++j) {
    Element sj = s.basis_element(j);
    std::vector<std::vector<Rational>> images;
    images.reserve(size_t(k.rows()));
    for (int i = 0; i < k.rows(); ++i)
      images.push_back(s.residual(bracket(Element(alg, k.row(i)), sj).coeffs()));
    k = restrict_to_kernel(k, images);
  }
  return Subspace::from_rows(alg, std::move(k));
}

Subspace orthogonal(const Subspace& s) {
  const LieAlgebra* alg = s.algebra();
  if (!alg->killing_nondegenerate())
    throw unsupported_error("orthogonal: degenerate Killing form");
  QMatrix m = s.basis().mul(alg->killing_gram());
  return Subspace::from_rows(alg, kernel_basis(m));
}

Subspace eigenspace_of(const Element& x, const Subspace& s, const Rational& lambda) {
  const LieAlgebra* alg = x.algebra();
  QMatrix k = s.basis();
  std::vector<std::vector<Rational>> images;
  images.reserve(size_t(k.rows()));
  for (int i = 0; i < k.rows(); ++i) {
    Element v(alg, k.row(i));
    Element w = bracket(x, v) - v.scaled(lambda);
    images.push_back(w.coeffs());
  }
  return Subspace::from_rows(alg, restrict_to_kernel(k, images));
}

namespace {

// Minimal polynomial of a square rational matrix via Krylov subspaces.
UPoly matrix_min_poly(const QMatrix& t) {
  int n = t.rows();
  UPoly m{Rational(1)};
  for (int seed = 0; seed < n; ++seed) {
    std::vector<Rational> v(static_cast<size_t>(n));
    v[size_t(seed)] = Rational(1);
    // Skip seeds already annihilated by the current candidate.
    {
      std::vector<Rational> acc(static_cast<size_t>(n));
      std::vector<Rational> pw = v;
      for (size_t d = 0; d < m.size(); ++d) {
        if (!m[d].is_zero())
          for (int i = 0; i < n; ++i) acc[size_t(i)] += m[d] * pw[size_t(i)];
        if (d + 1 < m.size()) pw = t.apply(pw);
      }
      bool zero = true;
      for (const auto& c : acc)
        if (!c.is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;
    }
    // Krylov sequence v, Tv, ... until dependence.
    std::vector<std::vector<Rational>> krylov{v};
    UPoly mv;
    while (true) {
      std::vector<Rational> next = t.apply(krylov.back());
      QMatrix cols(n, int(krylov.size()));
      for (size_t j = 0; j < krylov.size(); ++j)
        for (int i = 0; i < n; ++i) cols.at(i, int(j)) = krylov[j][size_t(i)];
      auto sol = solve(cols, next);
      if (sol) {
        mv.assign(krylov.size() + 1, Rational(0));
        mv.back() = Rational(1);
        for (size_t j = 0; j < krylov.size(); ++j) mv[j] = -(*sol)[j];
        break;
      }
      krylov.push_back(std::move(next));
    }
    m = upoly_lcm(m, mv);
    if (upoly_deg(m) == n) break;
  }
  return m;
}

}  // namespace

std::vector<std::pair<Rational, Subspace>> eigenspaces(const Element& x, const Subspace& s) {
  const LieAlgebra* alg = x.algebra();
  if (s.algebra() != alg) throw input_error("eigenspaces: parent mismatch");
  int k = s.dim();
  std::vector<std::pair<Rational, Subspace>> out;
  if (k == 0) return out;

  // Restriction of ad(x) in the coordinates of s; also checks invariance.
  QMatrix t(k, k);
  bool diagonal = true;
  for (int i = 0; i < k; ++i) {
    Element w = bracket(x, s.basis_element(i));
    std::vector<Rational> c;
    try {
      c = s.coords(w);
    } catch (const input_error&) {
      throw input_error("eigenspaces: subspace not ad-invariant");
    }
    for (int r = 0; r < k; ++r) {
      t.at(r, i) = c[size_t(r)];
      if (r != i && !c[size_t(r)].is_zero()) diagonal = false;
    }
  }

  std::vector<Rational> eigenvalues;
  long long bound = 2LL * alg->dim();
  if (diagonal) {
    for (int i = 0; i < k; ++i) {
      const Rational& ev = t.at(i, i);
      if (std::find(eigenvalues.begin(), eigenvalues.end(), ev) == eigenvalues.end())
        eigenvalues.push_back(ev);
    }
  } else {
    UPoly m = matrix_min_poly(t);
    UPoly d = upoly_derivative(m);
    if (upoly_deg(upoly_gcd(m, d)) > 0)
      throw unsupported_error("eigenspaces: restriction not diagonalizable");
    for (long long lam = -bound; lam <= bound; ++lam)
      if (upoly_eval(m, Rational(lam)).is_zero()) eigenvalues.push_back(Rational(lam));
    if (int(eigenvalues.size()) != upoly_deg(m))
      throw unsupported_error("eigenspaces: spectrum not integral in range");
  }
  for (const auto& ev : eigenvalues) {
    if (!ev.is_integer() || ev.abs() > Rational(bound))
      throw unsupported_error("eigenspaces: spectrum not integral in range");
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());

  int total = 0;
  for (const auto& ev : eigenvalues) {
    Subspace es = eigenspace_of(x, s, ev);
    total += es.dim();
    out.push_back({ev, std::move(es)});
  }
  if (total != k) throw unsupported_error("eigenspaces: restriction not diagonalizable");
  return out;
}

}  // namespace nilorb
