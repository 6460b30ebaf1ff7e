#include "nilorb/slice.hpp"

#include <algorithm>
#include <sstream>

namespace nilorb {

bool is_nilpotent(const Element& e) {
  const LieAlgebra* g = e.algebra();
  QMatrix b = ad_matrix(e);
  long long power = 1;
  while (power < g->dim()) {
    if (b.is_zero()) return true;
    b = b.mul(b);
    power *= 2;
  }
  return b.is_zero();
}

bool triple_relations_hold(const Sl2Triple& t) {
  return bracket(t.h, t.e) == t.e.scaled(Rational(2)) &&
         bracket(t.e, t.f) == t.h &&
         bracket(t.h, t.f) == t.f.scaled(Rational(-2));
}

Sl2Triple jacobson_morozov(const Element& e) {
  const LieAlgebra* g = e.algebra();
  if (e.is_zero()) throw input_error("jacobson_morozov: e = 0");
  if (!is_nilpotent(e)) throw input_error("jacobson_morozov: e not nilpotent");

  QMatrix ade = ad_matrix(e);
  QMatrix ade2 = ade.mul(ade);
  std::vector<Rational> rhs(e.coeffs());
  for (auto& c : rhs) c *= Rational(-2);
  auto u = solve(ade2, rhs);
  if (!u) throw unsupported_error("jacobson_morozov: system inconsistent (g not semisimple?)");
  Element h = bracket(e, Element(g, *u));

  // The solution set for h is h + [e, ker (ad e)^2]; pick the Cartan
  // representative when one exists.
  if (g->cartan_indices()) {
    Subspace k2 = Subspace::from_rows(g, kernel_basis(ade2));
    Subspace w = bracket_span(e, k2);
    const auto& cart = *g->cartan_indices();
    QMatrix sys(g->dim(), w.dim() + int(cart.size()));
    for (int j = 0; j < w.dim(); ++j)
      for (int i = 0; i < g->dim(); ++i) sys.at(i, j) = w.basis().at(j, i);
    for (size_t j = 0; j < cart.size(); ++j)
      sys.at(cart[j], w.dim() + int(j)) = Rational(-1);
    std::vector<Rational> neg(h.coeffs());
    for (auto& c : neg) c = -c;
    if (auto sol = solve(sys, neg)) {
      Element hc(g);
      for (size_t j = 0; j < cart.size(); ++j) hc[cart[j]] = (*sol)[size_t(w.dim()) + j];
      h = hc;
    }
  }

  // f lies in the (-2)-eigenspace of ad h and satisfies [e, f] = h.
  Subspace v2 = eigenspace_of(h, Subspace::full(g), Rational(-2));
  if (v2.dim() == 0) throw property_violation("jacobson_morozov: empty -2 eigenspace");
  QMatrix cols(g->dim(), v2.dim());
  for (int j = 0; j < v2.dim(); ++j) {
    Element img = bracket(e, v2.basis_element(j));
    for (int i = 0; i < g->dim(); ++i) cols.at(i, j) = img[i];
  }
  auto a = solve(cols, h.coeffs());
  if (!a) throw property_violation("jacobson_morozov: no f with [e,f] = h");
  Element f(g);
  for (int j = 0; j < v2.dim(); ++j)
    if (!(*a)[size_t(j)].is_zero()) {
      Element bj = v2.basis_element(j);
      for (int i = 0; i < g->dim(); ++i) f[i] += (*a)[size_t(j)] * bj[i];
    }

  Sl2Triple t{e, h, f};
  if (!triple_relations_hold(t))
    throw property_violation("jacobson_morozov: sl2 relations failed");
  return t;
}

bool is_regular(const Sl2Triple& t) {
  const LieAlgebra* g = t.e.algebra();
  if (!g->lie_rank()) throw unsupported_error("is_regular: rank unknown");
  return centralizer(t.e).dim() == *g->lie_rank();
}

bool is_distinguished(const Sl2Triple& t) {
  const LieAlgebra* g = t.e.algebra();
  Subspace full = Subspace::full(g);
  int d0 = eigenspace_of(t.h, full, Rational(0)).dim();
  int d2 = eigenspace_of(t.h, full, Rational(2)).dim();
  return d0 == d2;
}

Subspace normalizer_of_centralizer(const Sl2Triple& t, const Subspace& gxi,
                                   const Subspace& z) {
  const LieAlgebra* g = t.e.algebra();
  // {y : [y, e] in z} contains n(g^e) by the Jacobi identity alone.
  QMatrix k = QMatrix::identity(g->dim());
  std::vector<std::vector<Rational>> images;
  images.reserve(size_t(g->dim()));
  QMatrix ade = ad_matrix(t.e);
  for (int i = 0; i < g->dim(); ++i) {
    std::vector<Rational> col(static_cast<size_t>(g->dim()));
    for (int r = 0; r < g->dim(); ++r) col[size_t(r)] = -ade.at(r, i);
    images.push_back(z.residual(col));
  }
  QMatrix m(g->dim(), g->dim());
  for (int j = 0; j < g->dim(); ++j)
    for (int i = 0; i < g->dim(); ++i) m.at(i, j) = images[size_t(j)][size_t(i)];
  Subspace p1 = Subspace::from_rows(g, kernel_basis(m));

  Subspace candidate = sum(gxi, bracket_span(t.f, z));
  if (candidate.dim() != gxi.dim() + z.dim())
    throw property_violation("normalizer: g^e + [f, z] is not direct");
  if (candidate != p1)
    throw property_violation("normalizer: {y : [y,e] in z} differs from g^e + [f,z]");
  // Direct certificate that the candidate normalizes g^e.
  for (int i = 0; i < candidate.dim(); ++i) {
    Element v = candidate.basis_element(i);
    for (int j = 0; j < gxi.dim(); ++j)
      if (!gxi.contains(bracket(v, gxi.basis_element(j))))
        throw property_violation("normalizer: candidate fails to normalize");
  }
  return candidate;
}

int WeightDecomposition::weight_index(const Rational& m) const {
  for (size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == m) return int(i);
  return -1;
}

std::vector<long long> WeightDecomposition::z_weights() const {
  std::vector<long long> out;
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t k = 0; k < zpart[i].size(); ++k) out.push_back(weights[i].to_int());
  return out;
}

Rational WeightDecomposition::top_z_weight() const {
  for (size_t i = weights.size(); i-- > 0;)
    if (!zpart[i].empty()) return weights[i];
  throw property_violation("weight_decomposition: empty center");
}

std::vector<Element> WeightDecomposition::z_first_basis() const {
  std::vector<Element> basis;
  for (const auto& blk : zpart)
    for (const auto& v : blk) basis.push_back(v);
  for (const auto& blk : cpart)
    for (const auto& v : blk) basis.push_back(v);
  return basis;
}

int WeightDecomposition::z_dim() const {
  int d = 0;
  for (const auto& blk : zpart) d += int(blk.size());
  return d;
}

WeightDecomposition weight_decomposition(const Sl2Triple& t) {
  WeightDecomposition wd{Subspace(t.e.algebra()), Subspace(t.e.algebra()), {}, {}, {}};
  wd.gxi = centralizer(t.e);
  wd.z = center_of(wd.gxi);
  auto eig = eigenspaces(t.h, wd.gxi);
  for (const auto& [m, vm] : eig) {
    wd.weights.push_back(m);
    Subspace zm = intersect(wd.z, vm);
    std::vector<Element> zb, cb;
    for (int i = 0; i < zm.dim(); ++i) zb.push_back(zm.basis_element(i));
    // Complete to a basis of the weight space, preferring earlier basis rows.
    Subspace span = zm;
    for (int i = 0; i < vm.dim() && span.dim() < vm.dim(); ++i) {
      Element cand = vm.basis_element(i);
      if (!span.contains(cand)) {
        cb.push_back(cand);
        std::vector<Element> gens;
        for (int r = 0; r < span.dim(); ++r) gens.push_back(span.basis_element(r));
        gens.push_back(cand);
        span = Subspace::from_elements(t.e.algebra(), gens);
      }
    }
    if (span != vm) throw property_violation("weight_decomposition: completion failed");
    wd.zpart.push_back(std::move(zb));
    wd.cpart.push_back(std::move(cb));
  }
  return wd;
}

std::string OrbitSpec::key() const {
  return std::string(1, type) + std::to_string(rank) + ":" + label;
}

OrbitReport orbit_report(const std::string& key, const ChevalleyBasis& cb,
                         const Sl2Triple& t) {
  OrbitReport r;
  r.orbit = key;
  r.algebra = std::string(1, cb.roots.type) + std::to_string(cb.roots.rank);
  WeightDecomposition wd = weight_decomposition(t);
  r.dim_gxi = wd.gxi.dim();
  r.dim_z = wd.z.dim();
  Subspace n = normalizer_of_centralizer(t, wd.gxi, wd.z);
  r.dim_n = n.dim();
  if (r.dim_n != r.dim_gxi + r.dim_z)
    throw property_violation("orbit_report: dim n != dim g^e + dim z");
  r.weights = wd.z_weights();
  r.characteristic = weighted_dynkin(cb, t.h);
  r.regular = is_regular(t);
  r.distinguished = is_distinguished(t);
  return r;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

std::vector<OrbitSpec> parse_catalog(const std::string& text) {
  std::vector<OrbitSpec> specs;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool open = false;
  OrbitSpec cur;
  auto fail = [&](const std::string& msg) {
    throw data_error("catalog line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto words = split_ws(line);
    if (words.empty()) continue;
    if (words[0] == "orbit") {
      if (open) fail("missing 'end' before new orbit");
      if (words.size() < 3) fail("orbit needs a type and a label");
      const std::string& tr = words[1];
      if (tr.size() < 2) fail("bad algebra type");
      cur = OrbitSpec{};
      cur.type = tr[0];
      cur.rank = std::stoi(tr.substr(1));
      if (!simple_type_valid(cur.type, cur.rank)) fail("invalid simple type " + tr);
      std::string label = line.substr(line.find('"'));
      if (label.size() < 2 || label.front() != '"' || label.back() != '"')
        fail("label must be quoted");
      cur.label = label.substr(1, label.size() - 2);
      open = true;
    } else if (words[0] == "char") {
      if (!open) fail("'char' outside orbit block");
      if (int(words.size()) - 1 != cur.rank) fail("characteristic length != rank");
      for (size_t i = 1; i < words.size(); ++i)
        cur.characteristic.push_back(std::stoll(words[i]));
    } else if (words[0] == "e") {
      if (!open) fail("'e' outside orbit block");
      if (words.size() < 3 || words[1] != "+") fail("expected 'e + <c1,...,cl>'");
      std::vector<int> root;
      std::string tok = words[2];
      std::istringstream ts(tok);
      std::string piece;
      while (std::getline(ts, piece, ',')) root.push_back(std::stoi(piece));
      if (int(root.size()) != cur.rank) fail("root vector length != rank");
      Rational coeff(1);
      if (words.size() >= 5 && words[3] == "*") coeff = Rational::from_string(words[4]);
      else if (words.size() != 3) fail("trailing tokens after root vector");
      cur.e_terms.push_back({std::move(root), coeff});
    } else if (words[0] == "end") {
      if (!open) fail("'end' outside orbit block");
      if (cur.characteristic.empty()) fail("orbit without characteristic");
      if (cur.e_terms.empty()) fail("orbit without e terms");
      specs.push_back(cur);
      open = false;
    } else {
      fail("unknown directive '" + words[0] + "'");
    }
  }
  if (open) fail("unterminated orbit block");
  return specs;
}

std::vector<LoadedOrbit> load_catalog(const std::string& text) {
  std::vector<OrbitSpec> specs = parse_catalog(text);
  std::map<std::pair<char, int>, std::shared_ptr<ChevalleyBasis>> algebras;
  std::vector<LoadedOrbit> out;
  for (auto& spec : specs) {
    auto k = std::make_pair(spec.type, spec.rank);
    auto it = algebras.find(k);
    if (it == algebras.end())
      it = algebras.emplace(k, std::make_shared<ChevalleyBasis>(
                                   build_simple(spec.type, spec.rank))).first;
    const ChevalleyBasis& cb = *it->second;
    Element e(cb.alg());
    for (const auto& [root, coeff] : spec.e_terms) {
      int idx = cb.roots.index_of(root);
      if (idx < 0)
        throw data_error("catalog orbit " + spec.key() + ": not a positive root");
      e[cb.x[size_t(idx)]] += coeff;
    }
    Sl2Triple t = jacobson_morozov(e);
    std::vector<long long> ch = weighted_dynkin(cb, t.h);
    if (ch != spec.characteristic)
      throw data_error("catalog orbit " + spec.key() +
                       ": characteristic mismatch (orbit data is corrupt)");
    out.push_back(LoadedOrbit{std::move(spec), it->second, std::move(t)});
  }
  return out;
}

std::string serialize_catalog(const std::vector<OrbitSpec>& specs) {
  std::ostringstream os;
  for (const auto& s : specs) {
    os << "orbit " << s.type << s.rank << " \"" << s.label << "\"\n";
    os << "char";
    for (long long v : s.characteristic) os << " " << v;
    os << "\n";
    for (const auto& [root, coeff] : s.e_terms) {
      os << "e + ";
      for (size_t i = 0; i < root.size(); ++i) os << (i ? "," : "") << root[i];
      if (!coeff.is_one()) os << " * " << coeff.str();
      os << "\n";
    }
    os << "end\n\n";
  }
  return os.str();
}

}  // namespace nilorb
