#include "nilorb/chevalley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nilorb {

int RootSystem::height(int idx) const {
  const auto& r = positive[size_t(idx)];
  return std::accumulate(r.begin(), r.end(), 0);
}

int RootSystem::index_of(const std::vector<int>& v) const {
  auto it = index_map.find(v);
  return it == index_map.end() ? -1 : it->second;
}

bool RootSystem::is_root(const std::vector<int>& v) const {
  if (index_map.count(v)) return true;
  std::vector<int> neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return index_map.count(neg) != 0;
}

long long RootSystem::norm2(const std::vector<int>& beta) const {
  // (alpha_i, alpha_j) = dnorm[j] * cartan[i][j]
  long long acc = 0;
  for (int i = 0; i < rank; ++i) {
    if (beta[size_t(i)] == 0) continue;
    for (int j = 0; j < rank; ++j)
      acc += (long long)beta[size_t(i)] * beta[size_t(j)] * dnorm[size_t(j)] *
             cartan[size_t(i)][size_t(j)];
  }
  return acc;
}

long long RootSystem::pairing(const std::vector<int>& beta, int i) const {
  long long acc = 0;
  for (int j = 0; j < rank; ++j)
    acc += (long long)beta[size_t(j)] * cartan[size_t(j)][size_t(i)];
  return acc;
}

bool simple_type_valid(char type, int rank) {
  switch (type) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 3;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace {

void make_cartan(char type, int l, std::vector<std::vector<int>>& a, std::vector<int>& d) {
  a.assign(size_t(l), std::vector<int>(size_t(l), 0));
  d.assign(size_t(l), 1);
  for (int i = 0; i < l; ++i) a[size_t(i)][size_t(i)] = 2;
  auto link = [&](int i, int j) { a[size_t(i)][size_t(j)] = a[size_t(j)][size_t(i)] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      a[size_t(l - 2)][size_t(l - 1)] = -2;
      a[size_t(l - 1)][size_t(l - 2)] = -1;
      for (int i = 0; i + 1 < l; ++i) d[size_t(i)] = 2;
      break;
    case 'C':
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      a[size_t(l - 2)][size_t(l - 1)] = -1;
      a[size_t(l - 1)][size_t(l - 2)] = -2;
      d[size_t(l - 1)] = 2;
      break;
    case 'D':
      for (int i = 0; i + 3 < l; ++i) link(i, i + 1);
      link(l - 3, l - 2);
      link(l - 3, l - 1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      link(0, 2);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':
      link(0, 1);
      a[1][2] = -2;
      a[2][1] = -1;
      link(2, 3);
      d[0] = d[1] = 2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      d[1] = 3;
      break;
  }
}

RootSystem make_roots(char type, int l) {
  RootSystem rs;
  rs.type = type;
  rs.rank = l;
  make_cartan(type, l, rs.cartan, rs.dnorm);

  std::vector<std::vector<int>> level;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(size_t(l), 0);
    e[size_t(i)] = 1;
    level.push_back(e);
  }
  auto push_level = [&](std::vector<std::vector<int>>& lv) {
    std::sort(lv.begin(), lv.end(), std::greater<>());
    for (auto& r : lv) {
      rs.index_map[r] = int(rs.positive.size());
      rs.positive.push_back(r);
    }
  };
  push_level(level);

  while (!level.empty()) {
    std::set<std::vector<int>> nxt;
    for (const auto& beta : level) {
      for (int i = 0; i < l; ++i) {
        // String through beta in direction alpha_i: q = p - <beta, alpha_i^v>.
        long long pair = rs.pairing(beta, i);
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[size_t(i)] -= 1;
          if (!rs.is_root(down)) break;
          ++p;
        }
        if (p - pair >= 1) {
          std::vector<int> up = beta;
          up[size_t(i)] += 1;
          nxt.insert(up);
        }
      }
    }
    level.assign(nxt.begin(), nxt.end());
    push_level(level);
  }
  return rs;
}

// Structure constant machinery: N[a][b] for positive roots with a + b a root,
// signs fixed by choosing N > 0 on extraspecial pairs.
class NTable {
public:
  explicit NTable(const RootSystem& rs) : rs_(rs) {
    int n = rs.num_positive();
    table_.assign(size_t(n) * n, 0);
    // Process sums by increasing index (so by increasing height).
    for (int g = 0; g < n; ++g) {
      const auto& gamma = rs_.positive[size_t(g)];
      if (rs_.height(g) < 2) continue;
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < n; ++a) {
        std::vector<int> rest(static_cast<size_t>(rs_.rank));
        bool ok = true;
        for (int i = 0; i < rs_.rank; ++i) {
          rest[size_t(i)] = gamma[size_t(i)] - rs_.positive[size_t(a)][size_t(i)];
          if (rest[size_t(i)] < 0) ok = false;
        }
        if (!ok) continue;
        int b = rs_.index_of(rest);
        if (b > a) pairs.push_back({a, b});
      }
      if (pairs.empty()) continue;
      int eps = pairs[0].first, eta = pairs[0].second;
      table_[size_t(eps) * n + eta] = string_p(eta, eps) + 1;
      for (size_t pi = 1; pi < pairs.size(); ++pi) {
        auto [a, b] = pairs[pi];
        // Jacobi on (x_eps, x_{-a}, x_{-b}):
        //   N(a,b) N(-gamma,eps) = N(eps,-a) N(eps-a,-b) - N(eps,-b) N(eps-b,-a)
        // with N(-gamma,eps) = N(eps,eta) (eta,eta)/(gamma,gamma).
        Rational t1 = cross(eps, a, b);
        Rational t2 = cross(eps, b, a);
        Rational ngamma(rs_.norm2(gamma));
        Rational neta(rs_.norm2(rs_.positive[size_t(eta)]));
        Rational val = (t1 - t2) * ngamma /
                       (neta * Rational((long long)table_[size_t(eps) * n + eta]));
        if (!val.is_integer() || val.is_zero())
          throw property_violation("chevalley: bad structure constant");
        table_[size_t(a) * n + b] = val.to_int();
      }
    }
  }

  /// N for a pair of positive roots; zero when the sum is not a root.
  long long pos(int a, int b) const {
    if (a == b) return 0;
    if (a > b) return -pos(b, a);
    return table_[size_t(a) * rs_.num_positive() + b];
  }

  /// N for signed roots (sign, positive index); sum must be a root.
  Rational signedN(bool apos, int a, bool bpos, int b) const {
    if (apos && bpos) return Rational(pos(a, b));
    if (!apos && !bpos) return -Rational(pos(a, b));
    if (!apos) return -signedN(bpos, b, apos, a);
    // a positive, b negative: sum = r_a - r_b.
    std::vector<int> s = diff(a, b);
    int sp = rs_.index_of(s);
    if (sp >= 0) {
      // (s,s)/(a,a) * -N(b, s), with r_b + r_s = r_a
      return Rational(-rs_.norm2(s)) * Rational(pos(b, sp)) /
             Rational(rs_.norm2(rs_.positive[size_t(a)]));
    }
    std::vector<int> sneg(s.size());
    for (size_t i = 0; i < s.size(); ++i) sneg[i] = -s[i];
    int sn = rs_.index_of(sneg);
    if (sn < 0) throw property_violation("signedN: sum is not a root");
    // (s',s')/(b,b) * N(s', a), with r_s' + r_a = r_b
    return Rational(rs_.norm2(sneg)) * Rational(pos(sn, a)) /
           Rational(rs_.norm2(rs_.positive[size_t(b)]));
  }

private:
  const RootSystem& rs_;
  std::vector<long long> table_;

  std::vector<int> diff(int a, int b) const {
    std::vector<int> v(static_cast<size_t>(rs_.rank));
    for (int i = 0; i < rs_.rank; ++i)
      v[size_t(i)] = rs_.positive[size_t(a)][size_t(i)] - rs_.positive[size_t(b)][size_t(i)];
    return v;
  }

  // Largest p with (root of index hi) - p * (root of index lo) still a root.
  long long string_p(int hi, int lo) const {
    std::vector<int> v = rs_.positive[size_t(hi)];
    long long p = 0;
    while (true) {
      for (int i = 0; i < rs_.rank; ++i) v[size_t(i)] -= rs_.positive[size_t(lo)][size_t(i)];
      bool zero = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
      if (zero || !rs_.is_root(v)) break;
      ++p;
    }
    return p;
  }

  // One Jacobi cross term: N(eps, -a) * N(eps - a, -b), zero when eps - a is
  // not a root.
  Rational cross(int eps, int a, int b) const {
    std::vector<int> d = diff(eps, a);
    int dp = rs_.index_of(d);
    std::vector<int> dn(d.size());
    for (size_t i = 0; i < d.size(); ++i) dn[i] = -d[i];
    int dnidx = rs_.index_of(dn);
    if (dp < 0 && dnidx < 0) return Rational(0);
    Rational n1 = signedN(true, eps, false, a);
    Rational n2 = dp >= 0 ? signedN(true, dp, false, b) : signedN(false, dnidx, false, b);
    return n1 * n2;
  }
};

std::vector<int> diagram_node_order(char type, int l) {
  std::vector<int> ord(static_cast<size_t>(l));
  std::iota(ord.begin(), ord.end(), 0);
  if (type == 'E') {
    ord.clear();
    ord.push_back(0);
    for (int i = 2; i < l; ++i) ord.push_back(i);
    ord.push_back(1);
  }
  return ord;
}

}  // namespace

ChevalleyBasis build_simple(char type, int rank) {
  if (!simple_type_valid(type, rank))
    throw input_error(std::string("build_simple: invalid type ") + type +
                      std::to_string(rank));
  ChevalleyBasis cb;
  cb.roots = make_roots(type, rank);
  const RootSystem& rs = cb.roots;
  int N = rs.num_positive(), l = rank;
  int dim = 2 * N + l;

  std::vector<std::string> labels(static_cast<size_t>(dim));
  cb.x.resize(size_t(N));
  cb.y.resize(size_t(N));
  cb.h.resize(size_t(l));
  for (int i = 0; i < N; ++i) {
    cb.x[size_t(i)] = i;
    cb.y[size_t(i)] = N + i;
    labels[size_t(i)] = "x" + std::to_string(i + 1);
    labels[size_t(N + i)] = "y" + std::to_string(i + 1);
  }
  for (int j = 0; j < l; ++j) {
    cb.h[size_t(j)] = 2 * N + j;
    labels[size_t(2 * N + j)] = "h" + std::to_string(j + 1);
  }

  NTable nt(rs);
  LieAlgebraBuilder bld(dim, std::move(labels));

  auto root_sum_index = [&](int a, int b) {
    std::vector<int> v(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i)
      v[size_t(i)] = rs.positive[size_t(a)][size_t(i)] + rs.positive[size_t(b)][size_t(i)];
    return rs.index_of(v);
  };

  for (int a = 0; a < N; ++a) {
    for (int b = a + 1; b < N; ++b) {
      int g = root_sum_index(a, b);
      if (g >= 0) {
        long long n = nt.pos(a, b);
        bld.set_bracket(a, b, {{g, Rational(n)}});
        bld.set_bracket(N + a, N + b, {{N + g, Rational(-n)}});
      }
    }
  }
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      if (a == b) {
        // [x_a, y_a] = coroot of r_a expanded over the simple coroots.
        LieAlgebra::Sc terms;
        long long na = rs.norm2(rs.positive[size_t(a)]);
        for (int j = 0; j < l; ++j) {
          long long c = rs.positive[size_t(a)][size_t(j)];
          if (c == 0) continue;
          Rational coeff = Rational(c) * Rational(2 * rs.dnorm[size_t(j)]) / Rational(na);
          if (!coeff.is_integer())
            throw property_violation("chevalley: non-integral coroot");
          terms.push_back({2 * N + j, coeff});
        }
        bld.set_bracket(a, N + a, std::move(terms));
        continue;
      }
      std::vector<int> v(static_cast<size_t>(l));
      for (int i = 0; i < l; ++i)
        v[size_t(i)] = rs.positive[size_t(a)][size_t(i)] - rs.positive[size_t(b)][size_t(i)];
      int vp = rs.index_of(v);
      std::vector<int> vn(v.size());
      for (size_t i = 0; i < v.size(); ++i) vn[i] = -v[i];
      int vnp = rs.index_of(vn);
      if (vp < 0 && vnp < 0) continue;
      Rational c = nt.signedN(true, a, false, b);
      if (!c.is_integer()) throw property_violation("chevalley: non-integral constant");
      int target = vp >= 0 ? vp : N + vnp;
      bld.set_bracket(a, N + b, {{target, c}});
    }
  }
  for (int j = 0; j < l; ++j) {
    for (int a = 0; a < N; ++a) {
      long long pr = rs.pairing(rs.positive[size_t(a)], j);
      if (pr != 0) {
        bld.set_bracket(a, 2 * N + j, {{a, Rational(-pr)}});
        bld.set_bracket(N + a, 2 * N + j, {{N + a, Rational(pr)}});
      }
    }
  }

  std::vector<int> cart(static_cast<size_t>(l));
  std::iota(cart.begin(), cart.end(), 2 * N);
  bld.set_cartan(std::move(cart));
  bld.set_rank(l);
  cb.algebra = bld.build();
  cb.diagram_order = diagram_node_order(type, rank);
  return cb;
}

Element element_from_combination(const ChevalleyBasis& cb,
                                 const std::vector<CombinationTerm>& terms) {
  Element v(cb.alg());
  int N = cb.roots.num_positive(), l = cb.roots.rank;
  for (const auto& t : terms) {
    int idx;
    switch (t.kind) {
      case 'x':
        if (t.index < 1 || t.index > N) throw input_error("combination: x index out of range");
        idx = cb.x[size_t(t.index - 1)];
        break;
      case 'y':
        if (t.index < 1 || t.index > N) throw input_error("combination: y index out of range");
        idx = cb.y[size_t(t.index - 1)];
        break;
      case 'h':
        if (t.index < 1 || t.index > l) throw input_error("combination: h index out of range");
        idx = cb.h[size_t(t.index - 1)];
        break;
      default:
        throw input_error("combination: kind must be x, y or h");
    }
    v[idx] += t.coeff;
  }
  return v;
}

std::vector<long long> weighted_dynkin(const ChevalleyBasis& cb, const Element& hElem) {
  if (hElem.algebra() != cb.alg()) throw input_error("weighted_dynkin: parent mismatch");
  int N = cb.roots.num_positive(), l = cb.roots.rank;
  for (int i = 0; i < 2 * N; ++i)
    if (!hElem[i].is_zero()) throw input_error("weighted_dynkin: h outside Cartan");
  std::vector<long long> vals(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) {
    Rational v(0);
    for (int j = 0; j < l; ++j)
      v += hElem[2 * N + j] * Rational((long long)cb.roots.cartan[size_t(i)][size_t(j)]);
    if (!v.is_integer()) throw unsupported_error("weighted_dynkin: non-integer value");
    vals[size_t(i)] = v.to_int();
  }
  std::vector<long long> out(static_cast<size_t>(l));
  for (int p = 0; p < l; ++p) out[size_t(p)] = vals[size_t(cb.diagram_order[size_t(p)])];
  return out;
}

Element cartan_from_characteristic(const ChevalleyBasis& cb,
                                   const std::vector<long long>& diagram_values) {
  int l = cb.roots.rank;
  if (int(diagram_values.size()) != l)
    throw input_error("characteristic: wrong length");
  std::vector<long long> s(static_cast<size_t>(l));
  for (int p = 0; p < l; ++p) s[size_t(cb.diagram_order[size_t(p)])] = diagram_values[size_t(p)];
  QMatrix a(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      a.at(i, j) = Rational((long long)cb.roots.cartan[size_t(i)][size_t(j)]);
  std::vector<Rational> rhs(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) rhs[size_t(i)] = Rational(s[size_t(i)]);
  auto sol = solve(a, rhs);
  if (!sol) throw input_error("characteristic: inconsistent");
  Element h(cb.alg());
  int N = cb.roots.num_positive();
  for (int j = 0; j < l; ++j) h[2 * N + j] = (*sol)[size_t(j)];
  return h;
}

}  // namespace nilorb
