// Acceptance suite: one line per criterion, exit status zero only if all
// pass. Criteria marked with times also enforce their wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdio>
#include <map>
#include <set>

#include "nilorb/classical.hpp"
#include "nilorb/report.hpp"
#include "nilorb/rng.hpp"

using namespace nilorb;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
  std::printf("criterion %d (%s): %s%s%s\n", criterion, what.c_str(),
              ok ? "PASS" : "FAIL", detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct OrbitExpect {
  int dim_gxi, dim_z;
  std::vector<long long> weights;
};

const std::map<std::string, OrbitExpect>& expected_orbit_table() {
  static const std::map<std::string, OrbitExpect> t = {
      {"E6:subregular", {8, 5, {2, 8, 10, 14, 16}}},
      {"E6:2", {12, 4, {2, 8, 10, 10}}},
      {"E7:1", {9, 6, {2, 10, 14, 18, 22, 26}}},
      {"E7:2", {11, 5, {2, 10, 14, 18, 22}}},
      {"E7:3", {13, 5, {2, 10, 14, 16, 18}}},
      {"E7:4", {17, 3, {2, 10, 14}}},
      {"E7:5", {21, 4, {2, 10, 10, 10}}},
      {"E8:1", {10, 7, {2, 14, 22, 26, 34, 38, 46}}},
      {"E8:2", {12, 6, {2, 14, 22, 26, 34, 38}}},
      {"E8:3", {14, 6, {2, 14, 22, 26, 28, 34}}},
      {"E8:4", {16, 5, {2, 14, 22, 26, 28}}},
      {"E8:5", {18, 4, {2, 14, 22, 26}}},
      {"E8:6", {20, 4, {2, 14, 22, 22}}},
      {"E8:7", {22, 5, {2, 14, 18, 18, 22}}},
      {"E8:8", {24, 4, {2, 14, 18, 18}}},
      {"E8:9", {28, 3, {2, 14, 16}}},
      {"E8:10", {40, 5, {2, 10, 10, 10, 10}}},
      {"F4:1", {6, 3, {2, 10, 14}}},
      {"F4:2", {8, 3, {2, 10, 10}}},
      {"F4:3", {12, 3, {2, 6, 6}}},
  };
  return t;
}

// det of the evaluated matrix against sign * scale * prod <phi, el>^pow over
// ten random forms, requiring one consistent sign.
bool det_matches_closed_form(const VectorMatrix& m, long long scale,
                             const std::vector<std::pair<Element, int>>& factors,
                             std::uint64_t seed) {
  Rng rng(seed);
  Rational sign(0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> phi(static_cast<size_t>(m.target().dim()));
    for (auto& c : phi) c = Rational(rng.uniform_int(-50, 50));
    Rational det = determinant(m.eval(phi));
    Rational expect(scale);
    for (const auto& [el, pw] : factors) {
      auto coords = m.target().coords(el);
      Rational v(0);
      for (size_t i = 0; i < coords.size(); ++i) v += coords[i] * phi[i];
      for (int k = 0; k < pw; ++k) expect *= v;
    }
    if (expect.is_zero()) {
      if (!det.is_zero()) return false;
      continue;
    }
    Rational s = det / expect;
    if (s != Rational(1) && s != Rational(-1)) return false;
    if (sign.is_zero()) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

void criterion1() {
  bool ok = true;
  std::string detail;
  const std::pair<char, int> types[] = {{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  const int dims[] = {78, 133, 248, 52, 14};
  for (int i = 0; i < 5; ++i) {
    auto t0 = Clock::now();
    ChevalleyBasis cb = build_simple(types[i].first, types[i].second);
    bool jac = cb.alg()->jacobi_holds_exhaustive();
    double dt = seconds_since(t0);
    bool this_ok = cb.alg()->dim() == dims[i] && jac && dt < 30.0;
    detail += std::string(1, types[i].first) + std::to_string(types[i].second) + "=" +
              std::to_string(cb.alg()->dim()) + (jac ? "/jacobi" : "/JACOBI-FAIL") +
              " " + std::to_string(dt).substr(0, 4) + "s ";
    ok = ok && this_ok;
  }
  report(1, "algebra construction with exhaustive jacobi", ok, detail);
}

void criterion23(const std::vector<LoadedOrbit>& orbits) {
  bool dims_ok = true, weights_ok = true;
  std::string dbad, wbad;
  int found = 0;
  for (const auto& o : orbits) {
    auto it = expected_orbit_table().find(o.spec.key());
    if (it == expected_orbit_table().end()) continue;
    ++found;
    Subspace gxi = centralizer(o.triple.e);
    Subspace z = center_of(gxi);
    if (gxi.dim() != it->second.dim_gxi || z.dim() != it->second.dim_z) {
      dims_ok = false;
      dbad += o.spec.key() + " ";
    }
    WeightDecomposition wd = weight_decomposition(o.triple);
    if (wd.z_weights() != it->second.weights) {
      weights_ok = false;
      wbad += o.spec.key() + " ";
    }
  }
  // Structural weight invariants hold on every orbit, including G2.
  for (const auto& o : orbits) {
    WeightDecomposition wd = weight_decomposition(o.triple);
    auto w = wd.z_weights();
    bool even = true;
    for (long long m : w) even = even && m % 2 == 0;
    int wi = wd.weight_index(Rational(2));
    bool mult1 = std::count(w.begin(), w.end(), 2LL) == 1 && wi >= 0 &&
                 wd.zpart[size_t(wi)].size() == 1;
    bool spans = mult1 && Subspace::from_elements(o.cb->alg(), {wd.zpart[size_t(wi)][0]})
                              .contains(o.triple.e);
    bool top = wd.top_z_weight() == wd.weights.back();
    if (!(even && mult1 && spans && top)) {
      weights_ok = false;
      wbad += o.spec.key() + ":invariant ";
    }
  }
  dims_ok = dims_ok && found == 20;
  report(2, "centralizer and center dimensions", dims_ok,
         dims_ok ? "20 orbits exact" : ("mismatch: " + dbad));
  report(3, "ad-h weight multisets on the center", weights_ok,
         weights_ok ? "20 orbits exact" : ("mismatch: " + wbad));
}

std::vector<OrbitVerification> criterion45(const std::vector<LoadedOrbit>& orbits) {
  RankConfig cfg{5, 1000, 0};
  auto t0 = Clock::now();
  std::vector<OrbitVerification> all;
  bool thm_ok = true;
  std::string bad;
  for (const auto& o : orbits) {
    OrbitVerification v = verify_orbit(o, cfg);
    if (!(v.theorems.alg_identity_ok && v.theorems.mod_identity_ok && v.theorems.ind_gxi_ok &&
          v.theorems.prop4_ok && v.theorems.prop4_equiv_ok && v.theorems.lemma1_ok &&
          v.theorems.block_structure_ok)) {
      thm_ok = false;
      bad += o.spec.key() + " ";
    }
    all.push_back(std::move(v));
  }
  double dt = seconds_since(t0);
  thm_ok = thm_ok && all.size() == 21 && dt < 600.0;
  report(4, "both index identities on all 21 orbits", thm_ok,
         "21 orbits in " + std::to_string(dt).substr(0, 5) + "s" +
             (bad.empty() ? "" : " failing: " + bad));

  bool p_ok = true;
  std::string pbad;
  for (const auto& v : all) {
    if (v.propp.status == PStatus::exact_fail) {
      p_ok = false;
      pbad += v.report.orbit + ":fail ";
      continue;
    }
    for (const auto& b : v.propp.blocks) {
      bool may_sample = v.report.orbit == "E8:10" && b.params == 4;
      if (b.status == PStatus::exact_fail ||
          (b.status == PStatus::probabilistic_pass && !may_sample)) {
        p_ok = false;
        pbad += v.report.orbit + ":w" + std::to_string(b.weight_i1) + " ";
      }
    }
  }
  report(5, "property (P) on all 21 orbits (exact except possibly E8:10)", p_ok, pbad);
  return all;
}

void criterion6() {
  bool ok = true;
  std::string bad;
  for (int n = 2; n <= 6; ++n) {
    auto p = build_partition_nilpotent(Family::sl, {n});
    DMatrixData dd = dmatrix(p);
    long long scale = 1;
    for (int k = 1; k <= n - 1; ++k) scale *= k;
    scale = scale * scale;
    for (int k = 0; k < n - 1; ++k) scale *= 2;
    if (!det_matches_closed_form(dd.m, scale, {{dd.powers.back(), n - 1}},
                                 1000 + std::uint64_t(n))) {
      ok = false;
      bad += "sl" + std::to_string(n) + " ";
    }
  }
  struct SoSp {
    Family fam;
    int part;
    int r;
  } cases[] = {{Family::so, 3, 1}, {Family::so, 5, 2}, {Family::so, 7, 3},
               {Family::sp, 2, 1}, {Family::sp, 4, 2}, {Family::sp, 6, 3}};
  for (const auto& c : cases) {
    auto p = build_partition_nilpotent(c.fam, {c.part});
    DMatrixData dd = dmatrix(p);
    long long dblf = 1;
    for (int k = 2 * c.r - 1; k >= 1; k -= 2) dblf *= k;
    long long scale = dblf * dblf;
    for (int k = 0; k < c.r; ++k) scale *= 2;
    if (dd.r != c.r ||
        !det_matches_closed_form(dd.m, scale, {{dd.powers.back(), c.r}},
                                 2000 + std::uint64_t(c.part))) {
      ok = false;
      bad += to_string(c.fam) + std::to_string(c.part) + " ";
    }
  }
  report(6, "classical determinant closed forms", ok, bad);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  RankConfig cfg{5, 1000, 0};
  const std::pair<int, int> st[] = {{2, 1}, {3, 1}, {3, 2}};
  for (auto [s, t] : st) {
    std::vector<int> parts{2 * s + 1, 2 * t + 1};
    auto p = build_partition_nilpotent(Family::so, parts);
    TwoPartSuite ts = two_part_suite(p);
    Subspace gxi = centralizer(p.triple.e);
    Subspace z = center_of(gxi);
    bool this_ok = zprime(p).dim() == s && z.dim() == s + 1 && ts.z_basis_ok &&
                   ts.crochet.vanishing_ok && ts.crochet.x_ok && ts.crochet.top_power_ok &&
                   ts.dfull_singular &&
                   generic_rank(ts.mprime, cfg.stream("mp")) == s + 1;
    TheoremReport tr = verify_theorems(p.triple, cfg);
    this_ok = this_ok && tr.alg_identity_ok && tr.mod_identity_ok && tr.ind_gxi_ok;
    if (s == 2 && t == 1) {
      Subspace n = normalizer_of_centralizer(p.triple, gxi, z);
      int ind_nz = index_rep(n, z, cfg.stream("nz"));
      // The structural singularity of D certifies the rank defect exactly.
      this_ok = this_ok && ts.dfull_singular && ind_nz > 0;
    }
    detail += "(" + std::to_string(s) + "," + std::to_string(t) + ")" +
              (this_ok ? " ok " : " FAIL ") + "lambda=" + ts.sc.lambda.str() + " ";
    ok = ok && this_ok;
  }
  report(7, "so_2n two-part partition suite", ok, detail);
}

void criterion8() {
  bool ok = true;
  std::string bad;
  RankConfig cfg{5, 1000, 0};

  struct Alg {
    char type;
    int rank;
    const char* name;
  } algebras[] = {{'A', 3, "sl4"}, {'B', 3, "so7"}, {'C', 3, "sp6"},
                  {'D', 4, "so8"}, {'G', 2, "G2"},  {'F', 4, "F4"}};
  for (const auto& a : algebras) {
    ChevalleyBasis cb = build_simple(a.type, a.rank);
    const LieAlgebra* g = cb.alg();
    Subspace full = Subspace::full(g);
    Rng rng(fnv1a64(a.name));
    int done = 0;
    while (done < 100) {
      Element e(g);
      int terms = int(rng.uniform_int(1, 3));
      for (int k = 0; k < terms; ++k) {
        int root = int(rng.uniform_int(1, cb.roots.num_positive()));
        e[cb.x[size_t(root - 1)]] += Rational(rng.uniform_int(-2, 2));
      }
      if (e.is_zero()) continue;
      ++done;
      Sl2Triple t = jacobson_morozov(e);
      Subspace gxi = centralizer(t.e);
      Subspace z = center_of(gxi);

      // Prop 1: n = g^e + [f, z] (direct), computed generically; [n, e] = z.
      Subspace n = normalizer(gxi);
      Subspace cand = sum(gxi, bracket_span(t.f, z));
      bool p1 = n == cand && n.dim() == gxi.dim() + z.dim() &&
                bracket_span(t.e, n) == z && n == normalizer(z);
      // Prop 1(1): n = {y : [y, e] in z} via the verified helper.
      bool p1b = normalizer_of_centralizer(t, gxi, z) == n;

      // Prop 2: orthogonal(g^e) = [e, g]; g^e + [f, g] = g directly.
      Subspace eg = bracket_span(t.e, full);
      Subspace fg = bracket_span(t.f, full);
      bool p2 = orthogonal(gxi) == eg && intersect(gxi, fg).dim() == 0 &&
                sum(gxi, fg).dim() == g->dim();

      // Prop 3 specializations.
      bool p3 = orthogonal(n) == bracket_span(t.e, bracket_span(gxi, full)) &&
                orthogonal(sum(gxi, bracket_span(t.f, gxi))) ==
                    bracket_span(t.e, eg) &&
                orthogonal(z) == bracket_span(full, gxi);

      // Lemma-1 inequality instance for the ideal g^e of n.
      RankConfig c2 = cfg.with_seed(cfg.seed ^ fnv1a64(a.name) ^ std::uint64_t(done));
      int ind_gxi = index_of(gxi, c2.stream("a"));
      int ind_n = index_of(n, c2.stream("b"));
      int ind_rep = index_rep(n, gxi, c2.stream("c"));
      bool l1 = ind_gxi + ind_n <= (n.dim() - gxi.dim()) + 2 * ind_rep;

      if (!(p1 && p1b && p2 && p3 && l1)) {
        ok = false;
        bad += std::string(a.name) + "#" + std::to_string(done) + " ";
        break;
      }
    }
  }

  // Relation (4) as matrix identities over random valid partitions.
  struct Cl {
    Family fam;
    int n;
  } classicals[] = {{Family::sl, 4}, {Family::so, 7}, {Family::sp, 6}, {Family::so, 8}};
  for (const auto& c : classicals) {
    // Enumerate valid partitions of n with a nonzero nilpotent.
    std::vector<std::vector<int>> parts_list;
    std::vector<int> cur;
    std::function<void(int, int)> enumerate = [&](int rest, int maxp) {
      if (rest == 0) {
        auto p = cur;
        if (partition_valid(c.fam, p) && p[0] > 1) parts_list.push_back(p);
        return;
      }
      for (int p = std::min(rest, maxp); p >= 1; --p) {
        cur.push_back(p);
        enumerate(rest - p, p);
        cur.pop_back();
      }
    };
    enumerate(c.n, c.n);
    Rng rng(fnv1a64(to_string(c.fam) + std::to_string(c.n)));
    for (int it = 0; it < 100; ++it) {
      const auto& parts = parts_list[size_t(rng.uniform_int(0, (long long)parts_list.size() - 1))];
      auto p = build_partition_nilpotent(c.fam, parts);
      int d = parts[0];
      QMatrix h = p.real.to_matrix(p.triple.h);
      QMatrix f = p.real.to_matrix(p.triple.f);
      auto comm = [](const QMatrix& x, const QMatrix& y) {
        QMatrix r = x.mul(y), s2 = y.mul(x);
        for (int i = 0; i < r.rows(); ++i)
          for (int j = 0; j < r.cols(); ++j) r.at(i, j) -= s2.at(i, j);
        return r;
      };
      std::vector<QMatrix> pow{QMatrix::identity(p.real.n), p.xi};
      for (int k = 2; k <= d; ++k) pow.push_back(pow.back().mul(p.xi));
      bool rel = true;
      for (int k = 1; k < d && rel; ++k)
        for (int i = 1; k + i <= d && rel; ++i) {
          QMatrix lhs = comm(comm(pow[size_t(k)], f), pow[size_t(i)]);
          QMatrix expect = pow[size_t(k + i - 1)];
          for (int a2 = 0; a2 < expect.rows(); ++a2)
            for (int b2 = 0; b2 < expect.cols(); ++b2)
              expect.at(a2, b2) *= Rational(2LL * k * i);
          rel = rel && lhs == expect;
        }
      for (int i = 1; i < d && rel; ++i) {
        QMatrix lhs = comm(h, pow[size_t(i)]);
        QMatrix expect = pow[size_t(i)];
        for (int a2 = 0; a2 < expect.rows(); ++a2)
          for (int b2 = 0; b2 < expect.cols(); ++b2)
            expect.at(a2, b2) *= Rational(2LL * i);
        rel = rel && lhs == expect;
      }
      if (!rel) {
        ok = false;
        bad += to_string(c.fam) + std::to_string(c.n) + "-rel4 ";
        break;
      }
    }
  }
  report(8, "structure identity property suite (100 instances each)", ok, bad);
}

void criterion9(const std::vector<LoadedOrbit>& orbits) {
  RankConfig cfg{5, 1000, 12345};
  std::string run1, run2;
  for (const auto& o : orbits) run1 += jsonl_record(verify_orbit(o, cfg)) + "\n";
  for (const auto& o : orbits) run2 += jsonl_record(verify_orbit(o, cfg)) + "\n";
  report(9, "byte-identical seeded reruns", run1 == run2 && !run1.empty(),
         std::to_string(run1.size()) + " bytes");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  std::vector<LoadedOrbit> orbits = load_catalog(builtin_catalog_text());
  criterion23(orbits);
  criterion45(orbits);
  criterion6();
  criterion7();
  criterion8();
  criterion9(orbits);
  std::printf("acceptance total: %.1fs, %s\n", seconds_since(t0),
              failures == 0 ? "all criteria PASS" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
