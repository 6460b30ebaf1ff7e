#ifndef NILORB_PROPP_HPP
#define NILORB_PROPP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nilorb/liealg.hpp"
#include "nilorb/poly.hpp"
#include "nilorb/slice.hpp"

namespace nilorb {

/// Matrix over Q whose entries are homogeneous linear forms in up to four
/// formal parameters.
struct ParamMatrix {
  int rows = 0, cols = 0, nparams = 1;
  std::vector<Poly> entries;

  ParamMatrix() = default;
  ParamMatrix(int r, int c, int np)
      : rows(r), cols(c), nparams(np), entries(size_t(r) * c, Poly(np)) {}

  Poly& at(int i, int j) { return entries[size_t(i) * cols + j]; }
  const Poly& at(int i, int j) const { return entries[size_t(i) * cols + j]; }
  QMatrix eval(const std::vector<Rational>& point) const;
};

enum class PStatus { exact_pass, exact_fail, probabilistic_pass };
std::string to_string(PStatus s);
PStatus combine(PStatus a, PStatus b);

/// Verdict for one weight block of the Property (P) check.
struct BlockVerdict {
  long long weight_i1 = 0;   // lowest weight of v driving this block
  long long weight_k1 = -1;  // weight searched for preimages, -1 when absent
  int params = 0;
  int rows = 0, cols = 0;
  PStatus status = PStatus::exact_pass;
  bool via_shortcut = false;  // settled by the weight-2 / top-weight reduction
  bool vacuous = false;       // no candidate weight in g^e; direct sampling used
  std::vector<Rational> witness;  // nonzero parameter point with rank < rows
  long long evidence = 0;         // sampled points on probabilistic paths
  std::string note;
};

struct PVerdict {
  PStatus status = PStatus::exact_pass;
  std::vector<BlockVerdict> blocks;
  std::string warning;
  std::string str() const { return to_string(status); }
};

struct SurjConfig {
  std::uint64_t seed = 0;
  long long random_points = 10000;
};

/// W: top ad-h eigenspace of the center of g^e.
Subspace top_weight_space(const Sl2Triple& t);

/// The family of matrices M(v) for v in the weight-m_i1 slice of the center,
/// as one matrix of linear forms in delta = dim(z cap V(m_i1)) parameters.
/// Entry (p, q) is the coordinate on the p-th top-weight basis vector of
/// [[f, u_q], v_s], summed over the slice basis with parameter weights.
ParamMatrix structure_coeffs(const Sl2Triple& t, const WeightDecomposition& wd,
                             int i1, int k1);

/// Decides whether rank M(a) = rows for every nonzero parameter vector a over
/// the algebraic closure. Exact on strata admitting monomial-minor or binary
/// gcd certificates; labeled probabilistic otherwise.
BlockVerdict surjective_all_nonzero(const ParamMatrix& m, const SurjConfig& cfg);

/// Direct test of W inside [[f, g^e], v] for one explicit v.
bool direct_witness_check(const Sl2Triple& t, const WeightDecomposition& wd,
                          const Element& v);

PVerdict check_property_p(const Sl2Triple& t, std::uint64_t seed);
PVerdict check_property_p(const Sl2Triple& t, const WeightDecomposition& wd,
                          std::uint64_t seed);

}  // namespace nilorb

#endif
