#ifndef NILORB_CLASSICAL_HPP
#define NILORB_CLASSICAL_HPP

#include <string>
#include <vector>

#include "nilorb/index.hpp"
#include "nilorb/liealg.hpp"
#include "nilorb/slice.hpp"

namespace nilorb {

enum class Family { sl, so, sp };
Family family_from_string(const std::string& s);
std::string to_string(Family f);

/// Matrix realization of sl_n, so_n or sp_n over Q. For so/sp the bilinear
/// form is assembled from per-Jordan-block split forms, so every partition
/// nilpotent exists over Q with exact entries.
struct ClassicalRealization {
  Family family = Family::sl;
  int n = 0;
  QMatrix form;  // empty for sl
  LieAlgebraPtr algebra;
  std::vector<QMatrix> basis_mats;

  const LieAlgebra* alg() const { return algebra.get(); }
  Element to_element(const QMatrix& m) const;  // throws if outside the span
  QMatrix to_matrix(const Element& v) const;
};

bool partition_valid(Family f, const std::vector<int>& parts);

struct PartitionNilpotent {
  ClassicalRealization real;
  std::vector<int> partition;  // weakly decreasing
  QMatrix xi;
  Sl2Triple triple;
  std::vector<int> block_offsets;  // start row of each part's block
};

/// Builds the realization for the given partition together with a nilpotent
/// of that Jordan type and its sl2-triple. Throws input_error on partitions
/// invalid for the family (so: even parts need even multiplicity, sp: odd
/// parts need even multiplicity).
PartitionNilpotent build_partition_nilpotent(Family f, std::vector<int> parts);

/// Power span: sl takes xi..xi^{d-1}, so/sp the odd powers, d = degree of the
/// minimal polynomial (largest part).
Subspace zprime(const PartitionNilpotent& p);

struct DMatrixData {
  VectorMatrix m;               // with target z'
  std::vector<Element> powers;  // the power basis e_i
  int d = 0;                    // minimal polynomial degree
  int r = 0;                    // floor(d/2)
};

/// The D matrix [[f, e_j], e_i] over the power basis of z'. Entries are
/// verified against the closed form (-2ij xi^{i+j-1} for sl,
/// -2(2i-1)(2j-1) xi^{2i+2j-3} for so/sp, zero past the anti-diagonal).
DMatrixData dmatrix(const PartitionNilpotent& p);

/// Central element w of the so_{2n} two-part construction, built from a
/// rank-one intertwiner A with X1 A = 0 and A X2 = 0.
struct SpecialCenter {
  Element w;
  Rational lambda;  // ad-h eigenvalue of w, computed not assumed
  QMatrix a;
};

SpecialCenter special_center_element(const PartitionNilpotent& p);

struct CrochetReport {
  bool vanishing_ok = false;   // [[f,w], xi^{2i-1}] = 0 for i = 2..s (and -lambda w at i=1)
  bool x_ok = false;           // x = [[f,w], xi_2] nonzero and in g^e
  bool top_power_ok = false;   // [[f, xi^{2s-1}], xi_2] = 0
  Element x;
};

CrochetReport verify_crochet(const PartitionNilpotent& p, const SpecialCenter& sc);

/// Everything the two-part so suite verifies in one place.
struct TwoPartSuite {
  int s = 0, t = 0;
  SpecialCenter sc;
  CrochetReport crochet;
  bool z_basis_ok = false;       // {xi, xi^3, ..., xi^{2s-1}, w} is a basis of z
  bool dfull_singular = false;   // full D has two rows supported on one column
  VectorMatrix dfull;            // (s+1) x (s+1), target g^e
  VectorMatrix mprime;           // rows e_1..e_s, xi_2; columns e_1..e_s, w
  Element xi2;
};

TwoPartSuite two_part_suite(const PartitionNilpotent& p);

/// Second factor of xi acting on the smaller block only.
Element xi2_element(const PartitionNilpotent& p);

}  // namespace nilorb

#endif
