#ifndef NILORB_CHEVALLEY_HPP
#define NILORB_CHEVALLEY_HPP

#include <map>
#include <string>
#include <vector>

#include "nilorb/liealg.hpp"

namespace nilorb {

/// Root system of a simple type, Bourbaki numbering of the simple roots.
/// Positive roots are stored as coefficient vectors over the simple roots,
/// sorted by height and then lexicographically decreasing.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^v>
  std::vector<int> dnorm;                // (alpha_i, alpha_i) / 2
  std::vector<std::vector<int>> positive;
  std::map<std::vector<int>, int> index_map;  // positive root -> 0-based index

  int num_positive() const { return int(positive.size()); }
  int height(int idx) const;
  /// 0-based index of a positive root, -1 when absent.
  int index_of(const std::vector<int>& v) const;
  bool is_root(const std::vector<int>& v) const;
  /// (beta, beta) with short roots normalized to 2.
  long long norm2(const std::vector<int>& beta) const;
  /// <beta, alpha_i^v>
  long long pairing(const std::vector<int>& beta, int i) const;
};

/// A simple Lie algebra together with its Chevalley basis bookkeeping.
/// Basis layout: x_1..x_N, y_1..y_N, h_1..h_l.
struct ChevalleyBasis {
  LieAlgebraPtr algebra;
  RootSystem roots;
  std::vector<int> x;  // x[i] = basis index of the i-th positive root vector
  std::vector<int> y;
  std::vector<int> h;  // simple coroots
  /// Dynkin node order used when printing characteristics: for E types the
  /// horizontal chain first and the branch node last, identity otherwise.
  std::vector<int> diagram_order;

  const LieAlgebra* alg() const { return algebra.get(); }
};

bool simple_type_valid(char type, int rank);

/// Builds the simple Lie algebra of the given type over Q with integral
/// Chevalley structure constants (extraspecial-pair sign convention,
/// N > 0 on extraspecial pairs). Throws input_error on invalid type/rank.
ChevalleyBasis build_simple(char type, int rank);

struct CombinationTerm {
  char kind;  // 'x', 'y' or 'h'
  int index;  // 1-based, matching the x[i]/y[i]/h[i] naming
  Rational coeff = Rational(1);
};

Element element_from_combination(const ChevalleyBasis& cb,
                                 const std::vector<CombinationTerm>& terms);

/// Values alpha_i(h) over the simple roots, reported in diagram node order.
/// Throws input_error when h has root-vector components.
std::vector<long long> weighted_dynkin(const ChevalleyBasis& cb, const Element& hElem);

/// Cartan element with the prescribed characteristic (diagram node order).
Element cartan_from_characteristic(const ChevalleyBasis& cb,
                                   const std::vector<long long>& diagram_values);

}  // namespace nilorb

#endif
