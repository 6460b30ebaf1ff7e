#ifndef NILORB_SLICE_HPP
#define NILORB_SLICE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nilorb/chevalley.hpp"
#include "nilorb/liealg.hpp"

namespace nilorb {

/// sl2-triple (e, h, f) with [h,e] = 2e, [e,f] = h, [h,f] = -2f.
struct Sl2Triple {
  Element e, h, f;
};

/// Exact nilpotency test: (ad e)^(dim g) = 0, via repeated squaring.
bool is_nilpotent(const Element& e);

/// Completes a nonzero nilpotent e to an sl2-triple. h is taken inside
/// [e, g]; when the solution set meets the algebra's Cartan subalgebra the
/// Cartan representative is returned, which makes characteristics directly
/// readable. All three relations are verified exactly before returning.
Sl2Triple jacobson_morozov(const Element& e);

bool triple_relations_hold(const Sl2Triple& t);

/// dim g^e equals the rank of g.
bool is_regular(const Sl2Triple& t);

/// Equal dimensions of the 0- and 2-eigenspaces of ad h on g.
bool is_distinguished(const Sl2Triple& t);

/// Normalizer n(g^e) computed as {y : [y, e] in z(g^e)} and cross-checked
/// against g^e + [f, z(g^e)]; throws property_violation if the two disagree
/// or the sum is not direct.
Subspace normalizer_of_centralizer(const Sl2Triple& t, const Subspace& gxi,
                                   const Subspace& z);

/// ad-h weight decomposition of g^e with the center split off inside every
/// weight space. Weight spaces are sorted by ascending weight.
struct WeightDecomposition {
  Subspace gxi, z;
  std::vector<Rational> weights;             // distinct ad-h weights of g^e
  std::vector<std::vector<Element>> zpart;   // z intersect V(m), echelon basis
  std::vector<std::vector<Element>> cpart;   // completion of zpart inside V(m)

  int weight_index(const Rational& m) const;  // -1 if absent
  int dim_weight(int wi) const { return int(zpart[size_t(wi)].size() + cpart[size_t(wi)].size()); }
  /// Multiset of z-weights with multiplicities, ascending.
  std::vector<long long> z_weights() const;
  /// Largest z-weight.
  Rational top_z_weight() const;
  /// Basis of g^e listing all central vectors first (by weight), then the
  /// complements (by weight); the layout used by the [D;E] matrix.
  std::vector<Element> z_first_basis() const;
  int z_dim() const;
};

WeightDecomposition weight_decomposition(const Sl2Triple& t);

/// One orbit entry of the bundled catalog.
struct OrbitSpec {
  char type = 'E';
  int rank = 0;
  std::string label;
  std::vector<long long> characteristic;  // diagram node order
  std::vector<std::pair<std::vector<int>, Rational>> e_terms;  // positive roots
  std::string key() const;  // "E6:subregular"
};

/// Catalog orbit together with its validated triple.
struct LoadedOrbit {
  OrbitSpec spec;
  std::shared_ptr<ChevalleyBasis> cb;
  Sl2Triple triple;
};

/// Summary data of one orbit, used by reports and the CLI.
struct OrbitReport {
  std::string orbit;
  std::string algebra;
  int dim_gxi = 0, dim_z = 0, dim_n = 0;
  std::vector<long long> weights;  // z-weights with multiplicity
  std::vector<long long> characteristic;
  bool regular = false, distinguished = false;
};

OrbitReport orbit_report(const std::string& key, const ChevalleyBasis& cb,
                         const Sl2Triple& t);

/// Parses the catalog text format; throws data_error with a line number on
/// malformed input. No validation beyond syntax.
std::vector<OrbitSpec> parse_catalog(const std::string& text);

/// Parses and re-validates every orbit: the stored roots must be positive
/// roots, e must be nilpotent, and the recomputed characteristic must match
/// the stored one (data_error naming the orbit otherwise). Algebras are built
/// once per type and shared.
std::vector<LoadedOrbit> load_catalog(const std::string& text);

/// The bundled catalog of all distinguished non-regular orbits of
/// E6, E7, E8, F4 and G2.
const std::string& builtin_catalog_text();

std::string serialize_catalog(const std::vector<OrbitSpec>& specs);

}  // namespace nilorb

#endif
