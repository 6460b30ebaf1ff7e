#include "nilorb/report.hpp"

#include <sstream>

#include "nilorb/rng.hpp"

namespace nilorb {

OrbitVerification verify_orbit(const LoadedOrbit& o, const RankConfig& base) {
  OrbitVerification v;
  std::uint64_t orbit_seed = base.seed ^ fnv1a64(o.spec.key());
  RankConfig cfg{base.trials, base.bound, orbit_seed};

  v.report = orbit_report(o.spec.key(), *o.cb, o.triple);
  WeightDecomposition wd = weight_decomposition(o.triple);
  v.theorems = verify_theorems(o.triple, wd, cfg);
  v.propp = check_property_p(o.triple, wd, orbit_seed ^ fnv1a64("propP"));
  v.pass = v.theorems.all_ok() && v.propp.status != PStatus::exact_fail;
  return v;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

template <typename T>
void join_numbers(std::ostringstream& os, const std::vector<T>& xs) {
  os << "[";
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
}

}  // namespace

std::string jsonl_record(const OrbitVerification& v) {
  std::ostringstream os;
  os << "{\"v\":1";
  os << ",\"orbit\":\"" << json_escape(v.report.orbit) << "\"";
  os << ",\"algebra\":\"" << json_escape(v.report.algebra) << "\"";
  os << ",\"dims\":{\"gxi\":" << v.report.dim_gxi << ",\"z\":" << v.report.dim_z
     << ",\"n\":" << v.report.dim_n << "}";
  os << ",\"weights\":";
  join_numbers(os, v.report.weights);
  os << ",\"characteristic\":";
  join_numbers(os, v.report.characteristic);
  os << ",\"ind_gxi\":" << v.theorems.ind_gxi;
  os << ",\"ind_n\":" << v.theorems.ind_n;
  os << ",\"ind_n_gxi\":" << v.theorems.ind_n_gxi;
  os << ",\"target\":" << v.theorems.target;
  os << ",\"prop4_ok\":" << (v.theorems.prop4_ok ? "true" : "false");
  os << ",\"propP\":{\"status\":\"" << v.propp.str() << "\",\"blocks\":[";
  for (size_t i = 0; i < v.propp.blocks.size(); ++i) {
    const auto& b = v.propp.blocks[i];
    os << (i ? "," : "") << "{\"weight\":" << b.weight_i1;
    if (b.weight_k1 >= 0) os << ",\"k_weight\":" << b.weight_k1;
    os << ",\"params\":" << b.params << ",\"rows\":" << b.rows
       << ",\"cols\":" << b.cols;
    os << ",\"status\":\"" << to_string(b.status) << "\"";
    if (b.via_shortcut) os << ",\"shortcut\":true";
    if (b.vacuous) os << ",\"vacuous\":true";
    os << "}";
  }
  os << "]}";
  os << ",\"pass\":" << (v.pass ? "true" : "false");
  os << "}";
  return os.str();
}

std::string text_record(const OrbitVerification& v) {
  std::ostringstream os;
  os << v.report.orbit << ": dim g^e = " << v.report.dim_gxi
     << ", dim z = " << v.report.dim_z << ", dim n = " << v.report.dim_n << "\n";
  os << "  characteristic:";
  for (long long c : v.report.characteristic) os << " " << c;
  os << "\n  z-weights:";
  for (long long w : v.report.weights) os << " " << w;
  os << "\n  ind g^e = " << v.theorems.ind_gxi << " (rank " << v.theorems.rank_g
     << "), ind n = " << v.theorems.ind_n << ", ind(n, g^e) = " << v.theorems.ind_n_gxi
     << ", target = " << v.theorems.target << "\n";
  os << "  rank [D;E] = " << v.theorems.de_rank << " (dim z = " << v.report.dim_z
     << ")\n";
  os << "  property (P): " << v.propp.str();
  for (const auto& b : v.propp.blocks) {
    os << "\n    weight " << b.weight_i1;
    if (b.weight_k1 >= 0)
      os << " -> " << b.weight_k1 << " [" << b.rows << "x" << b.cols << ", "
         << b.params << " param" << (b.params == 1 ? "" : "s") << "]";
    os << ": " << to_string(b.status);
    if (b.via_shortcut) os << " (shortcut)";
    if (b.vacuous) os << " (vacuous)";
  }
  if (!v.propp.warning.empty()) os << "\n  warning: " << v.propp.warning;
  os << "\n  verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace nilorb
