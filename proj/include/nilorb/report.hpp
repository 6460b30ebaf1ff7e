#ifndef NILORB_REPORT_HPP
#define NILORB_REPORT_HPP

#include <string>

#include "nilorb/index.hpp"
#include "nilorb/propp.hpp"
#include "nilorb/slice.hpp"

namespace nilorb {

/// Everything the verifier computes for one catalog orbit.
struct OrbitVerification {
  OrbitReport report;
  TheoremReport theorems;
  PVerdict propp;
  bool pass = false;
};

/// Runs the full verification for one loaded orbit. Randomized parts draw
/// from streams derived from the base seed and the orbit key, so results do
/// not depend on the order in which orbits are processed.
OrbitVerification verify_orbit(const LoadedOrbit& o, const RankConfig& base);

/// One json-lines record, schema version 1. Deterministic byte-for-byte for a
/// fixed seed: fields are emitted in a fixed order and no timing is included.
std::string jsonl_record(const OrbitVerification& v);

std::string text_record(const OrbitVerification& v);

}  // namespace nilorb

#endif
