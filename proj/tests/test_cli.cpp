#include "doctest.h"

#include "nilorb/report.hpp"

using namespace nilorb;

namespace {

const LoadedOrbit& orbit_by_key(const std::vector<LoadedOrbit>& orbits,
                                const std::string& key) {
  for (const auto& o : orbits)
    if (o.spec.key() == key) return o;
  throw std::runtime_error("missing orbit " + key);
}

}  // namespace

TEST_CASE("jsonl records are deterministic and schema-stable") {
  auto orbits = load_catalog(builtin_catalog_text());
  const LoadedOrbit& g2 = orbit_by_key(orbits, "G2:1");
  RankConfig cfg{5, 1000, 42};
  OrbitVerification v1 = verify_orbit(g2, cfg);
  OrbitVerification v2 = verify_orbit(g2, cfg);
  std::string r1 = jsonl_record(v1), r2 = jsonl_record(v2);
  CHECK(r1 == r2);
  CHECK(r1.find("\"v\":1") != std::string::npos);
  CHECK(r1.find("\"orbit\":\"G2:1\"") != std::string::npos);
  CHECK(r1.find("\"dims\":{\"gxi\":4,\"z\":2,\"n\":6}") != std::string::npos);
  CHECK(r1.find("\"propP\"") != std::string::npos);
  CHECK(r1.find("\"characteristic\":[0,2]") != std::string::npos);

  // Different seeds may change sampled numbers but never verified facts.
  OrbitVerification v3 = verify_orbit(g2, cfg.with_seed(43));
  CHECK(v3.pass == v1.pass);
  CHECK(v3.theorems.ind_n == v1.theorems.ind_n);
}

TEST_CASE("text and jsonl reports agree on the numbers") {
  auto orbits = load_catalog(builtin_catalog_text());
  const LoadedOrbit& f4 = orbit_by_key(orbits, "F4:1");
  OrbitVerification v = verify_orbit(f4, RankConfig{5, 1000, 0});
  std::string text = text_record(v);
  std::string json = jsonl_record(v);
  CHECK(text.find("dim g^e = 6") != std::string::npos);
  CHECK(json.find("\"gxi\":6") != std::string::npos);
  CHECK(text.find("ind n = 1") != std::string::npos);
  CHECK(json.find("\"ind_n\":1") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(json.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("verify_orbit is independent of processing order") {
  auto orbits = load_catalog(builtin_catalog_text());
  RankConfig cfg{3, 500, 99};
  const LoadedOrbit& a = orbit_by_key(orbits, "F4:1");
  const LoadedOrbit& b = orbit_by_key(orbits, "F4:3");
  std::string ab = jsonl_record(verify_orbit(a, cfg)) + jsonl_record(verify_orbit(b, cfg));
  std::string ba_b = jsonl_record(verify_orbit(b, cfg));
  std::string ba_a = jsonl_record(verify_orbit(a, cfg));
  CHECK(ab == ba_a + ba_b);
}
