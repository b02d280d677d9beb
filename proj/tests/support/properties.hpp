#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace knotoid::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string example;  // first failing input

  bool ok() const { return cases > 0 && failures == 0; }
};

using PropertyFn = PropertyResult (*)(int cases, std::uint64_t seed);

struct NamedProperty {
  const char* name;
  PropertyFn run;
  int cases;
};

// Seeded property suites; every entry runs at least 200 cases by default.
const std::vector<NamedProperty>& property_suite();

PropertyResult prop_flat_writhe_relation(int cases, std::uint64_t seed);
PropertyResult prop_affine_reconstruction(int cases, std::uint64_t seed);
PropertyResult prop_walk_affine(int cases, std::uint64_t seed);
PropertyResult prop_walk_flat_affine(int cases, std::uint64_t seed);
PropertyResult prop_walk_intersection(int cases, std::uint64_t seed);
PropertyResult prop_walk_fingerprint(int cases, std::uint64_t seed);
PropertyResult prop_walk_F(int cases, std::uint64_t seed);
PropertyResult prop_walk_L(int cases, std::uint64_t seed);
PropertyResult prop_walk_G(int cases, std::uint64_t seed);
PropertyResult prop_mirror_reverse(int cases, std::uint64_t seed);
PropertyResult prop_second_derivative_F(int cases, std::uint64_t seed);
PropertyResult prop_second_derivative_L(int cases, std::uint64_t seed);
PropertyResult prop_second_derivative_G(int cases, std::uint64_t seed);
PropertyResult prop_sbm_walk_homology(int cases, std::uint64_t seed);
PropertyResult prop_insert_delete_roundtrip(int cases, std::uint64_t seed);
PropertyResult prop_parse_roundtrip(int cases, std::uint64_t seed);

}  // namespace knotoid::testing
