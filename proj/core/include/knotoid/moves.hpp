#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "knotoid/code.hpp"

namespace knotoid {

enum class Rule { R1Insert, R1Delete, R2Insert, R2Delete, R3, PreferredSwitch };

// Which insertion variants to offer. Auto picks flat variants when the code has
// flat or singular chords and classical variants otherwise.
enum class Flavor { Auto, Classical, Flat };

std::string to_string(Rule r);

// site holds pair starts for deletions and R3, gaps for insertions (the gap index is
// the position the new passages are inserted before), and the new preferred chord's
// passages for PreferredSwitch. chords lists the chords touched, fresh ids for insertions.
struct MoveInstance {
  Rule rule = Rule::R1Delete;
  std::vector<Location> site;
  std::vector<int> chords;
  std::string variant;

  auto operator<=>(const MoveInstance&) const = default;
};

struct VariantRow {
  std::string family;
  std::string variant;
  std::string pattern;
  std::string rewrite;
};

// Rows of the oriented move table (R1, R2 and R3 variants, flat and classical).
const std::vector<VariantRow>& variant_table();

std::vector<MoveInstance> enumerate_moves(const KnotoidCode& code, Flavor flavor = Flavor::Auto);
// Deletions, R3 reconfigurations and preferred switches only.
std::vector<MoveInstance> enumerate_reductions(const KnotoidCode& code);

// Throws StaleMove when the instance does not apply to the code.
KnotoidCode apply_move(const KnotoidCode& code, const MoveInstance& m);

struct WalkOptions {
  Flavor flavor = Flavor::Auto;
  int max_chords = 0;  // 0 means unbounded
  bool preferred_switch = true;
};

// Each step picks a rule family uniformly among the applicable ones, then an instance
// uniformly within it. Deterministic in (code, steps, seed, options).
KnotoidCode random_walk(const KnotoidCode& code, int steps, std::uint64_t seed, const WalkOptions& opt = {});

// Applies the smallest R1/R2 deletion (by rule, then site) until none applies.
KnotoidCode simplify(const KnotoidCode& code);

}  // namespace knotoid
