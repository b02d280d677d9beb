#include "properties.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>

#include "generators.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/sbm.hpp"
#include "knotoid/vassiliev.hpp"
#include "oracle.hpp"

namespace knotoid::testing {

namespace {

// Runs body once per case; body returns an empty string on success or a failure note.
PropertyResult run_cases(const char* name, int cases, std::uint64_t seed,
                         const std::function<std::string(std::mt19937_64&)>& body) {
  PropertyResult r{name, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::string note;
    try {
      note = body(rng);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!note.empty()) {
      ++r.failures;
      if (r.example.empty()) r.example = note;
    }
  }
  return r;
}

LaurentPoly to_poly(const std::map<int, long>& m) {
  LaurentPoly p;
  for (const auto& [e, c] : m) p.add_term(e, c);
  return p;
}

WalkOptions walk_opts(Flavor f, int cap, bool switches = true) {
  WalkOptions o;
  o.flavor = f;
  o.max_chords = cap;
  o.preferred_switch = switches;
  return o;
}

std::string walk_note(const KnotoidCode& a, const KnotoidCode& b) { return serialize(a) + " -> " + serialize(b); }

PropertyResult walk_invariant(const char* name, int cases, std::uint64_t seed, int max_start, int steps, int cap,
                              const std::function<InvariantValue(const KnotoidCode&)>& inv) {
  return run_cases(name, cases, seed, [&](std::mt19937_64& rng) -> std::string {
    KnotoidCode d = random_code(rng, uniform(rng, 0, max_start), ChordStyle::Classical);
    KnotoidCode e = random_walk(d, steps, rng(), walk_opts(Flavor::Classical, cap));
    return inv(d) == inv(e) ? "" : walk_note(d, e);
  });
}

PropertyResult second_derivative(const char* name, InvariantKind kind, int cases, std::uint64_t seed) {
  OrderReport r = order_check(kind, 1, cases, seed, 4);
  PropertyResult out{name, r.samples, r.nonzero, {}};
  if (!r.counterexamples.empty()) out.example = r.counterexamples.front();
  return out;
}

// Renames chords of a code by the given map (others unchanged).
KnotoidCode rename(const KnotoidCode& code, const std::map<int, int>& to) {
  auto comps = code.components();
  for (auto& c : comps)
    for (auto& p : c)
      if (auto it = to.find(p.chord); it != to.end()) p.chord = it->second;
  return KnotoidCode(std::move(comps));
}

bool is_insertion(const MoveInstance& m) { return m.rule == Rule::R1Insert || m.rule == Rule::R2Insert; }
bool is_deletion(const MoveInstance& m) { return m.rule == Rule::R1Delete || m.rule == Rule::R2Delete; }

}  // namespace

PropertyResult prop_flat_writhe_relation(int cases, std::uint64_t seed) {
  return run_cases("f_n(flatten D) = w_n(D) - w_-n(D)", cases, seed, [](std::mt19937_64& rng) -> std::string {
    KnotoidCode d = random_code(rng, uniform(rng, 0, 7), ChordStyle::Classical);
    KnotoidCode f = flatten(d);
    std::string text = serialize(d);
    for (int n = 1; n <= 2 * d.chord_count() + 2; ++n)
      if (flat_nth_writhe(f, n) != nth_writhe(d, n) - nth_writhe(d, -n)) return text + " at n=" + std::to_string(n);
    for (const auto& r : crossing_reports(d))
      if (*r.weight != *r.sign * r.flat_weight) return text + " weight identity";
    if (flat_affine_polynomial(f) != to_poly(oracle::flat_poly(text))) return text + " Q disagrees with oracle";
    if (writhe(d) != oracle::writhe(text)) return text + " writhe disagrees with oracle";
    return "";
  });
}

PropertyResult prop_affine_reconstruction(int cases, std::uint64_t seed) {
  return run_cases("P = sum w_n t^n + (w_0 - w)", cases, seed, [](std::mt19937_64& rng) -> std::string {
    KnotoidCode d = random_code(rng, uniform(rng, 0, 7), ChordStyle::Classical);
    std::string text = serialize(d);
    LaurentPoly p = affine_index_polynomial(d);
    if (p != to_poly(oracle::affine_poly(text))) return text + " P disagrees with oracle";
    auto dec = affine_decomposition(d);
    if (p != dec.plus + dec.minus + LaurentPoly::constant(dec.w0_prime)) return text + " decomposition";
    LaurentPoly rebuilt = LaurentPoly::constant(nth_writhe(d, 0) - writhe(d));
    int total = nth_writhe(d, 0);
    for (int n = 1; n <= 2 * d.chord_count() + 2; ++n) {
      rebuilt.add_term(n, nth_writhe(d, n));
      rebuilt.add_term(-n, nth_writhe(d, -n));
      total += nth_writhe(d, n) + nth_writhe(d, -n);
    }
    if (rebuilt != p) return text + " reconstruction";
    if (total != writhe(d)) return text + " writhe partition";
    return "";
  });
}

PropertyResult prop_walk_affine(int cases, std::uint64_t seed) {
  return walk_invariant("P invariant under classical walks", cases, seed, 5, 40, 9,
                        [](const KnotoidCode& c) { return InvariantValue{affine_index_polynomial(c)}; });
}

PropertyResult prop_walk_flat_affine(int cases, std::uint64_t seed) {
  return run_cases("Q invariant under flat walks", cases, seed, [](std::mt19937_64& rng) -> std::string {
    KnotoidCode d = random_code(rng, uniform(rng, 0, 5), ChordStyle::Flat);
    KnotoidCode e = random_walk(d, 40, rng(), walk_opts(Flavor::Flat, 9));
    if (flat_affine_polynomial(d) != flat_affine_polynomial(e)) return walk_note(d, e);
    if (cubic_gauss_sum(d) != cubic_gauss_sum(e)) return walk_note(d, e) + " (cubic sum)";
    return "";
  });
}

PropertyResult prop_walk_intersection(int cases, std::uint64_t seed) {
  return run_cases("|i| invariant under flat walks", cases, seed, [](std::mt19937_64& rng) -> std::string {
    KnotoidCode d = random_two_component(rng, uniform(rng, 1, 5));
    KnotoidCode e = random_walk(d, 30, rng(), walk_opts(Flavor::Flat, 9));
    std::string text = serialize(d);
    int i = intersection_index(make_ordered(d, 0));
    if (i != oracle::intersection(text, 0)) return text + " i disagrees with oracle";
    if (intersection_index(make_ordered(d, 1)) != -i) return text + " swap";
    return std::abs(i) == std::abs(intersection_index(make_ordered(e, 0))) ? "" : walk_note(d, e);
  });
}

PropertyResult prop_walk_fingerprint(int cases, std::uint64_t seed) {
  return run_cases("fingerprints invariant under flat walks and reversal", cases, seed,
                   [](std::mt19937_64& rng) -> std::string {
                     bool two = uniform(rng, 0, 3) == 0;
                     KnotoidCode d = two ? random_two_component(rng, uniform(rng, 1, 4))
                                         : random_code(rng, uniform(rng, 0, 4), ChordStyle::Flat);
                     KnotoidCode e = random_walk(d, 25, rng(), walk_opts(Flavor::Flat, 7));
                     Fingerprint fd = fingerprint(d);
                     if (fd != fingerprint(e)) return walk_note(d, e);
                     if (fd != fingerprint(reverse(d))) return serialize(d) + " reversal";
                     return "";
                   });
}

PropertyResult prop_walk_F(int cases, std::uint64_t seed) {
  return walk_invariant("F invariant under classical walks", cases, seed, 4, 20, 6,
                        [](const KnotoidCode& c) { return InvariantValue{invariant_F(c)}; });
}

PropertyResult prop_walk_L(int cases, std::uint64_t seed) {
  return walk_invariant("L invariant under classical walks", cases, seed, 4, 20, 6,
                        [](const KnotoidCode& c) { return InvariantValue{invariant_L(c)}; });
}

PropertyResult prop_walk_G(int cases, std::uint64_t seed) {
  return walk_invariant("G invariant under classical walks", cases, seed, 4, 20, 6,
                        [](const KnotoidCode& c) { return InvariantValue{invariant_G(c)}; });
}

PropertyResult prop_mirror_reverse(int cases, std::uint64_t seed) {
  return run_cases("F, L: mirror negates, reversal preserves", cases, seed, [](std::mt19937_64& rng) -> std::string {
    KnotoidCode d = random_code(rng, uniform(rng, 0, 6), ChordStyle::Classical);
    std::string text = serialize(d);
    FormalSum f = invariant_F(d), l = invariant_L(d);
    if (invariant_F(mirror(d)) != -f) return text + " F mirror";
    if (invariant_F(reverse(d)) != f) return text + " F reverse";
    if (invariant_L(mirror(d)) != -l) return text + " L mirror";
    if (invariant_L(reverse(d)) != l) return text + " L reverse";
    return "";
  });
}

PropertyResult prop_second_derivative_F(int cases, std::uint64_t seed) {
  return second_derivative("F'' vanishes on 2-singular codes", InvariantKind::F, cases, seed);
}

PropertyResult prop_second_derivative_L(int cases, std::uint64_t seed) {
  return second_derivative("L'' vanishes on 2-singular codes", InvariantKind::L, cases, seed);
}

PropertyResult prop_second_derivative_G(int cases, std::uint64_t seed) {
  return second_derivative("G'' vanishes on 2-singular codes", InvariantKind::G, cases, seed);
}

PropertyResult prop_sbm_walk_homology(int cases, std::uint64_t seed) {
  return run_cases("SBM homology class invariant under flat singular walks", cases, seed,
                   [](std::mt19937_64& rng) -> std::string {
                     KnotoidCode a = random_flat_singular(rng, uniform(rng, 1, 5));
                     KnotoidCode b = random_walk(a, 20, rng(), walk_opts(Flavor::Flat, 7));
                     SBM ma = build_sbm(a);
                     if (ma.matrix() != oracle::sbm_matrix(serialize(a))) return serialize(a) + " SBM disagrees with oracle";
                     return homologous(ma, build_sbm(b)).homologous ? "" : walk_note(a, b);
                   });
}

PropertyResult prop_insert_delete_roundtrip(int cases, std::uint64_t seed) {
  return run_cases("insert/delete round trips", cases, seed, [](std::mt19937_64& rng) -> std::string {
    ChordStyle style = uniform(rng, 0, 1) ? ChordStyle::Flat : ChordStyle::Classical;
    KnotoidCode d = random_code(rng, uniform(rng, 0, 4), style, uniform(rng, 0, 1));
    auto moves = enumerate_moves(d);
    std::vector<MoveInstance> ins, del;
    for (const auto& m : moves) (is_insertion(m) ? ins : del).push_back(m);
    // Insertion followed by the matching deletion.
    const MoveInstance& m = ins[std::uniform_int_distribution<std::size_t>(0, ins.size() - 1)(rng)];
    KnotoidCode grown = apply_move(d, m);
    auto back = enumerate_reductions(grown);
    bool restored = std::any_of(back.begin(), back.end(), [&](const MoveInstance& r) {
      if (!is_deletion(r)) return false;
      auto a = r.chords, b = m.chords;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b && apply_move(grown, r) == d;
    });
    if (!restored) return serialize(d) + " + " + to_string(m.rule) + " " + m.variant;
    // Deletion followed by a matching insertion, up to the fresh chord ids.
    std::erase_if(del, [](const MoveInstance& x) { return !is_deletion(x); });
    if (del.empty()) return "";
    const MoveInstance& x = del[std::uniform_int_distribution<std::size_t>(0, del.size() - 1)(rng)];
    KnotoidCode shrunk = apply_move(d, x);
    for (const auto& y : enumerate_moves(shrunk, d.has_classical() ? Flavor::Classical : Flavor::Flat)) {
      if (!is_insertion(y) || y.chords.size() != x.chords.size()) continue;
      KnotoidCode g = apply_move(shrunk, y);
      std::map<int, int> to;
      to[y.chords[0]] = x.chords[0];
      if (x.chords.size() == 2) to[y.chords[1]] = x.chords[1];
      if (rename(g, to) == d) return "";
      if (x.chords.size() == 2) {
        std::map<int, int> swapped{{y.chords[0], x.chords[1]}, {y.chords[1], x.chords[0]}};
        if (rename(g, swapped) == d) return "";
      }
    }
    return serialize(d) + " - " + to_string(x.rule) + " " + x.variant + " has no inverse insertion";
  });
}

PropertyResult prop_parse_roundtrip(int cases, std::uint64_t seed) {
  return run_cases("parse/serialize round trips", cases, seed, [](std::mt19937_64& rng) -> std::string {
    int kind = uniform(rng, 0, 2);
    KnotoidCode c = kind == 2 ? random_flat_singular(rng, uniform(rng, 1, 5), uniform(rng, 0, 1))
                              : random_code(rng, uniform(rng, 0, 6), kind ? ChordStyle::Flat : ChordStyle::Classical,
                                            uniform(rng, 0, 2));
    std::string text = serialize(c);
    KnotoidCode back = parse(text);
    if (back != c || serialize(back) != text) return text;
    if (mirror(mirror(c)) != c || reverse(reverse(c)) != c) return text + " involution";
    if (mirror(reverse(c)) != reverse(mirror(c))) return text + " commute";
    if (flatten(mirror(c)) != flatten(c)) return text + " flatten mirror";
    if (flatten(flatten(c)) != flatten(c)) return text + " flatten idempotent";
    return "";
  });
}

const std::vector<NamedProperty>& property_suite() {
  static const std::vector<NamedProperty> suite{
      {"flat_writhe_relation", prop_flat_writhe_relation, 300},
      {"affine_reconstruction", prop_affine_reconstruction, 300},
      {"walk_affine", prop_walk_affine, 500},
      {"walk_flat_affine", prop_walk_flat_affine, 300},
      {"walk_intersection", prop_walk_intersection, 300},
      {"walk_fingerprint", prop_walk_fingerprint, 200},
      {"walk_F", prop_walk_F, 200},
      {"walk_L", prop_walk_L, 200},
      {"walk_G", prop_walk_G, 200},
      {"mirror_reverse", prop_mirror_reverse, 200},
      {"second_derivative_F", prop_second_derivative_F, 200},
      {"second_derivative_L", prop_second_derivative_L, 200},
      {"second_derivative_G", prop_second_derivative_G, 200},
      {"sbm_walk_homology", prop_sbm_walk_homology, 200},
      {"insert_delete_roundtrip", prop_insert_delete_roundtrip, 300},
      {"parse_roundtrip", prop_parse_roundtrip, 500},
  };
  return suite;
}

}  // namespace knotoid::testing
