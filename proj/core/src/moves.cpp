#include "knotoid/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "knotoid/errors.hpp"
#include "knotoid_variant_table.hpp"

namespace knotoid {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::R1Insert: return "R1_insert";
    case Rule::R1Delete: return "R1_delete";
    case Rule::R2Insert: return "R2_insert";
    case Rule::R2Delete: return "R2_delete";
    case Rule::R3: return "R3";
    case Rule::PreferredSwitch: return "PreferredSwitch";
  }
  return "?";
}

namespace {

struct Tables {
  std::vector<VariantRow> rows;
  // Pattern -> variant tag, per family and flavor.
  std::map<std::string, std::string> match[3][2];
  // Insertion rows per family (R1, R2) and flavor.
  std::vector<const VariantRow*> insert[2][2];
};

int family_index(const std::string& f) { return f == "R1" ? 0 : f == "R2" ? 1 : 2; }

const Tables& tables() {
  static const Tables t = [] {
    Tables out;
    std::istringstream in(detail::kVariantTableTsv);
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cols;
      std::size_t start = 0;
      while (true) {
        auto tab = line.find('\t', start);
        cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
      }
      if (cols.size() != 4) continue;
      out.rows.push_back({cols[0], cols[1], cols[2], cols[3]});
    }
    for (const auto& r : out.rows) {
      int fam = family_index(r.family);
      int flat = r.variant.rfind("flat", 0) == 0 ? 1 : 0;
      out.match[fam][flat][r.pattern] = r.variant;
      if (fam < 2) out.insert[fam][flat].push_back(&r);
    }
    return out;
  }();
  return t;
}

bool resolve_flat(const KnotoidCode& code, Flavor f) {
  if (f == Flavor::Flat) return true;
  if (f == Flavor::Classical) return false;
  return code.has_arrows() || code.kind() == Kind::FlatSingular;
}

std::string token(const Passage& p, char name) {
  std::string out;
  switch (p.role) {
    case Role::Over: out = "O"; break;
    case Role::Under: out = "U"; break;
    case Role::ArrowTail:
    case Role::SingTail: out = "A"; break;
    case Role::ArrowHead:
    case Role::SingHead: out = "B"; break;
  }
  out += name;
  if (p.sign > 0) out += '+';
  if (p.sign < 0) out += '-';
  return out;
}

Passage from_token(const std::string& tok, const std::vector<int>& chords) {
  Passage p;
  switch (tok[0]) {
    case 'O': p.role = Role::Over; break;
    case 'U': p.role = Role::Under; break;
    case 'A': p.role = Role::ArrowTail; break;
    default: p.role = Role::ArrowHead; break;
  }
  p.chord = chords.at(tok[1] - 'x');
  if (tok.size() > 2) p.sign = tok[2] == '+' ? 1 : -1;
  return p;
}

std::vector<std::vector<std::string>> pattern_pairs(const std::string& pattern) {
  std::vector<std::vector<std::string>> out(1);
  std::istringstream in(pattern);
  for (std::string t; in >> t;) {
    if (t == "|") out.emplace_back();
    else out.back().push_back(t);
  }
  return out;
}

int next_pos(const Component& c, int comp, int pos) {
  int n = static_cast<int>(c.size());
  if (comp == 0) return pos + 1 < n ? pos + 1 : -1;
  return n >= 2 ? (pos + 1) % n : -1;
}

struct Pair {
  Location a;
  Location b;
};

std::vector<Pair> adjacent_pairs(const KnotoidCode& code) {
  std::vector<Pair> out;
  const auto& comps = code.components();
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    int n = static_cast<int>(comps[ci].size());
    int last = ci == 0 ? n - 1 : (n == 2 ? 1 : n);
    for (int pos = 0; pos < last; ++pos) {
      int nx = next_pos(comps[ci], ci, pos);
      if (nx >= 0) out.push_back({{ci, pos}, {ci, nx}});
    }
  }
  return out;
}

bool disjoint(const Pair& p, const Pair& q) {
  return p.a != q.a && p.a != q.b && p.b != q.a && p.b != q.b;
}

std::vector<Location> gaps(const KnotoidCode& code) {
  std::vector<Location> out;
  const auto& comps = code.components();
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    int n = static_cast<int>(comps[ci].size());
    int count = ci == 0 ? n + 1 : std::max(n, 1);
    for (int g = 0; g < count; ++g) out.push_back({ci, g});
  }
  return out;
}

// Kind of chord usable by a table lookup: -1 excluded, 0 classical, 1 flat.
int chord_flavor(const Passage& p, bool allow_singular) {
  if (is_classical(p.role)) return 0;
  if (is_arrow(p.role)) return 1;
  return allow_singular ? 1 : -1;
}

void add_r1_deletions(const KnotoidCode& code, const std::vector<Pair>& pairs, std::vector<MoveInstance>& out) {
  const auto& t = tables();
  for (const auto& pr : pairs) {
    const Passage& a = code.at(pr.a);
    const Passage& b = code.at(pr.b);
    if (a.chord != b.chord) continue;
    int fl = chord_flavor(a, false);
    if (fl < 0) continue;
    auto it = t.match[0][fl].find(token(a, 'x') + " " + token(b, 'x'));
    if (it == t.match[0][fl].end()) continue;
    out.push_back({Rule::R1Delete, {pr.a}, {a.chord}, it->second});
  }
}

void add_r2_deletions(const KnotoidCode& code, const std::vector<Pair>& pairs, std::vector<MoveInstance>& out) {
  const auto& t = tables();
  std::map<std::pair<int, int>, std::vector<const Pair*>> by_chords;
  for (const auto& pr : pairs) {
    const Passage& a = code.at(pr.a);
    const Passage& b = code.at(pr.b);
    if (a.chord == b.chord) continue;
    int fa = chord_flavor(a, false);
    if (fa < 0 || fa != chord_flavor(b, false)) continue;
    by_chords[{std::min(a.chord, b.chord), std::max(a.chord, b.chord)}].push_back(&pr);
  }
  for (const auto& [key, list] : by_chords) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const Pair& p = *list[i];
        const Pair& q = *list[j];
        if (!disjoint(p, q)) continue;
        const Passage& a = code.at(p.a);
        int x = a.chord;
        auto name = [&](const Passage& s) { return s.chord == x ? 'x' : 'y'; };
        std::string pat = token(a, 'x') + " " + token(code.at(p.b), name(code.at(p.b))) + " | " +
                          token(code.at(q.a), name(code.at(q.a))) + " " + token(code.at(q.b), name(code.at(q.b)));
        int fl = chord_flavor(a, false);
        auto it = t.match[1][fl].find(pat);
        if (it == t.match[1][fl].end()) continue;
        int y = code.at(p.b).chord;
        out.push_back({Rule::R2Delete, {p.a, q.a}, {x, y}, it->second});
      }
  }
}

int shared_chord(const KnotoidCode& code, const Pair& p, const Pair& q) {
  int p1 = code.at(p.a).chord, p2 = code.at(p.b).chord;
  int q1 = code.at(q.a).chord, q2 = code.at(q.b).chord;
  int hits = 0;
  int shared = 0;
  for (int c : {p1, p2})
    if (c == q1 || c == q2) {
      ++hits;
      shared = c;
    }
  return hits == 1 ? shared : 0;
}

void add_r3(const KnotoidCode& code, const std::vector<Pair>& pairs, std::vector<MoveInstance>& out) {
  const auto& t = tables();
  bool flat_code = code.has_arrows() || code.kind() == Kind::FlatSingular;
  std::vector<const Pair*> usable;
  for (const auto& pr : pairs) {
    const Passage& a = code.at(pr.a);
    const Passage& b = code.at(pr.b);
    if (a.chord == b.chord) continue;
    int fa = chord_flavor(a, flat_code), fb = chord_flavor(b, flat_code);
    if (fa < 0 || fa != fb) continue;
    usable.push_back(&pr);
  }
  int n = static_cast<int>(usable.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Pair& p = *usable[i];
      const Pair& q = *usable[j];
      int x = shared_chord(code, p, q);
      if (x == 0 || !disjoint(p, q)) continue;
      for (int k = j + 1; k < n; ++k) {
        const Pair& r = *usable[k];
        if (!disjoint(p, r) || !disjoint(q, r)) continue;
        int y = shared_chord(code, p, r);
        int z = shared_chord(code, q, r);
        if (y == 0 || z == 0 || y == x || z == x || y == z) continue;
        auto name = [&](const Passage& s) { return s.chord == x ? 'x' : s.chord == y ? 'y' : 'z'; };
        std::string pat;
        for (const Pair* pr : {&p, &q, &r}) {
          if (!pat.empty()) pat += " | ";
          pat += token(code.at(pr->a), name(code.at(pr->a))) + " " + token(code.at(pr->b), name(code.at(pr->b)));
        }
        int fl = chord_flavor(code.at(p.a), flat_code);
        auto it = t.match[2][fl].find(pat);
        if (it == t.match[2][fl].end()) continue;
        out.push_back({Rule::R3, {p.a, q.a, r.a}, {x, y, z}, it->second});
      }
    }
}

bool adjacent(const KnotoidCode& code, Location u, Location v) {
  if (u.comp != v.comp) return false;
  const Component& c = code.components()[u.comp];
  return next_pos(c, u.comp, u.pos) == v.pos || next_pos(c, v.comp, v.pos) == u.pos;
}

std::pair<Location, Location> tail_head(const KnotoidCode& code, int chord) {
  auto l = code.locate(chord);
  const Passage& p = code.at(l[0]);
  bool tail = is_classical(p.role) ? is_tail(flat_role(p.role, p.sign)) : is_tail(p.role);
  return tail ? std::pair{l[0], l[1]} : std::pair{l[1], l[0]};
}

void add_switches(const KnotoidCode& code, std::vector<MoveInstance>& out) {
  if (code.kind() != Kind::FlatSingular) return;
  int pref = code.preferred_chord();
  if (pref == 0) return;
  auto [tp, hp] = tail_head(code, pref);
  for (int q : code.chords()) {
    if (q == pref) continue;
    Role r = code.role_of(q);
    if (is_classical(r)) continue;
    auto [tq, hq] = tail_head(code, q);
    if (adjacent(code, tp, hq) && adjacent(code, tq, hp))
      out.push_back({Rule::PreferredSwitch, {tq, hq}, {pref, q}, is_arrow(r) ? "arrow" : "singular"});
  }
}

std::vector<MoveInstance> rewrites(const KnotoidCode& code, bool switches) {
  std::vector<MoveInstance> out;
  auto pairs = adjacent_pairs(code);
  add_r1_deletions(code, pairs, out);
  add_r2_deletions(code, pairs, out);
  add_r3(code, pairs, out);
  if (switches) add_switches(code, out);
  return out;
}

MoveInstance r1_insert(const KnotoidCode& code, const std::vector<Location>& g, const std::vector<const VariantRow*>& rows,
                       std::size_t index) {
  int k = code.max_chord() + 1;
  const VariantRow* row = rows[index % rows.size()];
  return {Rule::R1Insert, {g[index / rows.size()]}, {k}, row->variant};
}

MoveInstance r2_insert(const KnotoidCode& code, const std::vector<Location>& g, const std::vector<const VariantRow*>& rows,
                       std::size_t index) {
  int k = code.max_chord() + 1;
  const VariantRow* row = rows[index % rows.size()];
  std::size_t pair_index = index / rows.size();
  std::size_t n = g.size();
  std::size_t i = 0;
  // Unrank pair_index into (i, j) with i <= j.
  while (pair_index >= n - i) {
    pair_index -= n - i;
    ++i;
  }
  std::size_t j = i + pair_index;
  return {Rule::R2Insert, {g[i], g[j]}, {k, k + 1}, row->variant};
}

const VariantRow* find_row(const std::string& family, const std::string& variant) {
  for (const auto& r : tables().rows)
    if (r.family == family && r.variant == variant) return &r;
  return nullptr;
}

[[noreturn]] void stale(const std::string& why) { raise(errc::kStaleMove, why); }

KnotoidCode apply_insert(const KnotoidCode& code, const MoveInstance& m) {
  const char* fam = m.rule == Rule::R1Insert ? "R1" : "R2";
  const VariantRow* row = find_row(fam, m.variant);
  if (!row) stale("unknown variant " + m.variant);
  std::size_t want = m.rule == Rule::R1Insert ? 1 : 2;
  if (m.site.size() != want || m.chords.size() != want) stale("malformed insertion");
  for (int c : m.chords)
    if (c < 1 || code.contains(c)) stale("insertion chord id not fresh");
  if (want == 2 && m.chords[0] == m.chords[1]) stale("insertion chord ids coincide");
  bool flat_row = row->variant.rfind("flat", 0) == 0;
  if (flat_row ? code.has_classical() : (code.has_arrows() || code.kind() == Kind::FlatSingular))
    stale("variant flavor does not match the code");
  auto all_gaps = gaps(code);
  for (const auto& s : m.site)
    if (std::find(all_gaps.begin(), all_gaps.end(), s) == all_gaps.end()) stale("insertion gap out of range");
  if (want == 2 && m.site[1] < m.site[0]) stale("insertion gaps out of order");

  auto pairs = pattern_pairs(row->pattern);
  auto comps = code.components();
  auto insert_pair = [&](Location g, const std::vector<std::string>& toks) {
    Component& c = comps[g.comp];
    std::vector<Passage> ps;
    for (const auto& t : toks) ps.push_back(from_token(t, m.chords));
    c.insert(c.begin() + g.pos, ps.begin(), ps.end());
  };
  if (want == 1) {
    std::vector<std::string> toks = pairs[0];
    insert_pair(m.site[0], toks);
  } else {
    insert_pair(m.site[1], pairs[1]);
    insert_pair(m.site[0], pairs[0]);
  }
  return KnotoidCode(std::move(comps));
}

}  // namespace

const std::vector<VariantRow>& variant_table() { return tables().rows; }

std::vector<MoveInstance> enumerate_reductions(const KnotoidCode& code) { return rewrites(code, true); }

std::vector<MoveInstance> enumerate_moves(const KnotoidCode& code, Flavor flavor) {
  auto out = rewrites(code, true);
  bool flat = resolve_flat(code, flavor);
  if (flat ? code.has_classical() : (code.has_arrows() || code.kind() == Kind::FlatSingular)) return out;
  auto g = gaps(code);
  const auto& t = tables();
  const auto& r1 = t.insert[0][flat ? 1 : 0];
  const auto& r2 = t.insert[1][flat ? 1 : 0];
  for (std::size_t i = 0; i < g.size() * r1.size(); ++i) out.push_back(r1_insert(code, g, r1, i));
  std::size_t npairs = g.size() * (g.size() + 1) / 2;
  for (std::size_t i = 0; i < npairs * r2.size(); ++i) out.push_back(r2_insert(code, g, r2, i));
  return out;
}

KnotoidCode apply_move(const KnotoidCode& code, const MoveInstance& m) {
  if (m.rule == Rule::R1Insert || m.rule == Rule::R2Insert) return apply_insert(code, m);
  auto current = rewrites(code, true);
  if (std::find(current.begin(), current.end(), m) == current.end())
    stale(to_string(m.rule) + " does not match the code");
  auto comps = code.components();
  auto next = [&](Location l) { return Location{l.comp, next_pos(comps[l.comp], l.comp, l.pos)}; };
  switch (m.rule) {
    case Rule::R1Delete:
    case Rule::R2Delete: {
      std::vector<Location> doomed;
      for (const auto& s : m.site) {
        doomed.push_back(s);
        doomed.push_back(next(s));
      }
      std::sort(doomed.rbegin(), doomed.rend());
      for (const auto& l : doomed) comps[l.comp].erase(comps[l.comp].begin() + l.pos);
      break;
    }
    case Rule::R3:
      for (const auto& s : m.site) std::swap(comps[s.comp][s.pos], comps[s.comp][next(s).pos]);
      break;
    case Rule::PreferredSwitch: {
      int old_pref = m.chords[0];
      int new_pref = m.chords[1];
      bool to_arrow = m.variant == "arrow";
      for (auto& c : comps)
        for (auto& p : c) {
          if (p.chord == old_pref) {
            p.preferred = false;
            if (to_arrow) p.role = is_tail(p.role) ? Role::ArrowTail : Role::ArrowHead;
          } else if (p.chord == new_pref) {
            p.preferred = true;
            p.role = is_tail(p.role) ? Role::SingTail : Role::SingHead;
          }
        }
      break;
    }
    default:
      break;
  }
  return KnotoidCode(std::move(comps));
}

KnotoidCode random_walk(const KnotoidCode& code, int steps, std::uint64_t seed, const WalkOptions& opt) {
  std::mt19937_64 rng(seed);
  KnotoidCode cur = code;
  const auto& t = tables();
  for (int step = 0; step < steps; ++step) {
    auto local = rewrites(cur, opt.preferred_switch);
    std::map<Rule, std::vector<const MoveInstance*>> fam;
    for (const auto& m : local) fam[m.rule].push_back(&m);

    bool flat = resolve_flat(cur, opt.flavor);
    bool flavor_ok = !(flat ? cur.has_classical() : (cur.has_arrows() || cur.kind() == Kind::FlatSingular));
    auto g = gaps(cur);
    const auto& r1 = t.insert[0][flat ? 1 : 0];
    const auto& r2 = t.insert[1][flat ? 1 : 0];
    std::size_t n1 = g.size() * r1.size();
    std::size_t n2 = g.size() * (g.size() + 1) / 2 * r2.size();
    bool allow1 = flavor_ok && (opt.max_chords <= 0 || cur.chord_count() + 1 <= opt.max_chords);
    bool allow2 = flavor_ok && (opt.max_chords <= 0 || cur.chord_count() + 2 <= opt.max_chords);

    std::vector<Rule> families;
    for (Rule r : {Rule::R1Insert, Rule::R1Delete, Rule::R2Insert, Rule::R2Delete, Rule::R3, Rule::PreferredSwitch}) {
      if (r == Rule::R1Insert ? (allow1 && n1 > 0) : r == Rule::R2Insert ? (allow2 && n2 > 0) : fam.count(r) > 0)
        families.push_back(r);
    }
    if (families.empty()) break;
    Rule pick = families[std::uniform_int_distribution<std::size_t>(0, families.size() - 1)(rng)];
    MoveInstance m;
    if (pick == Rule::R1Insert) {
      m = r1_insert(cur, g, r1, std::uniform_int_distribution<std::size_t>(0, n1 - 1)(rng));
    } else if (pick == Rule::R2Insert) {
      m = r2_insert(cur, g, r2, std::uniform_int_distribution<std::size_t>(0, n2 - 1)(rng));
    } else {
      const auto& list = fam[pick];
      m = *list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
    }
    cur = apply_move(cur, m);
  }
  return cur;
}

KnotoidCode simplify(const KnotoidCode& code) {
  KnotoidCode cur = code;
  while (true) {
    std::vector<MoveInstance> dels;
    auto pairs = adjacent_pairs(cur);
    add_r1_deletions(cur, pairs, dels);
    add_r2_deletions(cur, pairs, dels);
    if (dels.empty()) return cur;
    cur = apply_move(cur, *std::min_element(dels.begin(), dels.end()));
  }
}

}  // namespace knotoid
