#include "knotoid/invariants.hpp"

#include <cstdlib>
#include <map>

#include "knotoid/errors.hpp"

namespace knotoid {

namespace {

bool passage_is_tail(const Passage& p) {
  return is_classical(p.role) ? is_tail(flat_role(p.role, p.sign)) : is_tail(p.role);
}

void require_single_open(const KnotoidCode& code, const char* what) {
  if (code.component_count() != 1)
    raise(errc::kComponentCount, std::string(what) + " needs a single open component");
}

void require_classical(const KnotoidCode& code, const char* what) {
  if (code.has_arrows() || code.has_singular())
    raise(errc::kNotClassical, std::string(what) + " needs a classical code");
}

int sgn(int x) { return (x > 0) - (x < 0); }

}  // namespace

ArcLabeling label_arcs(const KnotoidCode& code) {
  const auto& comps = code.components();
  ArcLabeling out;
  out.incoming.resize(comps.size());
  std::vector<bool> done(comps.size(), false);

  auto run = [&](int ci, int start_pos, int start_label) {
    const Component& c = comps[ci];
    int n = static_cast<int>(c.size());
    auto& inc = out.incoming[ci];
    inc.assign(n, 0);
    int label = start_label;
    for (int k = 0; k < n; ++k) {
      int pos = (start_pos + k) % n;
      inc[pos] = label;
      label += passage_is_tail(c[pos]) ? -1 : 1;
    }
    if (ci != 0 && label != start_label)
      raise(errc::kInconsistentLabeling,
            "closed component " + std::to_string(ci) + " has label drift " + std::to_string(label - start_label));
    done[ci] = true;
  };

  run(0, 0, 0);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int ci = 1; ci < static_cast<int>(comps.size()); ++ci) {
      if (done[ci]) continue;
      for (int pos = 0; pos < static_cast<int>(comps[ci].size()) && !done[ci]; ++pos) {
        auto locs = code.locate(comps[ci][pos].chord);
        for (const auto& l : locs) {
          if (l.comp != ci && done[l.comp]) {
            run(ci, pos, out.incoming[l.comp][l.pos]);
            progress = true;
            break;
          }
        }
      }
    }
  }
  for (int ci = 1; ci < static_cast<int>(comps.size()); ++ci)
    if (!done[ci]) run(ci, 0, 0);
  return out;
}

std::vector<std::pair<int, int>> flat_weights(const KnotoidCode& code) {
  require_single_open(code, "flat weights");
  std::map<int, std::pair<int, int>> in;  // chord -> (label at tail, label at head)
  int label = 0;
  for (const auto& p : code.open()) {
    bool tail = passage_is_tail(p);
    if (tail) in[p.chord].first = label;
    else in[p.chord].second = label;
    label += tail ? -1 : 1;
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [c, ab] : in) out.emplace_back(c, ab.first - (ab.second + 1));
  return out;
}

int writhe(const KnotoidCode& code) {
  require_classical(code, "writhe");
  int w = 0;
  for (int c : code.chords()) w += code.sign_of(c);
  return w;
}

std::vector<CrossingReport> crossing_reports(const KnotoidCode& code) {
  std::vector<CrossingReport> out;
  for (const auto& [c, wp] : flat_weights(code)) {
    Role r = code.role_of(c);
    if (is_singular(r)) continue;
    CrossingReport rep;
    rep.chord = c;
    rep.flat_weight = wp;
    if (is_classical(r)) {
      int s = code.sign_of(c);
      rep.sign = s;
      rep.weight = s * wp;
    }
    out.push_back(rep);
  }
  return out;
}

LaurentPoly affine_index_polynomial(const KnotoidCode& code) {
  require_single_open(code, "affine index polynomial");
  require_classical(code, "affine index polynomial");
  LaurentPoly p;
  for (const auto& r : crossing_reports(code)) {
    p.add_term(*r.weight, *r.sign);
    p.add_term(0, -*r.sign);
  }
  return p;
}

int nth_writhe(const KnotoidCode& code, int n) {
  require_single_open(code, "n-th writhe");
  require_classical(code, "n-th writhe");
  int w = 0;
  for (const auto& r : crossing_reports(code))
    if (*r.weight == n) w += *r.sign;
  return w;
}

AffineDecomposition affine_decomposition(const KnotoidCode& code) {
  require_single_open(code, "affine decomposition");
  require_classical(code, "affine decomposition");
  AffineDecomposition d;
  int w0 = 0;
  int w = 0;
  for (const auto& r : crossing_reports(code)) {
    w += *r.sign;
    if (*r.weight > 0) d.plus.add_term(*r.weight, *r.sign);
    else if (*r.weight < 0) d.minus.add_term(*r.weight, *r.sign);
    else w0 += *r.sign;
  }
  d.w0_prime = w0 - w;
  return d;
}

int flat_nth_writhe(const KnotoidCode& code, int n) {
  if (n <= 0) raise(errc::kOutOfRange, "flat n-th writhe needs n > 0");
  int f = 0;
  for (const auto& [c, wp] : flat_weights(code))
    if (std::abs(wp) == n) f += sgn(wp);
  return f;
}

LaurentPoly flat_affine_polynomial(const KnotoidCode& code) {
  LaurentPoly q;
  for (const auto& [c, wp] : flat_weights(code))
    if (wp != 0) q.add_term(std::abs(wp), sgn(wp));
  return q;
}

int intersection_index(const OrderedTwoComponent& view) {
  const KnotoidCode& code = view.code;
  if (code.component_count() != 2)
    raise(errc::kComponentCount, "intersection index needs exactly 2 components");
  int total = 0;
  for (int c : code.chords()) {
    auto locs = code.locate(c);
    if (locs[0].comp == locs[1].comp) continue;
    const Location& tail = passage_is_tail(code.at(locs[0])) ? locs[0] : locs[1];
    total += tail.comp == view.ell1 ? 1 : -1;
  }
  return total;
}

}  // namespace knotoid
