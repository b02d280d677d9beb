#include "knotoid/vassiliev.hpp"

#include <algorithm>
#include <cstdlib>

#include "knotoid/errors.hpp"
#include "knotoid/invariants.hpp"
#include "knotoid/sbm.hpp"
#include "knotoid/surgery.hpp"

namespace knotoid {

std::string Fingerprint::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(payload.size() * 2);
  for (unsigned char c : payload) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

namespace {

KnotoidCode as_flat(const KnotoidCode& code) { return code.has_classical() ? flatten(code) : code; }

std::string one_component_payload(const KnotoidCode& flat) {
  auto key = [](const KnotoidCode& c) {
    return "Q=" + flat_affine_polynomial(c).key() + ";cubic=" + std::to_string(cubic_gauss_sum(c)) +
           ";kink=" + homology_certificate(build_sbm(singular_kink(c, 0)));
  };
  return std::min(key(flat), key(reverse(flat)));
}

std::string singular_payload(const KnotoidCode& flat) {
  KnotoidCode alpha = flat;
  if (alpha.preferred_chord() == 0) {
    std::vector<int> sing;
    for (int c : alpha.chords())
      if (is_singular(alpha.role_of(c))) sing.push_back(c);
    if (sing.size() != 1) raise(errc::kNoPreferred, "flat singular code needs one preferred chord");
    auto comps = alpha.components();
    for (auto& comp : comps)
      for (auto& p : comp)
        if (p.chord == sing[0]) p.preferred = true;
    alpha = KnotoidCode(std::move(comps));
  }
  return std::min(homology_certificate(build_sbm(alpha)), homology_certificate(build_sbm(reverse(alpha))));
}

}  // namespace

Fingerprint fingerprint(const KnotoidCode& code) {
  KnotoidCode flat = as_flat(code);
  std::size_t comps = flat.component_count();
  if (comps > 2) raise(errc::kUnsupported, "fingerprints cover at most 2 components");
  if (flat.has_singular()) {
    if (comps != 1) raise(errc::kUnsupported, "singular fingerprints need a single open component");
    return {1, "S|" + singular_payload(flat)};
  }
  if (comps == 1) return {1, "1|" + one_component_payload(flat)};
  int i = std::abs(intersection_index(make_ordered(flat, 0)));
  Component open;
  for (const auto& p : flat.open()) {
    auto locs = flat.locate(p.chord);
    if (locs[0].comp == 0 && locs[1].comp == 0) open.push_back(p);
  }
  return {2, "2|i=" + std::to_string(i) + ";" + one_component_payload(KnotoidCode({open}))};
}

void FormalSum::add(const Fingerprint& fp, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(fp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum::Coeff FormalSum::coeff(const Fingerprint& fp) const {
  auto it = terms_.find(fp);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [fp, c] : o.terms_) add(fp, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [fp, c] : o.terms_) add(fp, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(Coeff k) {
  if (k == 0) terms_.clear();
  for (auto& [fp, c] : terms_) c *= k;
  return *this;
}

namespace {

void require_classical_knotoid(const KnotoidCode& code, const char* what) {
  if (code.component_count() != 1)
    raise(errc::kComponentCount, std::string(what) + " needs a single open component");
  if (code.has_arrows() || code.has_singular())
    raise(errc::kNotClassical, std::string(what) + " needs a classical code");
}

template <class Surgery>
FormalSum crossing_sum(const KnotoidCode& code, Surgery surgery, const KnotoidCode& base) {
  FormalSum out;
  int w = 0;
  for (int c : code.chords()) {
    int s = code.sign_of(c);
    w += s;
    out.add(fingerprint(surgery(c)), s);
  }
  if (w != 0) out.add(fingerprint(base), -w);
  return out;
}

}  // namespace

FormalSum invariant_F(const KnotoidCode& code) {
  require_classical_knotoid(code, "F");
  return crossing_sum(code, [&](int c) { return zero_smooth(code, c); }, flatten(code));
}

FormalSum invariant_L(const KnotoidCode& code) {
  require_classical_knotoid(code, "L");
  return crossing_sum(code, [&](int c) { return one_smooth(code, c).code; }, add_unknot(flatten(code)));
}

FormalSum invariant_G(const KnotoidCode& code) {
  require_classical_knotoid(code, "G");
  return crossing_sum(code, [&](int c) { return glue(code, c); }, singular_kink(code, 0));
}

std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::F: return "F";
    case InvariantKind::L: return "L";
    case InvariantKind::G: return "G";
    case InvariantKind::P: return "P";
  }
  return "?";
}

InvariantKind parse_invariant_kind(const std::string& name) {
  if (name == "F" || name == "f") return InvariantKind::F;
  if (name == "L" || name == "l") return InvariantKind::L;
  if (name == "G" || name == "g") return InvariantKind::G;
  if (name == "P" || name == "p") return InvariantKind::P;
  raise(errc::kUnsupported, "unknown invariant " + name);
}

bool InvariantValue::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value);
}

InvariantValue& InvariantValue::operator+=(const InvariantValue& o) {
  if (value.index() != o.value.index()) raise(errc::kUnsupported, "mixed invariant value types");
  if (auto* f = std::get_if<FormalSum>(&value)) *f += std::get<FormalSum>(o.value);
  else std::get<LaurentPoly>(value) += std::get<LaurentPoly>(o.value);
  return *this;
}

InvariantValue& InvariantValue::operator*=(std::int64_t k) {
  std::visit([k](auto& v) { v *= k; }, value);
  return *this;
}

InvariantValue evaluate(InvariantKind kind, const KnotoidCode& code) {
  switch (kind) {
    case InvariantKind::F: return {invariant_F(code)};
    case InvariantKind::L: return {invariant_L(code)};
    case InvariantKind::G: return {invariant_G(code)};
    case InvariantKind::P: return {affine_index_polynomial(code)};
  }
  return {};
}

InvariantValue derivative(InvariantKind kind, const KnotoidCode& code) {
  if (code.has_arrows()) raise(errc::kNotClassical, "derivative needs classical and singular chords only");
  std::vector<int> sing;
  for (int c : code.chords())
    if (is_singular(code.role_of(c))) sing.push_back(c);
  if (sing.empty()) raise(errc::kNotSingular, "derivative needs at least one singular chord");
  if (sing.size() > 16) raise(errc::kSizeLimit, "too many singular chords");
  InvariantValue total = kind == InvariantKind::P ? InvariantValue{LaurentPoly{}} : InvariantValue{FormalSum{}};
  for (unsigned mask = 0; mask < (1u << sing.size()); ++mask) {
    KnotoidCode cur = code;
    int sign = 1;
    for (std::size_t i = 0; i < sing.size(); ++i) {
      int s = (mask >> i) & 1u ? -1 : 1;
      sign *= s;
      cur = resolve(cur, sing[i], s);
    }
    InvariantValue v = evaluate(kind, cur);
    v *= sign;
    total += v;
  }
  return total;
}

KnotoidCode random_singular_code(int classical, int singular, std::mt19937_64& rng) {
  int m = classical + singular;
  std::vector<int> slots;
  for (int c = 1; c <= m; ++c) {
    slots.push_back(c);
    slots.push_back(c);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<int> kind(m + 1), first_role(m + 1), sign(m + 1);
  std::uniform_int_distribution<int> coin(0, 1);
  // Chord types are shuffled too so singular chords are not always the largest ids.
  std::vector<int> types(m);
  for (int c = 0; c < m; ++c) types[c] = c < singular ? 1 : 0;
  std::shuffle(types.begin(), types.end(), rng);
  for (int c = 1; c <= m; ++c) {
    kind[c] = types[c - 1];
    first_role[c] = coin(rng);
    sign[c] = coin(rng) ? 1 : -1;
  }
  std::vector<bool> seen(m + 1, false);
  Component comp;
  for (int c : slots) {
    bool first = !seen[c];
    seen[c] = true;
    bool a = first == (first_role[c] == 0);
    Passage p;
    p.chord = c;
    if (kind[c] == 1) {
      p.role = a ? Role::SingTail : Role::SingHead;
    } else {
      p.role = a ? Role::Over : Role::Under;
      p.sign = sign[c];
    }
    comp.push_back(p);
  }
  return KnotoidCode({comp});
}

OrderReport order_check(InvariantKind kind, int order, int samples, std::uint64_t seed, int max_classical) {
  if (order < 0) raise(errc::kOutOfRange, "order must be >= 0");
  std::mt19937_64 rng(seed);
  OrderReport r;
  r.kind = kind;
  r.order = order;
  r.samples = samples;
  std::uniform_int_distribution<int> extra(0, std::max(0, max_classical));
  for (int i = 0; i < samples; ++i) {
    KnotoidCode code = random_singular_code(extra(rng), order + 1, rng);
    if (!derivative(kind, code).is_zero()) {
      ++r.nonzero;
      if (r.counterexamples.size() < 10) r.counterexamples.push_back(serialize(code));
    }
  }
  return r;
}

}  // namespace knotoid
