#include "knotoid/code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "knotoid/errors.hpp"

namespace knotoid {

Role flat_role(Role r, int sign) {
  switch (r) {
    case Role::Over:
      return sign > 0 ? Role::ArrowTail : Role::ArrowHead;
    case Role::Under:
      return sign > 0 ? Role::ArrowHead : Role::ArrowTail;
    default:
      return r;
  }
}

namespace {

enum class ChordType { Classical, Arrow, Singular };

ChordType type_of(Role r) {
  if (is_classical(r)) return ChordType::Classical;
  if (is_arrow(r)) return ChordType::Arrow;
  return ChordType::Singular;
}

// Ordering used to pick the canonical start of a closed component.
int role_rank(Role r) { return static_cast<int>(r); }

}  // namespace

void canonicalize_closed(Component& c) {
  if (c.size() < 2) return;
  auto best = std::min_element(c.begin(), c.end(), [](const Passage& a, const Passage& b) {
    if (a.chord != b.chord) return a.chord < b.chord;
    return role_rank(a.role) < role_rank(b.role);
  });
  std::rotate(c.begin(), best, c.end());
}

void validate(const std::vector<Component>& comps) {
  if (comps.empty()) raise(errc::kValidity, "code has no components");
  struct Seen {
    std::vector<Passage> passages;
  };
  std::map<int, Seen> chords;
  for (const auto& comp : comps) {
    for (const auto& p : comp) {
      if (p.chord < 1) raise(errc::kValidity, "chord ids must be >= 1");
      bool signed_role = is_classical(p.role);
      if (signed_role && p.sign != 1 && p.sign != -1)
        raise(errc::kValidity, "chord " + std::to_string(p.chord) + ": classical passage needs a sign");
      if (!signed_role && p.sign != 0)
        raise(errc::kValidity, "chord " + std::to_string(p.chord) + ": sign on a non-classical passage");
      if (p.preferred && !is_singular(p.role))
        raise(errc::kValidity, "chord " + std::to_string(p.chord) + ": star on a non-singular passage");
      chords[p.chord].passages.push_back(p);
    }
  }
  bool any_classical = false;
  bool any_arrow = false;
  int preferred = 0;
  for (const auto& [id, seen] : chords) {
    const auto& ps = seen.passages;
    std::string tag = "chord " + std::to_string(id);
    if (ps.size() != 2)
      raise(errc::kValidity, tag + " appears " + std::to_string(ps.size()) + " times");
    ChordType t0 = type_of(ps[0].role);
    if (t0 != type_of(ps[1].role)) raise(errc::kValidity, tag + ": passages of different types");
    switch (t0) {
      case ChordType::Classical:
        any_classical = true;
        if (ps[0].role == ps[1].role) raise(errc::kValidity, tag + ": needs one Over and one Under");
        if (ps[0].sign != ps[1].sign) raise(errc::kValidity, tag + ": sign mismatch");
        break;
      case ChordType::Arrow:
      case ChordType::Singular:
        if (t0 == ChordType::Arrow) any_arrow = true;
        if (ps[0].role == ps[1].role) raise(errc::kValidity, tag + ": needs one tail and one head");
        break;
    }
    if (ps[0].preferred != ps[1].preferred)
      raise(errc::kValidity, tag + ": star must mark both passages");
    if (ps[0].preferred) {
      if (preferred != 0) raise(errc::kValidity, "more than one preferred chord");
      preferred = id;
    }
  }
  if (any_classical && any_arrow) raise(errc::kValidity, "classical and flat chords mixed");
}

KnotoidCode::KnotoidCode() : comps_(1) {}

KnotoidCode::KnotoidCode(std::vector<Component> comps) : comps_(std::move(comps)) {
  validate(comps_);
  for (std::size_t i = 1; i < comps_.size(); ++i) canonicalize_closed(comps_[i]);
}

bool KnotoidCode::has_classical() const {
  for (const auto& c : comps_)
    for (const auto& p : c)
      if (is_classical(p.role)) return true;
  return false;
}

bool KnotoidCode::has_arrows() const {
  for (const auto& c : comps_)
    for (const auto& p : c)
      if (is_arrow(p.role)) return true;
  return false;
}

bool KnotoidCode::has_singular() const {
  for (const auto& c : comps_)
    for (const auto& p : c)
      if (is_singular(p.role)) return true;
  return false;
}

Kind KnotoidCode::kind() const {
  bool sing = has_singular();
  if (has_arrows()) return sing ? Kind::FlatSingular : Kind::Flat;
  if (has_classical()) return sing ? Kind::ClassicalSingular : Kind::Classical;
  // Only singular chords, or none: singular-only codes are treated as flat singular.
  return sing ? Kind::FlatSingular : Kind::Classical;
}

int KnotoidCode::chord_count() const {
  int n = 0;
  for (const auto& c : comps_) n += static_cast<int>(c.size());
  return n / 2;
}

std::vector<int> KnotoidCode::chords() const {
  std::vector<int> out;
  for (const auto& c : comps_)
    for (const auto& p : c) out.push_back(p.chord);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int KnotoidCode::max_chord() const {
  int m = 0;
  for (const auto& c : comps_)
    for (const auto& p : c) m = std::max(m, p.chord);
  return m;
}

bool KnotoidCode::contains(int chord) const {
  for (const auto& c : comps_)
    for (const auto& p : c)
      if (p.chord == chord) return true;
  return false;
}

std::array<Location, 2> KnotoidCode::locate(int chord) const {
  std::array<Location, 2> out{};
  int found = 0;
  for (int ci = 0; ci < static_cast<int>(comps_.size()); ++ci)
    for (int pi = 0; pi < static_cast<int>(comps_[ci].size()); ++pi)
      if (comps_[ci][pi].chord == chord && found < 2) out[found++] = {ci, pi};
  if (found != 2) raise(errc::kNotFound, "chord " + std::to_string(chord) + " not in code");
  return out;
}

int KnotoidCode::preferred_chord() const {
  for (const auto& c : comps_)
    for (const auto& p : c)
      if (p.preferred) return p.chord;
  return 0;
}

namespace {

Passage parse_token(std::string_view tok) {
  auto bad = [&](const std::string& why) -> Passage {
    raise(errc::kSyntax, "token '" + std::string(tok) + "': " + why);
  };
  std::size_t i = 0;
  Role role;
  bool singular = false;
  if (tok.size() >= 2 && tok[0] == 'S' && (tok[1] == 'A' || tok[1] == 'B')) {
    role = tok[1] == 'A' ? Role::SingTail : Role::SingHead;
    singular = true;
    i = 2;
  } else if (!tok.empty() && (tok[0] == 'O' || tok[0] == 'U' || tok[0] == 'A' || tok[0] == 'B')) {
    switch (tok[0]) {
      case 'O': role = Role::Over; break;
      case 'U': role = Role::Under; break;
      case 'A': role = Role::ArrowTail; break;
      default: role = Role::ArrowHead; break;
    }
    i = 1;
  } else {
    return bad("unknown role");
  }
  std::size_t digits = i;
  while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits]))) ++digits;
  if (digits == i) return bad("missing chord id");
  if (digits - i > 9) return bad("chord id too large");
  Passage p;
  p.role = role;
  p.chord = std::stoi(std::string(tok.substr(i, digits - i)));
  if (p.chord < 1) return bad("chord id must be >= 1");
  std::string_view rest = tok.substr(digits);
  if (is_classical(role)) {
    if (rest == "+") p.sign = 1;
    else if (rest == "-") p.sign = -1;
    else return bad("classical passage needs exactly one sign");
  } else if (singular) {
    if (rest == "*") p.preferred = true;
    else if (!rest.empty()) return bad("unexpected suffix");
  } else if (!rest.empty()) {
    return bad("unexpected suffix");
  }
  return p;
}

}  // namespace

KnotoidCode parse(std::string_view text) {
  std::vector<Component> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    std::string_view part = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    std::istringstream in{std::string(part)};
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    if (toks.empty()) raise(errc::kSyntax, "empty component (use E for an empty one)");
    Component comp;
    if (toks.size() == 1 && toks[0] == "E") {
      comps.push_back(comp);
    } else {
      for (const auto& t : toks) {
        if (t == "E") raise(errc::kSyntax, "E cannot be mixed with passages");
        comp.push_back(parse_token(t));
      }
      comps.push_back(std::move(comp));
    }
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return KnotoidCode(std::move(comps));
}

std::string serialize(const Passage& p) {
  std::string out;
  switch (p.role) {
    case Role::Over: out = "O"; break;
    case Role::Under: out = "U"; break;
    case Role::ArrowTail: out = "A"; break;
    case Role::ArrowHead: out = "B"; break;
    case Role::SingTail: out = "SA"; break;
    case Role::SingHead: out = "SB"; break;
  }
  out += std::to_string(p.chord);
  if (p.sign > 0) out += '+';
  if (p.sign < 0) out += '-';
  if (p.preferred) out += '*';
  return out;
}

std::string serialize(const KnotoidCode& code) {
  std::string out;
  bool first_comp = true;
  for (const auto& comp : code.components()) {
    if (!first_comp) out += " / ";
    first_comp = false;
    if (comp.empty()) {
      out += "E";
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) out += ' ';
      out += serialize(comp[i]);
    }
  }
  return out;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Classical: return "Classical";
    case Kind::ClassicalSingular: return "ClassicalSingular";
    case Kind::Flat: return "Flat";
    case Kind::FlatSingular: return "FlatSingular";
  }
  return "?";
}

KnotoidCode flatten(const KnotoidCode& code) {
  auto comps = code.components();
  for (auto& c : comps)
    for (auto& p : c) {
      if (is_classical(p.role)) {
        p.role = flat_role(p.role, p.sign);
        p.sign = 0;
      }
    }
  return KnotoidCode(std::move(comps));
}

KnotoidCode mirror(const KnotoidCode& code) {
  auto comps = code.components();
  for (auto& c : comps)
    for (auto& p : c) {
      if (is_classical(p.role)) {
        p.role = p.role == Role::Over ? Role::Under : Role::Over;
        p.sign = -p.sign;
      }
    }
  return KnotoidCode(std::move(comps));
}

KnotoidCode reverse(const KnotoidCode& code) {
  auto comps = code.components();
  for (auto& c : comps) std::reverse(c.begin(), c.end());
  return KnotoidCode(std::move(comps));
}

KnotoidCode add_unknot(const KnotoidCode& code) {
  auto comps = code.components();
  comps.emplace_back();
  return KnotoidCode(std::move(comps));
}

OrderedTwoComponent make_ordered(const KnotoidCode& code, int ell1) {
  if (code.component_count() != 2)
    raise(errc::kComponentCount, "expected 2 components, got " + std::to_string(code.component_count()));
  if (ell1 != 0 && ell1 != 1) raise(errc::kOutOfRange, "ell1 must be 0 or 1");
  return {ell1, 1 - ell1, code};
}

OrderedTwoComponent swapped(const OrderedTwoComponent& v) { return {v.ell2, v.ell1, v.code}; }

}  // namespace knotoid
