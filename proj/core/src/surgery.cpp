#include "knotoid/surgery.hpp"

#include <algorithm>
#include <set>

#include "knotoid/errors.hpp"

namespace knotoid {

namespace {

struct Split {
  Component prefix;
  Component middle;
  Component suffix;
  Passage first;
  Passage second;
};

Split split_open(const KnotoidCode& code, int chord, const char* what) {
  if (code.component_count() != 1)
    raise(errc::kComponentCount, std::string(what) + " needs a single open component");
  if (!code.contains(chord)) raise(errc::kNotFound, "chord " + std::to_string(chord) + " not in code");
  auto l = code.locate(chord);
  const Component& c = code.open();
  Split s;
  s.prefix.assign(c.begin(), c.begin() + l[0].pos);
  s.middle.assign(c.begin() + l[0].pos + 1, c.begin() + l[1].pos);
  s.suffix.assign(c.begin() + l[1].pos + 1, c.end());
  s.first = c[l[0].pos];
  s.second = c[l[1].pos];
  return s;
}

void flatten_in_place(Component& c) {
  for (auto& p : c)
    if (is_classical(p.role)) {
      p.role = flat_role(p.role, p.sign);
      p.sign = 0;
    }
}

Role swap_arrow(Role r) {
  switch (r) {
    case Role::ArrowTail: return Role::ArrowHead;
    case Role::ArrowHead: return Role::ArrowTail;
    case Role::SingTail: return Role::SingHead;
    case Role::SingHead: return Role::SingTail;
    default: return r;
  }
}

}  // namespace

KnotoidCode zero_smooth(const KnotoidCode& code, int chord) {
  Split s = split_open(code, chord, "zero_smooth");
  if (!is_classical(s.first.role)) raise(errc::kNotClassical, "chord " + std::to_string(chord) + " is not classical");
  flatten_in_place(s.prefix);
  flatten_in_place(s.middle);
  flatten_in_place(s.suffix);
  std::multiset<int> in_middle;
  for (const auto& p : s.middle) in_middle.insert(p.chord);
  auto fix = [&](Component& part) {
    for (auto& p : part)
      if (in_middle.count(p.chord) == 1) p.role = swap_arrow(p.role);
  };
  std::reverse(s.prefix.begin(), s.prefix.end());
  std::reverse(s.suffix.begin(), s.suffix.end());
  fix(s.prefix);
  fix(s.middle);
  fix(s.suffix);
  Component out = s.suffix;
  out.insert(out.end(), s.middle.begin(), s.middle.end());
  out.insert(out.end(), s.prefix.begin(), s.prefix.end());
  return KnotoidCode({out});
}

OneSmoothing one_smooth(const KnotoidCode& code, int chord) {
  Split s = split_open(code, chord, "one_smooth");
  if (is_singular(s.first.role)) raise(errc::kNotApplicable, "cannot smooth a singular chord");
  bool first_is_tail = is_classical(s.first.role) ? is_tail(flat_role(s.first.role, s.first.sign)) : is_tail(s.first.role);
  Component open = s.prefix;
  open.insert(open.end(), s.suffix.begin(), s.suffix.end());
  flatten_in_place(open);
  flatten_in_place(s.middle);
  KnotoidCode out({open, s.middle});
  // The tail->head arc is the middle when the tail comes first, else the open remainder.
  int ell1 = first_is_tail ? 1 : 0;
  return {out, make_ordered(out, ell1)};
}

KnotoidCode glue(const KnotoidCode& code, int chord) {
  if (!code.contains(chord)) raise(errc::kNotFound, "chord " + std::to_string(chord) + " not in code");
  if (!is_classical(code.role_of(chord)))
    raise(errc::kNotClassical, "chord " + std::to_string(chord) + " is not classical");
  auto comps = code.components();
  for (auto& c : comps)
    for (auto& p : c) {
      if (p.chord == chord) {
        p.role = is_tail(flat_role(p.role, p.sign)) ? Role::SingTail : Role::SingHead;
        p.sign = 0;
        p.preferred = true;
      } else if (is_classical(p.role)) {
        p.role = flat_role(p.role, p.sign);
        p.sign = 0;
      }
    }
  return KnotoidCode(std::move(comps));
}

KnotoidCode singular_kink(const KnotoidCode& code, int gap) {
  auto comps = flatten(code).components();
  Component& open = comps[0];
  if (gap < 0 || gap > static_cast<int>(open.size()))
    raise(errc::kOutOfRange, "gap " + std::to_string(gap) + " outside the open component");
  int k = code.max_chord() + 1;
  Passage t{k, Role::SingTail, 0, true};
  Passage h{k, Role::SingHead, 0, true};
  open.insert(open.begin() + gap, {t, h});
  return KnotoidCode(std::move(comps));
}

KnotoidCode resolve(const KnotoidCode& code, int chord, int sign) {
  if (sign != 1 && sign != -1) raise(errc::kOutOfRange, "sign must be +1 or -1");
  if (!code.contains(chord)) raise(errc::kNotFound, "chord " + std::to_string(chord) + " not in code");
  if (!is_singular(code.role_of(chord)))
    raise(errc::kNotSingular, "chord " + std::to_string(chord) + " is not singular");
  bool flat = code.has_arrows();
  auto comps = code.components();
  for (auto& c : comps)
    for (auto& p : c) {
      if (p.chord != chord) continue;
      bool tail = p.role == Role::SingTail;
      p.preferred = false;
      if (flat) {
        p.role = tail ? Role::ArrowTail : Role::ArrowHead;
      } else if (sign > 0) {
        p.role = tail ? Role::Over : Role::Under;
        p.sign = 1;
      } else {
        p.role = tail ? Role::Under : Role::Over;
        p.sign = -1;
      }
    }
  return KnotoidCode(std::move(comps));
}

}  // namespace knotoid
