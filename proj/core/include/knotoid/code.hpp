#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotoid {

enum class Role : std::uint8_t { Over, Under, ArrowTail, ArrowHead, SingTail, SingHead };

enum class Kind { Classical, ClassicalSingular, Flat, FlatSingular };

inline bool is_classical(Role r) { return r == Role::Over || r == Role::Under; }
inline bool is_arrow(Role r) { return r == Role::ArrowTail || r == Role::ArrowHead; }
inline bool is_singular(Role r) { return r == Role::SingTail || r == Role::SingHead; }
// Tail end of a flat or singular arrow. Meaningless for classical roles.
inline bool is_tail(Role r) { return r == Role::ArrowTail || r == Role::SingTail; }

// Arrow role of a classical passage: the Over passage is the tail for sign +1,
// the Under passage is the tail for sign -1.
Role flat_role(Role r, int sign);

struct Passage {
  int chord = 0;
  Role role = Role::ArrowTail;
  int sign = 0;  // +1 or -1 for Over/Under, 0 otherwise
  bool preferred = false;

  auto operator<=>(const Passage&) const = default;
};

using Component = std::vector<Passage>;

struct Location {
  int comp = -1;
  int pos = -1;
  auto operator<=>(const Location&) const = default;
};

// One open component (index 0) plus zero or more closed components.
// Construction validates and rotates closed components to their canonical start.
class KnotoidCode {
 public:
  KnotoidCode();
  explicit KnotoidCode(std::vector<Component> comps);

  const std::vector<Component>& components() const { return comps_; }
  const Component& open() const { return comps_.front(); }
  std::size_t component_count() const { return comps_.size(); }

  Kind kind() const;
  bool has_classical() const;
  bool has_arrows() const;
  bool has_singular() const;
  int chord_count() const;
  std::vector<int> chords() const;  // sorted
  int max_chord() const;
  bool contains(int chord) const;
  // Positions of the chord's two passages, in traversal order (component, position).
  std::array<Location, 2> locate(int chord) const;
  const Passage& at(Location l) const { return comps_[l.comp][l.pos]; }
  // Role of the chord on the first located passage.
  Role role_of(int chord) const { return at(locate(chord)[0]).role; }
  int sign_of(int chord) const { return at(locate(chord)[0]).sign; }
  // Preferred singular chord, or 0 when absent.
  int preferred_chord() const;

  bool operator==(const KnotoidCode&) const = default;
  auto operator<=>(const KnotoidCode&) const = default;

 private:
  std::vector<Component> comps_;
};

// Throws ValidityError when the components violate pairing, sign or star rules.
void validate(const std::vector<Component>& comps);
void canonicalize_closed(Component& c);

KnotoidCode parse(std::string_view text);
std::string serialize(const KnotoidCode& code);
std::string serialize(const Passage& p);
std::string to_string(Kind k);

KnotoidCode flatten(const KnotoidCode& code);
KnotoidCode mirror(const KnotoidCode& code);
KnotoidCode reverse(const KnotoidCode& code);
KnotoidCode add_unknot(const KnotoidCode& code);

// Two-component code with an explicit choice of which component is ell1.
struct OrderedTwoComponent {
  int ell1 = 0;
  int ell2 = 1;
  KnotoidCode code;
};

// Default view of a parsed two-component code: ell1 is the open component.
OrderedTwoComponent make_ordered(const KnotoidCode& code, int ell1 = 0);
OrderedTwoComponent swapped(const OrderedTwoComponent& v);

}  // namespace knotoid
