#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "knotoid/code.hpp"

namespace knotoid {

// Singular based matrix (G, s, d, b). Stored normalized: s is element 0, d the last one.
class SBM {
 public:
  using Matrix = std::vector<std::vector<int>>;

  SBM();
  // Elements in any order; s and d name marked elements. Throws ValidityError unless b is
  // square, skew-symmetric and the marks are distinct members.
  SBM(std::vector<std::string> labels, Matrix b, const std::string& s, const std::string& d);

  int size() const { return static_cast<int>(labels_.size()); }
  int s() const { return 0; }
  int d() const { return size() - 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& matrix() const { return b_; }
  int at(int g, int h) const { return b_[g][h]; }
  int index_of(const std::string& label) const;

  // Matrix rows and columns in the given label order.
  Matrix in_order(const std::vector<std::string>& order) const;

  bool operator==(const SBM&) const = default;

 private:
  std::vector<std::string> labels_;
  Matrix b_;
};

// The singular open string's arrows give the elements: s, the non-preferred arrows
// (labelled by chord id, ascending) and d, the preferred arrow.
SBM build_sbm(const KnotoidCode& alpha);

enum class ElementKind { None, Annihilating, Core, Complementary };
enum class MarkerKind { None, AnnihilatingLike, CoreLike };

struct ElementClass {
  std::string label;
  ElementKind kind = ElementKind::None;
  std::vector<std::string> partners;  // complementary partners
};

struct Classification {
  std::vector<ElementClass> elements;  // unmarked elements, in matrix order
  MarkerKind d = MarkerKind::None;
};

Classification classify(const SBM& m);
std::string to_string(ElementKind k);
std::string to_string(MarkerKind k);

// Elementary extensions and the singularity switch. Empty labels are generated.
SBM extend_m1(const SBM& m, std::string label = "");
SBM extend_m2(const SBM& m, std::string label = "");
// row gives b(g1, h) for every existing element h in matrix order.
SBM extend_m3(const SBM& m, const std::vector<int>& row, std::string l1 = "", std::string l2 = "");
// Makes unmarked element g the new d. Requires b(g,h) + b(d,h) = b(s,h) for all h.
SBM switch_n(const SBM& m, int g);
// Inverses: delete an annihilating element, a core element, or a complementary pair.
SBM reduce_m1(const SBM& m, int g);
SBM reduce_m2(const SBM& m, int g);
SBM reduce_m3(const SBM& m, int g1, int g2);

bool is_primitive(const SBM& m);

struct Reduction {
  SBM result;
  std::vector<std::string> steps;
};
Reduction reduce_to_primitive(const SBM& m);

// Maximum number of unmarked elements handled by brute force; KNOTOID_SBM_PERM_LIMIT overrides 9.
std::size_t perm_limit();

// Canonical serialization up to isomorphism fixing s and d. Throws SizeLimit beyond the bound.
std::string canonical_form(const SBM& m);
bool isomorphic(const SBM& a, const SBM& b);

// Complete invariant of the homology class: the least canonical form among the primitives
// reachable from the reduced matrix by N and the composite extension-switch moves.
std::string homology_certificate(const SBM& m);

struct HomologyResult {
  bool homologous = false;
  std::string certificate;  // "isomorphism", "N", "M1^-1.N.M2", "M2^-1.N.M1", "chain" or "none"
};
HomologyResult homologous(const SBM& a, const SBM& b);

}  // namespace knotoid
