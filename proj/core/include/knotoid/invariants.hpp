#pragma once

#include <optional>
#include <vector>

#include "knotoid/code.hpp"
#include "knotoid/laurent.hpp"

namespace knotoid {

// Label of the arc entering each passage, indexed like the code's components.
struct ArcLabeling {
  std::vector<std::vector<int>> incoming;
  int start_label = 0;
};

struct CrossingReport {
  int chord = 0;
  std::optional<int> sign;    // classical chords only
  std::optional<int> weight;  // W_D(c) = sign * W+(c), classical chords only
  int flat_weight = 0;        // W+(c)
};

struct AffineDecomposition {
  LaurentPoly plus;   // sum over n > 0 of w_n t^n
  LaurentPoly minus;  // sum over n < 0 of w_n t^n
  int w0_prime = 0;   // w_0 - w
};

// Tails decrement the running label, heads increment it; the open component starts at 0.
// Closed components are seeded from their first chord shared with an already labelled component.
ArcLabeling label_arcs(const KnotoidCode& code);

// W+ for every classical or flat chord of a single-open-component code.
// Singular chords are weighted like arrows.
std::vector<std::pair<int, int>> flat_weights(const KnotoidCode& code);

int writhe(const KnotoidCode& code);
std::vector<CrossingReport> crossing_reports(const KnotoidCode& code);

LaurentPoly affine_index_polynomial(const KnotoidCode& code);
AffineDecomposition affine_decomposition(const KnotoidCode& code);
int nth_writhe(const KnotoidCode& code, int n);

int flat_nth_writhe(const KnotoidCode& code, int n);
LaurentPoly flat_affine_polynomial(const KnotoidCode& code);

// Sum over inter-component chords: +1 if the tail lies on ell1, -1 if the head does.
int intersection_index(const OrderedTwoComponent& view);

// Degree-3 Gauss diagram formula on the arrow word of the open component.
// Invariant under flat moves; vanishes on the trivial knotoid.
int cubic_gauss_sum(const KnotoidCode& code);

}  // namespace knotoid
