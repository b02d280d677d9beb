#pragma once

#include "knotoid/code.hpp"

namespace knotoid {

// Smoothing against orientation at a classical chord. The result is flat and keeps the
// direction of the arc between the chord's passages; chords with exactly one passage
// on that arc have their arrows reversed.
KnotoidCode zero_smooth(const KnotoidCode& code, int chord);

struct OneSmoothing {
  KnotoidCode code;
  OrderedTwoComponent view;
};

// Smoothing along orientation. The arc between the chord's passages becomes a closed
// component; ell1 is the component carrying the arc from the chord's tail to its head.
OneSmoothing one_smooth(const KnotoidCode& code, int chord);

// Turns a classical chord into the preferred singular chord and flattens the rest.
KnotoidCode glue(const KnotoidCode& code, int chord);

// Flattens the code and inserts a preferred singular kink before open position gap.
KnotoidCode singular_kink(const KnotoidCode& code, int gap = 0);

// Resolves a singular chord into a classical crossing of the given sign. When the other
// chords are flat the chord becomes the flat arrow both resolutions flatten to.
KnotoidCode resolve(const KnotoidCode& code, int chord, int sign);

}  // namespace knotoid
