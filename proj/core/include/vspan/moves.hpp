#pragma once

#include <cstdint>

#include "vspan/diagram.hpp"

namespace vspan {

// Local transformations on Gauss codes.  virtualize changes the f-polynomial
// in general; the twist and the two Reidemeister insertions never do, which
// is what the fuzz tests lean on.

// Replace a real crossing by a virtual one.  Virtual crossings leave no
// trace in the code, so both passages are simply deleted; components that
// lose all passages become free loops.
Diagram virtualize(const Diagram& d, std::int64_t crossing_label);

// Replace a crossing by its mirror flanked by two virtual crossings.  The
// flanking virtuals vanish from the code and swap which strand is on top,
// so the two passages trade Over/Under roles; the crossing keeps its sign
// and the writhe is unchanged.  Involutive.
Diagram kauffman_twist(const Diagram& d, std::int64_t crossing_label);

// Insertion point: the gap before `position` in a component's cyclic word.
// A component of length L has gaps 0..L-1; a free loop has the single gap 0.
struct Gap {
    int component = 0;
    int position = 0;
};

// First Reidemeister insertion: a kink of the given sign at the gap.
Diagram insert_r1(const Diagram& d, Gap at, int sign);

// Second Reidemeister insertion: slides one strand over the other, adding a
// canceling pair of crossings.  The strand through `over_gap` picks up two
// Over passages, the one through `under_gap` the matching Under passages,
// with opposite signs.  The gaps may sit in one component or two.
Diagram insert_r2(const Diagram& d, Gap over_gap, Gap under_gap);

} // namespace vspan
