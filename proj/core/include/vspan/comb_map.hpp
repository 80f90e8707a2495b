#pragma once

#include <cstdint>
#include <vector>

#include "vspan/diagram.hpp"

namespace vspan {

// Dart-based combinatorial map of a diagram.  Each crossing owns four darts,
// one per strand end, numbered 4*crossing + slot.  In-darts point into the
// crossing, out-darts leave it; over/under refers to the strand the dart
// belongs to.
inline constexpr int kOverIn = 0;
inline constexpr int kUnderIn = 1;
inline constexpr int kOverOut = 2;
inline constexpr int kUnderOut = 3;

inline int dart_of(int crossing, int slot) { return 4 * crossing + slot; }
inline int crossing_of(int dart) { return dart / 4; }
inline int slot_of(int dart) { return dart % 4; }

// rotation[d] is the next dart counterclockwise around the crossing of d.
// edge_pair[d] is the other end of the band containing d; bands join the
// out-dart of each passage to the in-dart of the cyclically next passage on
// the same component.  Free loops carry no darts and are tracked by count.
struct CombMap {
    int crossings = 0;
    int free_loops = 0;
    std::vector<int> rotation;
    std::vector<int> edge_pair;
    std::vector<int> sign;                // per crossing, +1 or -1
    std::vector<std::int64_t> label;      // user-facing label per crossing

    int dart_count() const { return 4 * crossings; }
};

CombMap build_comb_map(const Diagram& d);

enum class SpliceKind { A, B };

// The dart joined to `dart` across its crossing when the crossing is
// smoothed.  An A-splice of a positive crossing (and a B-splice of a
// negative one) connects each in-dart to the out-dart of the other strand,
// so the two arcs respect orientation; the opposite splice connects in to in
// and out to out.  Inline: this sits in the innermost state-sum loop.
inline int splice_partner(int dart, int crossing_sign, SpliceKind kind) {
    static constexpr int kOriented[4] = {kUnderOut, kOverOut, kUnderIn, kOverIn};
    static constexpr int kDisoriented[4] = {kUnderIn, kOverIn, kUnderOut, kOverOut};
    bool oriented = (kind == SpliceKind::A) == (crossing_sign > 0);
    int slot = slot_of(dart);
    return dart - slot + (oriented ? kOriented[slot] : kDisoriented[slot]);
}

} // namespace vspan
