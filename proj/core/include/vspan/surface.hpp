#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vspan/comb_map.hpp"
#include "vspan/diagram.hpp"

namespace vspan {

// Thickening a diagram's underlying 4-valent graph yields a compact oriented
// surface; its boundary circles are the orbits of the permutation "cross the
// band, then rotate".  Everything here is derived from those orbits.

// Face ids per dart.  Free loops thicken to annuli whose two boundary
// circles are numbered after the dart orbits, in component order.
struct FaceData {
    std::vector<int> orbit;  // per dart: orbit id in [0, orbit_count)
    int orbit_count = 0;
    int free_loops = 0;

    int boundary_count() const { return orbit_count + 2 * free_loops; }
};

FaceData boundary_faces(const CombMap& m);

// Corner data for one crossing: faces[slot] is the boundary-circle id of the
// corner counterclockwise from the dart in that slot; proper means the four
// corner circles are pairwise distinct.
struct CrossingFaces {
    std::int64_t label = 0;
    bool proper = false;
    std::array<int, 4> faces{};
};

struct SurfaceSummary {
    int boundary = 0;  // number of boundary circles
    int genus = 0;
    int m = 0;         // diagram components linked through shared crossings
    bool proper = false;
    std::vector<CrossingFaces> crossings;
};

// Boundary circles and corner faces only; genus and m need diagram-level
// connectivity and stay zero here.
SurfaceSummary boundary_components(const CombMap& m);

// Full summary, with genus = (2m + c - boundary) / 2.  That quantity being
// odd or negative indicates a construction bug and throws InternalError.
SurfaceSummary surface_summary(const Diagram& d);

int genus(const Diagram& d);

bool is_proper_crossing(const Diagram& d, std::int64_t crossing_label);
bool is_proper(const Diagram& d);

enum class Color : std::uint8_t { Black, White };

// 2-coloring of the boundary circles in which the two circles along every
// band, and the two circles of every free-loop annulus, get different
// colors; nullopt when the adjacency graph has an odd cycle.
std::optional<std::vector<Color>> checkerboard(const Diagram& d);

// For alternating diagrams the circles split cleanly: walk any component and
// look right as you leave a crossing; over-passages see black, under white.
// Equivalently, orbits made of over-darts are black, under-darts white.
// Free-loop circles are colored black then white.  Throws DomainError on
// non-alternating input.  Always agrees with some checkerboard coloring.
std::vector<Color> canonical_coloring(const Diagram& d);

// Realization of the pairing between special-state loops and boundary
// circles of an alternating diagram: every black circle bounds an annulus
// with exactly one all-A loop, every white circle with one all-B loop.
// Loop indices refer to trace order (dart loops first, free loops after).
struct StateBijection {
    int s_a = 0;       // loops of the all-A state, free loops included
    int s_b = 0;       // loops of the all-B state
    int boundary = 0;  // boundary circles
    bool counts_match = false;             // s_a + s_b == boundary
    bool proper_crossings_distinct = false;  // at each proper crossing the
                                             // two splice arcs lie in
                                             // distinct loops, both states
    std::vector<std::pair<SpliceKind, int>> circle_to_loop;
};

// Throws DomainError on non-alternating input, InternalError if a circle
// fails to pair with a single loop (a convention bug, not a data error).
StateBijection state_boundary_bijection(const Diagram& d);

} // namespace vspan
