#include "vspan/surface.hpp"

#include <algorithm>
#include <queue>

#include "vspan/errors.hpp"
#include "vspan/statesum.hpp"

namespace vspan {

namespace {

// Loop id per dart for a uniform splice of every crossing; loop count is
// max id + 1.  Used to line state loops up against boundary circles.
std::vector<int> uniform_state_loop_ids(const CombMap& m, SpliceKind kind, int* loop_count) {
    std::vector<int> id(m.dart_count(), -1);
    int loops = 0;
    for (int start = 0; start < m.dart_count(); ++start) {
        if (id[start] != -1) continue;
        int dart = start;
        do {
            id[dart] = loops;
            int across = splice_partner(dart, m.sign[crossing_of(dart)], kind);
            id[across] = loops;
            dart = m.edge_pair[across];
        } while (dart != start);
        ++loops;
    }
    if (loop_count) *loop_count = loops;
    return id;
}

std::array<int, 4> corner_faces_at(const CombMap& m, const FaceData& f, int crossing) {
    std::array<int, 4> corners{};
    for (int slot = 0; slot < 4; ++slot)
        corners[slot] = f.orbit[m.rotation[dart_of(crossing, slot)]];
    return corners;
}

bool all_distinct(const std::array<int, 4>& v) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j]) return false;
    return true;
}

void fill_crossing_faces(const CombMap& m, const FaceData& f, SurfaceSummary* s) {
    s->boundary = f.boundary_count();
    s->proper = true;
    s->crossings.resize(m.crossings);
    for (int x = 0; x < m.crossings; ++x) {
        CrossingFaces& cf = s->crossings[x];
        cf.label = m.label[x];
        cf.faces = corner_faces_at(m, f, x);
        cf.proper = all_distinct(cf.faces);
        if (!cf.proper) s->proper = false;
    }
}

} // namespace

FaceData boundary_faces(const CombMap& m) {
    FaceData f;
    f.free_loops = m.free_loops;
    f.orbit.assign(m.dart_count(), -1);
    for (int start = 0; start < m.dart_count(); ++start) {
        if (f.orbit[start] != -1) continue;
        int dart = start;
        do {
            f.orbit[dart] = f.orbit_count;
            dart = m.rotation[m.edge_pair[dart]];
        } while (dart != start);
        ++f.orbit_count;
    }
    return f;
}

SurfaceSummary boundary_components(const CombMap& m) {
    SurfaceSummary s;
    fill_crossing_faces(m, boundary_faces(m), &s);
    return s;
}

SurfaceSummary surface_summary(const Diagram& d) {
    CombMap m = build_comb_map(d);
    SurfaceSummary s;
    fill_crossing_faces(m, boundary_faces(m), &s);
    s.m = static_cast<int>(d.connected_components().count());
    int c = static_cast<int>(d.crossing_count());
    int doubled = 2 * s.m + c - s.boundary;
    if (doubled < 0 || doubled % 2 != 0)
        throw InternalError("genus bookkeeping broke: 2m + c - boundary = " +
                            std::to_string(doubled));
    s.genus = doubled / 2;
    return s;
}

int genus(const Diagram& d) { return surface_summary(d).genus; }

bool is_proper_crossing(const Diagram& d, std::int64_t crossing_label) {
    int x = d.id_of(crossing_label);
    CombMap m = build_comb_map(d);
    FaceData f = boundary_faces(m);
    return all_distinct(corner_faces_at(m, f, x));
}

bool is_proper(const Diagram& d) {
    CombMap m = build_comb_map(d);
    FaceData f = boundary_faces(m);
    for (int x = 0; x < m.crossings; ++x)
        if (!all_distinct(corner_faces_at(m, f, x))) return false;
    return true;
}

std::optional<std::vector<Color>> checkerboard(const Diagram& d) {
    CombMap m = build_comb_map(d);
    FaceData f = boundary_faces(m);
    int n = f.boundary_count();
    // The two circles along a band are the orbits of its two darts; the two
    // circles of a free-loop annulus are adjacent across the loop itself.
    std::vector<std::vector<int>> adjacent(n);
    for (int dart = 0; dart < m.dart_count(); ++dart) {
        if (dart < m.edge_pair[dart]) {
            adjacent[f.orbit[dart]].push_back(f.orbit[m.edge_pair[dart]]);
            adjacent[f.orbit[m.edge_pair[dart]]].push_back(f.orbit[dart]);
        }
    }
    for (int k = 0; k < f.free_loops; ++k) {
        int a = f.orbit_count + 2 * k, b = a + 1;
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }

    std::vector<int> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (int v : adjacent[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    frontier.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Color> out(n);
    for (int i = 0; i < n; ++i) out[i] = color[i] == 0 ? Color::Black : Color::White;
    return out;
}

std::vector<Color> canonical_coloring(const Diagram& d) {
    if (!d.is_alternating())
        throw DomainError("canonical coloring needs an alternating diagram");
    CombMap m = build_comb_map(d);
    FaceData f = boundary_faces(m);
    std::vector<Color> color(f.boundary_count(), Color::Black);
    std::vector<int> seen(f.orbit_count, -1);
    for (int dart = 0; dart < m.dart_count(); ++dart) {
        int over = slot_of(dart) == kOverIn || slot_of(dart) == kOverOut ? 1 : 0;
        int& mark = seen[f.orbit[dart]];
        if (mark == -1)
            mark = over;
        else if (mark != over)
            throw InternalError("mixed over/under boundary circle on an alternating diagram");
        color[f.orbit[dart]] = over ? Color::Black : Color::White;
    }
    for (int k = 0; k < f.free_loops; ++k) {
        color[f.orbit_count + 2 * k] = Color::Black;
        color[f.orbit_count + 2 * k + 1] = Color::White;
    }
    return color;
}

StateBijection state_boundary_bijection(const Diagram& d) {
    std::vector<Color> color = canonical_coloring(d);  // rejects non-alternating
    CombMap m = build_comb_map(d);
    FaceData f = boundary_faces(m);

    int a_loops = 0, b_loops = 0;
    std::vector<int> loop_a = uniform_state_loop_ids(m, SpliceKind::A, &a_loops);
    std::vector<int> loop_b = uniform_state_loop_ids(m, SpliceKind::B, &b_loops);

    StateBijection bij;
    bij.boundary = f.boundary_count();
    bij.s_a = a_loops + m.free_loops;
    bij.s_b = b_loops + m.free_loops;
    bij.counts_match = bij.s_a + bij.s_b == bij.boundary;
    bij.circle_to_loop.assign(bij.boundary, {SpliceKind::A, -1});

    // Every circle must ride along exactly one loop of its state: black
    // circles pair with all-A loops, white with all-B.
    for (int dart = 0; dart < m.dart_count(); ++dart) {
        int circle = f.orbit[dart];
        bool black = color[circle] == Color::Black;
        auto& slot = bij.circle_to_loop[circle];
        int loop = black ? loop_a[dart] : loop_b[dart];
        if (slot.second == -1)
            slot = {black ? SpliceKind::A : SpliceKind::B, loop};
        else if (slot.second != loop)
            throw InternalError("boundary circle split across two state loops");
    }
    for (int k = 0; k < m.free_loops; ++k) {
        bij.circle_to_loop[f.orbit_count + 2 * k] = {SpliceKind::A, a_loops + k};
        bij.circle_to_loop[f.orbit_count + 2 * k + 1] = {SpliceKind::B, b_loops + k};
    }

    // Injectivity; with counts_match this makes the pairing a bijection.
    std::vector<char> hit_a(bij.s_a, 0), hit_b(bij.s_b, 0);
    for (const auto& [kind, loop] : bij.circle_to_loop) {
        if (loop < 0) throw InternalError("boundary circle left unpaired");
        auto& hit = kind == SpliceKind::A ? hit_a : hit_b;
        if (hit[loop]) throw InternalError("two boundary circles share a state loop");
        hit[loop] = 1;
    }

    // At a proper crossing the two arcs of either splice belong to two
    // different loops of that state.
    bij.proper_crossings_distinct = true;
    for (int x = 0; x < m.crossings; ++x) {
        if (!all_distinct(corner_faces_at(m, f, x))) continue;
        int oi = dart_of(x, kOverIn), oo = dart_of(x, kOverOut);
        if (loop_a[oi] == loop_a[oo] || loop_b[oi] == loop_b[oo])
            bij.proper_crossings_distinct = false;
    }
    return bij;
}

} // namespace vspan
