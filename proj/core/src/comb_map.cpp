#include "vspan/comb_map.hpp"

#include "vspan/errors.hpp"

namespace vspan {

CombMap build_comb_map(const Diagram& d) {
    CombMap m;
    m.crossings = static_cast<int>(d.crossing_count());
    m.free_loops = static_cast<int>(d.free_loop_count());
    m.rotation.assign(m.dart_count(), -1);
    m.edge_pair.assign(m.dart_count(), -1);
    m.sign.resize(m.crossings);
    m.label.resize(m.crossings);
    for (int x = 0; x < m.crossings; ++x) {
        m.sign[x] = d.sign_of(x);
        m.label[x] = d.label(x);
    }

    // Counterclockwise dart order around a crossing.  With the over strand
    // running in at kOverIn and out at kOverOut, the under strand crosses
    // beneath it left to right for sign +1 and right to left for sign -1.
    for (int x = 0; x < m.crossings; ++x) {
        int oi = dart_of(x, kOverIn), ui = dart_of(x, kUnderIn);
        int oo = dart_of(x, kOverOut), uo = dart_of(x, kUnderOut);
        if (m.sign[x] > 0) {
            m.rotation[oi] = ui;
            m.rotation[ui] = oo;
            m.rotation[oo] = uo;
            m.rotation[uo] = oi;
        } else {
            m.rotation[oi] = uo;
            m.rotation[uo] = oo;
            m.rotation[oo] = ui;
            m.rotation[ui] = oi;
        }
    }

    // Bands: the out-dart of each passage meets the in-dart of the next
    // passage around its component.
    for (const auto& comp : d.components()) {
        int n = static_cast<int>(comp.size());
        for (int i = 0; i < n; ++i) {
            const Passage& cur = comp[i];
            const Passage& nxt = comp[(i + 1) % n];
            int from = dart_of(cur.crossing, cur.role == Role::Over ? kOverOut : kUnderOut);
            int to = dart_of(nxt.crossing, nxt.role == Role::Over ? kOverIn : kUnderIn);
            if (m.edge_pair[from] != -1 || m.edge_pair[to] != -1)
                throw InternalError("duplicate band edge while building map");
            m.edge_pair[from] = to;
            m.edge_pair[to] = from;
        }
    }
    for (int dart = 0; dart < m.dart_count(); ++dart)
        if (m.edge_pair[dart] == -1) throw InternalError("unpaired dart while building map");
    return m;
}

} // namespace vspan
