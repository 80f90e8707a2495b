#include "vspan/statesum.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "vspan/errors.hpp"

namespace vspan {

namespace {

// Union-find with union by size and no path compression, so every merge can
// be rolled back in O(1).  unite() always logs one entry, merging or not, so
// callers can undo blindly.
class RewindDsu {
public:
    explicit RewindDsu(int n) : parent_(n), size_(n, 1), components_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            log_.push_back(-1);
            return;
        }
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        log_.push_back(b);
        --components_;
    }

    void undo() {
        int b = log_.back();
        log_.pop_back();
        if (b < 0) return;
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
        ++components_;
    }

    int components() const { return components_; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> log_;
    int components_;
};

void unite_crossing(const CombMap& m, RewindDsu& dsu, int x, SpliceKind k) {
    int din = dart_of(x, kOverIn);
    int dout = dart_of(x, kOverOut);
    dsu.unite(din, splice_partner(din, m.sign[x], k));
    dsu.unite(dout, splice_partner(dout, m.sign[x], k));
}

// Depth-first walk over the remaining splice choices; consecutive leaves
// differ at exactly one crossing, and the union-find rewinds between them.
struct Walker {
    const CombMap& m;
    RewindDsu dsu;
    std::vector<std::vector<std::uint64_t>> counts;
    int total;
    int free_loops;

    Walker(const CombMap& map, int cols)
        : m(map),
          dsu(map.dart_count()),
          counts(map.crossings + 1, std::vector<std::uint64_t>(cols, 0)),
          total(map.crossings),
          free_loops(map.free_loops) {
        for (int dart = 0; dart < m.dart_count(); ++dart)
            if (dart < m.edge_pair[dart]) dsu.unite(dart, m.edge_pair[dart]);
    }

    void run(int x, int a_count) {
        if (x == total) {
            counts[a_count][dsu.components() + free_loops] += 1;
            return;
        }
        unite_crossing(m, dsu, x, SpliceKind::A);
        run(x + 1, a_count + 1);
        dsu.undo();
        dsu.undo();
        unite_crossing(m, dsu, x, SpliceKind::B);
        run(x + 1, a_count);
        dsu.undo();
        dsu.undo();
    }
};

} // namespace

int StateTally::min_loops(int b_splices) const {
    if (b_splices < 0 || b_splices > crossings)
        throw DomainError("B-splice count out of range");
    const auto& row = counts[crossings - b_splices];
    for (std::size_t l = 0; l < row.size(); ++l)
        if (row[l] != 0) return static_cast<int>(l);
    throw InternalError("empty state-tally row");
}

int StateTally::max_loops(int b_splices) const {
    if (b_splices < 0 || b_splices > crossings)
        throw DomainError("B-splice count out of range");
    const auto& row = counts[crossings - b_splices];
    for (std::size_t l = row.size(); l-- > 0;)
        if (row[l] != 0) return static_cast<int>(l);
    throw InternalError("empty state-tally row");
}

Diagram splice(const Diagram& d, std::int64_t crossing_label, SpliceKind kind) {
    int x = d.id_of(crossing_label);
    bool oriented = (kind == SpliceKind::A) == (d.sign_of(x) > 0);
    Occurrence over = d.occurrence(x, Role::Over);
    Occurrence under = d.occurrence(x, Role::Under);
    auto comps = d.labeled();

    // Passages strictly between two positions, walking forward cyclically.
    auto segment = [](const std::vector<LabeledPassage>& w, int after, int before) {
        std::vector<LabeledPassage> out;
        int n = static_cast<int>(w.size());
        for (int i = (after + 1) % n; i != before; i = (i + 1) % n) out.push_back(w[i]);
        return out;
    };

    // A reversed stretch flips the recorded sign of every crossing with
    // exactly one passage inside it (reversing one strand of a crossing
    // negates its handedness; reversing both restores it).
    std::map<std::int64_t, int> reversed_count;
    auto reversed = [&reversed_count](std::vector<LabeledPassage> w) {
        std::reverse(w.begin(), w.end());
        for (const auto& p : w) ++reversed_count[p.label];
        return w;
    };
    auto concat = [](std::vector<LabeledPassage> a, const std::vector<LabeledPassage>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    std::vector<std::vector<LabeledPassage>> result;
    if (over.component == under.component) {
        // The oriented reconnection cuts the component at both passages and
        // closes the two arcs separately; the disoriented one rejoins them
        // with the second arc reversed.
        const auto& w = comps[over.component];
        auto first = segment(w, over.position, under.position);
        auto second = segment(w, under.position, over.position);
        for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
            if (ci != over.component) {
                result.push_back(comps[ci]);
                continue;
            }
            if (oriented) {
                result.push_back(first);
                result.push_back(second);
            } else {
                result.push_back(concat(second, reversed(first)));
            }
        }
    } else {
        // Merging two components: oriented keeps both directions, the
        // disoriented reconnection runs the second one backwards.
        auto arc_over = segment(comps[over.component], over.position, over.position);
        auto arc_under = segment(comps[under.component], under.position, under.position);
        for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
            if (ci == under.component) continue;
            if (ci != over.component) {
                result.push_back(comps[ci]);
                continue;
            }
            result.push_back(oriented ? concat(arc_over, arc_under)
                                      : concat(arc_over, reversed(arc_under)));
        }
    }

    for (auto& comp : result)
        for (auto& p : comp) {
            auto it = reversed_count.find(p.label);
            if (it != reversed_count.end() && it->second == 1) p.sign = -p.sign;
        }
    return Diagram::build(result);
}

BracketTerm state_loops(const Diagram& d, const State& s) {
    if (s.size() != d.crossing_count())
        throw ValidationError("state must assign a splice to every crossing");
    CombMap m = build_comb_map(d);
    BracketTerm term;
    for (auto kind : s) term.natural += kind == SpliceKind::A ? 1 : -1;
    term.loops = static_cast<int>(d.free_loop_count());
    std::vector<char> seen(m.dart_count(), 0);
    for (int start = 0; start < m.dart_count(); ++start) {
        if (seen[start]) continue;
        ++term.loops;
        int dart = start;
        do {
            seen[dart] = 1;
            int across = splice_partner(dart, m.sign[crossing_of(dart)], s[crossing_of(dart)]);
            seen[across] = 1;
            dart = m.edge_pair[across];
        } while (dart != start);
    }
    return term;
}

std::pair<State, State> special_states(const Diagram& d) {
    return {State(d.crossing_count(), SpliceKind::A), State(d.crossing_count(), SpliceKind::B)};
}

std::uint64_t modified_state_count(int crossings, int j) {
    if (crossings < 0 || j < 0 || j > crossings)
        throw DomainError("modified-state distance out of range");
    std::uint64_t result = 1;
    j = std::min(j, crossings - j);
    for (int i = 0; i < j; ++i) {
        std::uint64_t next;
        if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(crossings - i), &next))
            throw ResourceLimitError("binomial coefficient overflows 64 bits");
        result = next / (i + 1);
    }
    return result;
}

void for_each_modified_state(const Diagram& d, SpliceKind base, int j,
                             const std::function<void(const State&)>& fn) {
    int c = static_cast<int>(d.crossing_count());
    if (j < 0 || j > c) throw DomainError("modified-state distance out of range");
    SpliceKind flipped = base == SpliceKind::A ? SpliceKind::B : SpliceKind::A;
    State state(c, base);
    std::vector<int> pick(j);
    for (int i = 0; i < j; ++i) pick[i] = i;
    while (true) {
        for (int i : pick) state[i] = flipped;
        fn(state);
        for (int i : pick) state[i] = base;
        // next j-combination of {0..c-1} in lexicographic order
        int i = j - 1;
        while (i >= 0 && pick[i] == c - j + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int k = i + 1; k < j; ++k) pick[k] = pick[k - 1] + 1;
    }
}

StateTally state_tally(const Diagram& d, const BracketOptions& opts) {
    int c = static_cast<int>(d.crossing_count());
    if (c > opts.max_crossings)
        throw ResourceLimitError("crossing count " + std::to_string(c) +
                                 " exceeds the state-sum limit " +
                                 std::to_string(opts.max_crossings));
    StateTally t;
    t.crossings = c;
    t.free_loops = static_cast<int>(d.free_loop_count());
    int cols = 2 * c + t.free_loops + 1;
    t.counts.assign(c + 1, std::vector<std::uint64_t>(cols, 0));
    if (c == 0) {
        t.counts[0][t.free_loops] = 1;
        return t;
    }

    CombMap m = build_comb_map(d);
    int threads = std::max(1, opts.threads);
    // Partition the state space by fixing the splices of the first few
    // crossings; workers claim prefixes and walk the rest independently.
    int prefix = 0;
    if (threads > 1) {
        while ((1 << prefix) < 4 * threads && prefix < c) ++prefix;
    }
    std::uint32_t prefix_count = 1u << prefix;
    std::atomic<std::uint32_t> next_mask{0};
    std::mutex merge_mutex;

    auto work = [&]() {
        Walker w(m, cols);
        while (true) {
            std::uint32_t mask = next_mask.fetch_add(1);
            if (mask >= prefix_count) break;
            int a_count = 0;
            for (int x = 0; x < prefix; ++x) {
                bool a = (mask >> x) & 1u;
                unite_crossing(m, w.dsu, x, a ? SpliceKind::A : SpliceKind::B);
                if (a) ++a_count;
            }
            w.run(prefix, a_count);
            for (int x = 0; x < 2 * prefix; ++x) w.dsu.undo();
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (int a = 0; a <= c; ++a)
            for (int l = 0; l < cols; ++l) t.counts[a][l] += w.counts[a][l];
    };

    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return t;
}

LaurentPoly bracket_from_tally(const StateTally& t) {
    LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    int max_loops = 0;
    for (const auto& row : t.counts)
        for (std::size_t l = 0; l < row.size(); ++l)
            if (row[l] != 0) max_loops = std::max(max_loops, static_cast<int>(l));
    std::vector<LaurentPoly> delta_pow(max_loops + 1);
    delta_pow[0] = LaurentPoly::one();
    for (int k = 1; k <= max_loops; ++k) delta_pow[k] = delta_pow[k - 1] * delta;

    LaurentPoly out;
    for (int a = 0; a <= t.crossings; ++a)
        for (std::size_t l = 0; l < t.counts[a].size(); ++l) {
            std::uint64_t n = t.counts[a][l];
            if (n == 0) continue;
            if (l == 0) throw InternalError("state with zero loops");
            out += LaurentPoly::monomial(BigInt(n), 2 * a - t.crossings) *
                   delta_pow[l - 1];
        }
    return out;
}

LaurentPoly bracket(const Diagram& d, const BracketOptions& opts) {
    return bracket_from_tally(state_tally(d, opts));
}

LaurentPoly f_poly(const Diagram& d, const BracketOptions& opts) {
    int w = d.writhe();
    LaurentPoly correction = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
    return correction * bracket(d, opts);
}

int span_f(const Diagram& d, const BracketOptions& opts) {
    return f_poly(d, opts).span();
}

} // namespace vspan
