#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "vspan/comb_map.hpp"
#include "vspan/diagram.hpp"
#include "vspan/laurent.hpp"

namespace vspan {

// Total splice assignment, indexed by dense crossing id.
using State = std::vector<SpliceKind>;

struct BracketTerm {
    int natural = 0;  // #A-splices minus #B-splices
    int loops = 0;    // loops of the spliced diagram, free loops included
};

struct BracketOptions {
    int max_crossings = 26;
    int threads = 1;
};

// Tally of the full state sum: counts[a][l] is the number of states with
// exactly a A-splices whose spliced diagram has l loops (free loops of the
// original diagram included).
struct StateTally {
    int crossings = 0;
    int free_loops = 0;
    std::vector<std::vector<std::uint64_t>> counts;

    // Extremes of the loop count over states with exactly `b_splices` B
    // choices.  DomainError if out of range.
    int min_loops(int b_splices) const;
    int max_loops(int b_splices) const;
};

// Diagram with one crossing smoothed away.  The crossing is named by its
// user-facing label; the result keeps all other labels and has one crossing
// fewer.  Components may merge, split, or degenerate to free loops.
Diagram splice(const Diagram& d, std::int64_t crossing_label, SpliceKind kind);

// Loop count of a single state by direct cycle tracing, without building the
// spliced diagram.  Throws ValidationError if the state is not total.
BracketTerm state_loops(const Diagram& d, const State& s);

// All-A and all-B states.
std::pair<State, State> special_states(const Diagram& d);

// Number of states differing from a pure state in exactly j crossings.
std::uint64_t modified_state_count(int crossings, int j);

// Visit every state differing from the pure `base` state in exactly j
// crossings; j must lie in [0, crossing count].
void for_each_modified_state(const Diagram& d, SpliceKind base, int j,
                             const std::function<void(const State&)>& fn);

// Full enumeration of all 2^c states.  States are walked in depth-first
// splice order (adjacent leaves differ at one crossing) with loop counts
// maintained incrementally by a rewindable union-find.  Throws
// ResourceLimitError past the crossing limit.
StateTally state_tally(const Diagram& d, const BracketOptions& opts = {});

LaurentPoly bracket_from_tally(const StateTally& t);
LaurentPoly bracket(const Diagram& d, const BracketOptions& opts = {});

// f_D(A) = (-A^3)^(-writhe) * bracket(D), invariant under generalized
// Reidemeister moves.
LaurentPoly f_poly(const Diagram& d, const BracketOptions& opts = {});

// Max degree minus min degree of the f-polynomial; DomainError if f is zero.
int span_f(const Diagram& d, const BracketOptions& opts = {});

} // namespace vspan
