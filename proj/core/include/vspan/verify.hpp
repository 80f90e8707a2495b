#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vspan/diagram.hpp"
#include "vspan/statesum.hpp"

namespace vspan {

// Structured outcome of one check.  A report only carries verdicts when the
// hypotheses hold; out-of-hypothesis inputs come back inapplicable with a
// note, never as errors, so sweeps don't abort.
struct Report {
    std::string subject;  // Gauss code of the diagram checked
    bool applicable = false;
    std::string note;
    std::map<std::string, long long> measured;
    std::map<std::string, long long> predicted;
    std::map<std::string, bool> checks;

    bool passed() const {
        if (!applicable) return false;
        for (const auto& entry : checks)
            if (!entry.second) return false;
        return true;
    }
};

// span == 4(c - g + m - 1) for proper alternating diagrams.
Report verify_alt_span(const Diagram& d, const BracketOptions& opts = {});

// Virtualize one proper crossing of a proper alternating diagram and check
// span' == 4(c' - g' + m - 1) + 2 together with the bookkeeping driving it:
// the boundary count drops by 3, the genus rises by 1, m stays, and both
// special-state loop counts drop by 1.
Report verify_valt_span(const Diagram& d, std::int64_t crossing_label,
                        const BracketOptions& opts = {});

enum class Classicality { NotClassical, Inconclusive };

// A span that is not a multiple of four rules out any classical
// presentation; a multiple of four decides nothing.
Classicality classicality_obstruction(const Diagram& d, const BracketOptions& opts = {});

// Exhaustive loop-count bounds over modified states, from one full tally:
// one-flip states lose exactly one loop against their pure state, j-flip
// states gain at most j-2; after virtualizing any single crossing, one-flip
// states sit within [loops-1, loops] of the pure state and j-flip states
// gain at most j-1.  Past `budget` crossings only the one-flip checks run
// (the note records the cap).
Report verify_state_claims(const Diagram& d, const BracketOptions& opts = {},
                           int budget = 12);

struct CensusOptions {
    int c_max = 8;
    int samples = 50;
    std::uint64_t seed = 1;
    BracketOptions bracket;
};

struct CensusGroup {
    int crossings = 0;
    std::vector<std::pair<int, int>> span_genus;  // distinct, sorted
};

// Aggregate over seeded random proper alternating diagrams: per-check
// applicable/passed tallies plus, per crossing count, the distinct
// (span, genus) pairs seen, showing span is not a function of c alone.
struct CensusReport {
    int samples = 0;
    std::map<std::string, std::pair<long long, long long>> outcomes;
    std::vector<CensusGroup> groups;

    bool all_passed() const {
        for (const auto& entry : outcomes)
            if (entry.second.first != entry.second.second) return false;
        return true;
    }
};

CensusReport census(const CensusOptions& opts = {});

} // namespace vspan
