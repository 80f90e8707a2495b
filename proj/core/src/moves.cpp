#include "vspan/moves.hpp"

#include <string>
#include <vector>

#include "vspan/errors.hpp"

namespace vspan {

namespace {

void check_gap(const std::vector<std::vector<LabeledPassage>>& comps, Gap g) {
    if (g.component < 0 || g.component >= static_cast<int>(comps.size()))
        throw DomainError("gap names component " + std::to_string(g.component) +
                          " of a diagram with " + std::to_string(comps.size()));
    int len = static_cast<int>(comps[g.component].size());
    int gaps = len == 0 ? 1 : len;
    if (g.position < 0 || g.position >= gaps)
        throw DomainError("gap position " + std::to_string(g.position) +
                          " out of range for component of length " + std::to_string(len));
}

} // namespace

Diagram virtualize(const Diagram& d, std::int64_t crossing_label) {
    d.id_of(crossing_label);  // reject unknown labels
    auto comps = d.labeled();
    for (auto& comp : comps) {
        std::vector<LabeledPassage> kept;
        kept.reserve(comp.size());
        for (const auto& p : comp)
            if (p.label != crossing_label) kept.push_back(p);
        comp = std::move(kept);
    }
    return Diagram::build(comps);
}

Diagram kauffman_twist(const Diagram& d, std::int64_t crossing_label) {
    d.id_of(crossing_label);
    auto comps = d.labeled();
    for (auto& comp : comps)
        for (auto& p : comp)
            if (p.label == crossing_label) p.role = opposite(p.role);
    return Diagram::build(comps);
}

Diagram insert_r1(const Diagram& d, Gap at, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("kink sign must be +1 or -1");
    auto comps = d.labeled();
    check_gap(comps, at);
    std::int64_t label = d.max_label() + 1;
    auto& comp = comps[at.component];
    comp.insert(comp.begin() + at.position,
                {LabeledPassage{label, Role::Over, sign}, LabeledPassage{label, Role::Under, sign}});
    return Diagram::build(comps);
}

Diagram insert_r2(const Diagram& d, Gap over_gap, Gap under_gap) {
    auto comps = d.labeled();
    check_gap(comps, over_gap);
    check_gap(comps, under_gap);
    std::int64_t first = d.max_label() + 1;
    std::int64_t second = first + 1;
    std::vector<LabeledPassage> overs{{first, Role::Over, +1}, {second, Role::Over, -1}};
    std::vector<LabeledPassage> unders{{first, Role::Under, +1}, {second, Role::Under, -1}};

    // Insert the later gap first so the earlier index stays valid; at a
    // shared gap the Over pair goes in front.
    auto insert_at = [&comps](Gap g, const std::vector<LabeledPassage>& tokens) {
        auto& comp = comps[g.component];
        comp.insert(comp.begin() + g.position, tokens.begin(), tokens.end());
    };
    if (over_gap.component == under_gap.component && over_gap.position <= under_gap.position) {
        insert_at(under_gap, unders);
        insert_at(over_gap, overs);
    } else {
        insert_at(over_gap, overs);
        insert_at(under_gap, unders);
    }
    return Diagram::build(comps);
}

} // namespace vspan
