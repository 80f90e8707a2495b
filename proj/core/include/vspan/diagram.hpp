#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vspan {

enum class Role : std::uint8_t { Over, Under };

inline Role opposite(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

// One traversal of a real crossing by a strand.  `crossing` is the dense
// internal id; both passages of a crossing carry the same sign.
struct Passage {
    int crossing = 0;
    Role role = Role::Over;
    int sign = +1;

    bool operator==(const Passage&) const = default;
};

// Passage written with the user-facing crossing label instead of the dense id.
struct LabeledPassage {
    std::int64_t label = 0;
    Role role = Role::Over;
    int sign = +1;
};

// Location of a passage: component index + position within that component.
struct Occurrence {
    int component = -1;
    int position = -1;
};

// Partition of the component indices into connected blocks (components that
// share a crossing, transitively).  Free loops are singleton blocks.
struct ComponentPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t count() const { return blocks.size(); }
};

// A virtual link diagram as a signed Gauss code: one cyclic passage sequence
// per closed curve.  Virtual crossings are not represented.  A component with
// no passages is a free loop.
class Diagram {
public:
    // Normalizes labels to dense ids (first-appearance order) and validates:
    // every label must occur exactly twice, once Over and once Under, with one
    // consistent sign.  Throws ValidationError otherwise.
    static Diagram build(const std::vector<std::vector<LabeledPassage>>& components);

    const std::vector<std::vector<Passage>>& components() const { return components_; }
    std::size_t component_count() const { return components_.size(); }
    std::size_t crossing_count() const { return labels_.size(); }
    std::size_t free_loop_count() const;

    std::int64_t label(int crossing) const { return labels_.at(crossing); }
    // Dense id for a user-facing label; throws DomainError if unknown.
    int id_of(std::int64_t label) const;
    std::int64_t max_label() const;

    int sign_of(int crossing) const;
    Occurrence occurrence(int crossing, Role role) const;

    int writhe() const;
    bool is_alternating() const;
    ComponentPartition connected_components() const;

    // The code with user-facing labels, suitable for editing and rebuilding.
    std::vector<std::vector<LabeledPassage>> labeled() const;

    std::string to_string() const;

    bool operator==(const Diagram& other) const {
        return components_ == other.components_ && labels_ == other.labels_;
    }

private:
    Diagram() = default;

    std::vector<std::vector<Passage>> components_;
    std::vector<std::int64_t> labels_;        // external label per dense id
    std::vector<Occurrence> over_at_;         // indexed by dense id
    std::vector<Occurrence> under_at_;
};

// Parses the textual Gauss-code form: components separated by ';', each either
// "()" (free loop) or a sequence of tokens O<label><sign> / U<label><sign>.
// Whitespace between tokens is optional.  Throws ParseError / ValidationError.
Diagram parse_gauss(std::string_view text);

} // namespace vspan
