#include "vspan/diagram.hpp"

#include "vspan/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace vspan {

Diagram Diagram::build(const std::vector<std::vector<LabeledPassage>>& components) {
    if (components.empty())
        throw ValidationError("diagram needs at least one component");

    Diagram d;
    std::map<std::int64_t, int> id_by_label;
    d.components_.resize(components.size());
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        for (const LabeledPassage& lp : components[ci]) {
            if (lp.label < 0)
                throw ValidationError("crossing labels must be non-negative");
            if (lp.sign != 1 && lp.sign != -1)
                throw ValidationError("crossing sign must be +1 or -1");
            auto [it, inserted] = id_by_label.try_emplace(lp.label, static_cast<int>(d.labels_.size()));
            if (inserted)
                d.labels_.push_back(lp.label);
            d.components_[ci].push_back(Passage{it->second, lp.role, lp.sign});
        }
    }

    const std::size_t c = d.labels_.size();
    d.over_at_.assign(c, Occurrence{});
    d.under_at_.assign(c, Occurrence{});
    std::vector<int> seen(c, 0);
    for (std::size_t ci = 0; ci < d.components_.size(); ++ci) {
        for (std::size_t pi = 0; pi < d.components_[ci].size(); ++pi) {
            const Passage& p = d.components_[ci][pi];
            Occurrence& slot = p.role == Role::Over ? d.over_at_[p.crossing] : d.under_at_[p.crossing];
            if (slot.component >= 0)
                throw ValidationError("crossing " + std::to_string(d.labels_[p.crossing]) +
                                      " has two " + (p.role == Role::Over ? "Over" : "Under") +
                                      " passages");
            slot = Occurrence{static_cast<int>(ci), static_cast<int>(pi)};
            ++seen[p.crossing];
        }
    }
    for (std::size_t k = 0; k < c; ++k) {
        if (seen[k] != 2)
            throw ValidationError("crossing " + std::to_string(d.labels_[k]) +
                                  " appears " + std::to_string(seen[k]) + " times, expected 2");
        const Passage& o = d.components_[d.over_at_[k].component][d.over_at_[k].position];
        const Passage& u = d.components_[d.under_at_[k].component][d.under_at_[k].position];
        if (o.sign != u.sign)
            throw ValidationError("crossing " + std::to_string(d.labels_[k]) +
                                  " has contradictory signs");
    }
    return d;
}

std::size_t Diagram::free_loop_count() const {
    return static_cast<std::size_t>(
        std::count_if(components_.begin(), components_.end(),
                      [](const auto& comp) { return comp.empty(); }));
}

int Diagram::id_of(std::int64_t label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == label)
            return static_cast<int>(k);
    throw DomainError("unknown crossing label " + std::to_string(label));
}

std::int64_t Diagram::max_label() const {
    std::int64_t m = 0;
    for (std::int64_t l : labels_)
        m = std::max(m, l);
    return m;
}

int Diagram::sign_of(int crossing) const {
    const Occurrence& o = over_at_.at(crossing);
    return components_[o.component][o.position].sign;
}

Occurrence Diagram::occurrence(int crossing, Role role) const {
    return role == Role::Over ? over_at_.at(crossing) : under_at_.at(crossing);
}

int Diagram::writhe() const {
    int w = 0;
    for (std::size_t k = 0; k < labels_.size(); ++k)
        w += sign_of(static_cast<int>(k));
    return w;
}

bool Diagram::is_alternating() const {
    for (const auto& comp : components_) {
        if (comp.empty())
            continue; // free loops are vacuously alternating
        // Cyclic comparison: a single passage follows itself, so odd-length
        // components (including singletons) are never alternating.
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const Passage& a = comp[i];
            const Passage& b = comp[(i + 1) % comp.size()];
            if (a.role == b.role)
                return false;
        }
    }
    return true;
}

ComponentPartition Diagram::connected_components() const {
    std::vector<int> parent(components_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        int a = find(over_at_[k].component);
        int b = find(under_at_[k].component);
        if (a != b)
            parent[a] = b;
    }
    std::map<int, std::vector<int>> blocks;
    for (std::size_t ci = 0; ci < components_.size(); ++ci)
        blocks[find(static_cast<int>(ci))].push_back(static_cast<int>(ci));
    ComponentPartition part;
    for (auto& [root, members] : blocks)
        part.blocks.push_back(std::move(members));
    return part;
}

std::vector<std::vector<LabeledPassage>> Diagram::labeled() const {
    std::vector<std::vector<LabeledPassage>> out(components_.size());
    for (std::size_t ci = 0; ci < components_.size(); ++ci)
        for (const Passage& p : components_[ci])
            out[ci].push_back(LabeledPassage{labels_[p.crossing], p.role, p.sign});
    return out;
}

std::string Diagram::to_string() const {
    std::ostringstream out;
    for (std::size_t ci = 0; ci < components_.size(); ++ci) {
        if (ci > 0)
            out << " ; ";
        if (components_[ci].empty()) {
            out << "()";
            continue;
        }
        for (const Passage& p : components_[ci]) {
            out << (p.role == Role::Over ? 'O' : 'U') << labels_[p.crossing]
                << (p.sign > 0 ? '+' : '-');
        }
    }
    return out.str();
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    // Consumes '+', '-', or a UTF-8 minus sign; returns the sign value.
    int read_sign() {
        if (at_end())
            throw ParseError("expected sign '+' or '-' after crossing label", pos_);
        char c = text_[pos_];
        if (c == '+') {
            ++pos_;
            return +1;
        }
        if (c == '-') {
            ++pos_;
            return -1;
        }
        if (static_cast<unsigned char>(c) == 0xE2 && pos_ + 2 < text_.size() &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x92) {
            pos_ += 3;
            return -1;
        }
        throw ParseError("expected sign '+' or '-' after crossing label", pos_);
    }

    std::int64_t read_label() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected crossing label", pos_);
        std::int64_t value = 0;
        std::size_t digits = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (++digits > 18)
                throw ParseError("crossing label too large", pos_);
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Diagram parse_gauss(std::string_view text) {
    Scanner s(text);
    std::vector<std::vector<LabeledPassage>> components;
    std::vector<LabeledPassage> current;
    bool current_is_free_loop = false;
    bool component_started = false;

    auto finish_component = [&](std::size_t at) {
        if (!component_started)
            throw ParseError("empty component", at);
        components.push_back(current);
        current.clear();
        current_is_free_loop = false;
        component_started = false;
    };

    s.skip_space();
    if (s.at_end())
        throw ParseError("empty input", 0);
    while (true) {
        s.skip_space();
        if (s.at_end())
            break;
        char c = s.peek();
        if (c == ';') {
            std::size_t at = s.pos();
            s.advance();
            finish_component(at);
            continue;
        }
        if (c == '(') {
            if (component_started)
                throw ParseError("free loop '()' cannot be mixed with passages", s.pos());
            s.advance();
            s.skip_space();
            if (s.at_end() || s.peek() != ')')
                throw ParseError("expected ')' to close free loop", s.pos());
            s.advance();
            component_started = true;
            current_is_free_loop = true;
            continue;
        }
        if (c == 'O' || c == 'U') {
            if (current_is_free_loop)
                throw ParseError("free loop '()' cannot be mixed with passages", s.pos());
            s.advance();
            std::int64_t label = s.read_label();
            int sign = s.read_sign();
            current.push_back(LabeledPassage{label, c == 'O' ? Role::Over : Role::Under, sign});
            component_started = true;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", s.pos());
    }
    finish_component(s.pos());
    return Diagram::build(components);
}

} // namespace vspan
