#include "vspan/json_io.hpp"

#include <json.hpp>

#include "vspan/errors.hpp"

namespace vspan {

namespace {

using nlohmann::json;

json diagram_json(const Diagram& d) {
    json comps = json::array();
    for (const auto& comp : d.labeled()) {
        json passages = json::array();
        for (const auto& p : comp)
            passages.push_back({{"label", p.label},
                                {"role", p.role == Role::Over ? "O" : "U"},
                                {"sign", p.sign}});
        comps.push_back(passages);
    }
    return json{{"components", comps}};
}

json laurent_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [exponent, coefficient] : p.terms())
        terms.push_back(json::array({exponent, coefficient.str()}));
    return terms;
}

json surface_json(const SurfaceSummary& s) {
    json crossings = json::array();
    for (const auto& cf : s.crossings)
        crossings.push_back({{"id", cf.label},
                             {"proper", cf.proper},
                             {"faces", cf.faces}});
    return json{{"boundary", s.boundary},
                {"genus", s.genus},
                {"m", s.m},
                {"proper", s.proper},
                {"crossings", crossings}};
}

json report_json(const Report& r) {
    return json{{"subject", r.subject}, {"applicable", r.applicable},
                {"note", r.note},       {"measured", r.measured},
                {"predicted", r.predicted}, {"checks", r.checks},
                {"passed", r.passed()}};
}

json census_json(const CensusReport& c) {
    json outcomes = json::object();
    for (const auto& [name, counts] : c.outcomes)
        outcomes[name] = {{"applicable", counts.first}, {"passed", counts.second}};
    json groups = json::array();
    for (const auto& g : c.groups)
        groups.push_back({{"c", g.crossings}, {"span_genus", g.span_genus}});
    return json{{"samples", c.samples},
                {"outcomes", outcomes},
                {"groups", groups},
                {"all_passed", c.all_passed()}};
}

} // namespace

std::string to_json(const Diagram& d) { return diagram_json(d).dump(); }
std::string to_json(const LaurentPoly& p) { return laurent_json(p).dump(); }
std::string to_json(const SurfaceSummary& s) { return surface_json(s).dump(); }
std::string to_json(const Report& r) { return report_json(r).dump(); }
std::string to_json(const CensusReport& c) { return census_json(c).dump(); }

Diagram diagram_from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what(), e.byte);
    }
    std::vector<std::vector<LabeledPassage>> comps;
    try {
        for (const auto& comp : parsed.at("components")) {
            std::vector<LabeledPassage> passages;
            for (const auto& p : comp) {
                std::string role = p.at("role").get<std::string>();
                if (role != "O" && role != "U")
                    throw ValidationError("role must be \"O\" or \"U\"");
                passages.push_back({p.at("label").get<std::int64_t>(),
                                    role == "O" ? Role::Over : Role::Under,
                                    p.at("sign").get<int>()});
            }
            comps.push_back(std::move(passages));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad diagram JSON shape: ") + e.what());
    }
    return Diagram::build(comps);
}

} // namespace vspan
