// Command line front end for the vspan library.
//
// Subcommands operate on signed Gauss codes given either inline or as
// @file with one code per line (blank lines and # comments skipped).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vspan/diagram.hpp"
#include "vspan/errors.hpp"
#include "vspan/generators.hpp"
#include "vspan/json_io.hpp"
#include "vspan/moves.hpp"
#include "vspan/statesum.hpp"
#include "vspan/surface.hpp"
#include "vspan/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json_out = false;
    int threads = 1;
    int max_crossings = 0;
};

int env_max_crossings() {
    if (const char* env = std::getenv("VSPAN_MAX_CROSSINGS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return vspan::BracketOptions{}.max_crossings;
}

vspan::BracketOptions bracket_opts(const GlobalOpts& g) {
    vspan::BracketOptions o;
    o.max_crossings = g.max_crossings;
    o.threads = g.threads;
    return o;
}

std::vector<std::string> gather_inputs(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return {arg};
    std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw vspan::ValidationError("cannot open input file " + path);
    std::vector<std::string> codes;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        if (line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        codes.push_back(line.substr(b, e - b + 1));
    }
    if (codes.empty()) throw vspan::ValidationError("input file " + path + " has no codes");
    return codes;
}

void emit(const GlobalOpts& g, const std::vector<json>& objects,
          const std::vector<std::string>& text_lines) {
    if (g.json_out) {
        if (objects.size() == 1) {
            std::cout << objects.front().dump() << "\n";
        } else {
            std::cout << json(objects).dump() << "\n";
        }
    } else {
        for (const auto& line : text_lines) std::cout << line << "\n";
    }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json info_json(const std::string& code, const vspan::Diagram& d) {
    return json{
        {"code", code.empty() ? d.to_string() : code},
        {"crossings", d.crossing_count()},
        {"components", d.component_count()},
        {"free_loops", d.free_loop_count()},
        {"writhe", d.writhe()},
        {"m", d.connected_components().count()},
        {"alternating", d.is_alternating()},
        {"proper", vspan::is_proper(d)},
    };
}

int run_info(const GlobalOpts& g, const std::vector<std::string>& codes) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    for (const auto& code : codes) {
        vspan::Diagram d = vspan::parse_gauss(code);
        json j = info_json(code, d);
        objs.push_back(j);
        if (!lines.empty()) lines.push_back("");
        lines.push_back("code: " + code);
        lines.push_back("crossings: " + std::to_string(d.crossing_count()));
        lines.push_back("components: " + std::to_string(d.component_count()));
        lines.push_back("free loops: " + std::to_string(d.free_loop_count()));
        lines.push_back("writhe: " + std::to_string(d.writhe()));
        lines.push_back("connected pieces: " + std::to_string(d.connected_components().count()));
        lines.push_back("alternating: " + yesno(d.is_alternating()));
        lines.push_back("proper: " + yesno(vspan::is_proper(d)));
    }
    emit(g, objs, lines);
    return 0;
}

int run_poly(const GlobalOpts& g, const std::vector<std::string>& codes, bool use_f) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    auto opts = bracket_opts(g);
    for (const auto& code : codes) {
        vspan::Diagram d = vspan::parse_gauss(code);
        vspan::LaurentPoly p = use_f ? vspan::f_poly(d, opts) : vspan::bracket(d, opts);
        objs.push_back(json::parse(vspan::to_json(p)));
        lines.push_back(p.to_string());
    }
    emit(g, objs, lines);
    return 0;
}

int run_span(const GlobalOpts& g, const std::vector<std::string>& codes) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    auto opts = bracket_opts(g);
    for (const auto& code : codes) {
        vspan::Diagram d = vspan::parse_gauss(code);
        int s = vspan::span_f(d, opts);
        objs.push_back(json{{"code", code}, {"span", s}});
        lines.push_back(std::to_string(s));
    }
    emit(g, objs, lines);
    return 0;
}

int run_genus(const GlobalOpts& g, const std::vector<std::string>& codes) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    for (const auto& code : codes) {
        vspan::Diagram d = vspan::parse_gauss(code);
        vspan::SurfaceSummary s = vspan::surface_summary(d);
        std::string j = vspan::to_json(s);
        objs.push_back(json::parse(j));
        lines.push_back(j);
    }
    emit(g, objs, lines);
    return 0;
}

std::string color_string(const std::vector<vspan::Color>& colors) {
    std::string s;
    for (auto c : colors) s += (c == vspan::Color::Black ? 'B' : 'W');
    return s;
}

int run_classify(const GlobalOpts& g, const std::vector<std::string>& codes) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    auto opts = bracket_opts(g);
    for (const auto& code : codes) {
        vspan::Diagram d = vspan::parse_gauss(code);
        vspan::SurfaceSummary s = vspan::surface_summary(d);
        bool alternating = d.is_alternating();
        auto cb = vspan::checkerboard(d);
        std::optional<std::string> coloring;
        if (alternating) {
            coloring = color_string(vspan::canonical_coloring(d));
        } else if (cb) {
            coloring = color_string(*cb);
        }
        std::string classical = "skipped";
        if (d.crossing_count() <= static_cast<std::size_t>(g.max_crossings)) {
            classical = vspan::classicality_obstruction(d, opts) ==
                                vspan::Classicality::NotClassical
                            ? "not classical"
                            : "inconclusive";
        }
        json j{
            {"code", code},
            {"crossings", d.crossing_count()},
            {"m", s.m},
            {"alternating", alternating},
            {"proper", s.proper},
            {"genus", s.genus},
            {"boundary", s.boundary},
            {"checkerboard", cb.has_value()},
            {"coloring", coloring ? json(*coloring) : json(nullptr)},
            {"classicality", classical},
        };
        objs.push_back(j);
        if (!lines.empty()) lines.push_back("");
        lines.push_back("code: " + code);
        lines.push_back("alternating: " + yesno(alternating));
        lines.push_back("proper: " + yesno(s.proper));
        lines.push_back("connected pieces: " + std::to_string(s.m));
        lines.push_back("genus: " + std::to_string(s.genus));
        lines.push_back("boundary circles: " + std::to_string(s.boundary));
        lines.push_back("checkerboard: " + yesno(cb.has_value()));
        if (coloring) lines.push_back("coloring: " + *coloring);
        lines.push_back("classicality: " + classical);
    }
    emit(g, objs, lines);
    return 0;
}

void render_report_text(const vspan::Report& r, std::vector<std::string>& lines) {
    if (!lines.empty()) lines.push_back("");
    lines.push_back("subject: " + r.subject);
    if (!r.applicable) {
        lines.push_back("inapplicable: " + r.note);
        return;
    }
    for (const auto& [k, v] : r.measured) {
        std::string line = "measured " + k + ": " + std::to_string(v);
        auto p = r.predicted.find(k);
        if (p != r.predicted.end()) line += " (predicted " + std::to_string(p->second) + ")";
        lines.push_back(line);
    }
    for (const auto& [k, v] : r.checks) {
        lines.push_back("check " + k + ": " + (v ? "pass" : "FAIL"));
    }
    lines.push_back(std::string("result: ") + (r.passed() ? "pass" : "FAIL"));
}

int verify_exit(const std::vector<vspan::Report>& reports) {
    bool any_fail = false;
    bool any_inapplicable = false;
    for (const auto& r : reports) {
        if (!r.applicable) {
            any_inapplicable = true;
        } else if (!r.passed()) {
            any_fail = true;
        }
    }
    if (any_fail) return 2;
    if (any_inapplicable) return 3;
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& mode,
               const std::vector<std::string>& codes, int crossing, int budget) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    std::vector<vspan::Report> reports;
    auto opts = bracket_opts(g);
    for (const auto& code : codes) {
        vspan::Diagram d = vspan::parse_gauss(code);
        vspan::Report r;
        if (mode == "alt") {
            r = vspan::verify_alt_span(d, opts);
        } else if (mode == "valt") {
            r = vspan::verify_valt_span(d, crossing, opts);
        } else {
            r = vspan::verify_state_claims(d, opts, budget);
        }
        reports.push_back(r);
        objs.push_back(json::parse(vspan::to_json(r)));
        render_report_text(r, lines);
    }
    emit(g, objs, lines);
    return verify_exit(reports);
}

int emit_diagrams(const GlobalOpts& g, const std::vector<vspan::Diagram>& ds) {
    std::vector<json> objs;
    std::vector<std::string> lines;
    for (const auto& d : ds) {
        objs.push_back(json::parse(vspan::to_json(d)));
        lines.push_back(d.to_string());
    }
    emit(g, objs, lines);
    return 0;
}

int run_census(const GlobalOpts& g, int c_max, int samples, unsigned long seed) {
    vspan::CensusOptions o;
    o.c_max = c_max;
    o.samples = samples;
    o.seed = seed;
    o.bracket = bracket_opts(g);
    vspan::CensusReport rep = vspan::census(o);
    std::cout << vspan::to_json(rep) << "\n";
    (void)g;
    return rep.all_passed() ? 0 : 2;
}

int run_bench(const GlobalOpts& g, int crossings, int reps) {
    vspan::Diagram d = vspan::gen_k({crossings});
    auto opts = bracket_opts(g);
    if (opts.max_crossings < crossings) opts.max_crossings = crossings;
    auto t0 = std::chrono::steady_clock::now();
    vspan::LaurentPoly p;
    for (int i = 0; i < reps; ++i) p = vspan::bracket(d, opts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double states = std::ldexp(static_cast<double>(reps), crossings);
    double rate = secs > 0 ? states / secs : 0;
    if (g.json_out) {
        json j{{"crossings", crossings},
               {"reps", reps},
               {"seconds", secs},
               {"states_per_second", rate},
               {"bracket", json::parse(vspan::to_json(p))}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "crossings: " << crossings << "\n"
                  << "reps: " << reps << "\n"
                  << "seconds: " << secs << "\n"
                  << "states/sec: " << rate << "\n"
                  << "bracket: " << p.to_string() << "\n";
    }
    return 0;
}

std::vector<int> parse_int_list(const std::vector<std::string>& tokens) {
    std::vector<int> out;
    for (const auto& tok : tokens) {
        std::size_t start = 0;
        while (start <= tok.size()) {
            std::size_t comma = tok.find(',', start);
            std::string piece = tok.substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start);
            if (!piece.empty()) {
                char* end = nullptr;
                long v = std::strtol(piece.c_str(), &end, 10);
                if (!end || *end != '\0')
                    throw vspan::ValidationError("bad integer '" + piece + "'");
                out.push_back(static_cast<int>(v));
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    g.max_crossings = env_max_crossings();

    CLI::App app{"virtual link diagram toolkit"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json_out, "emit JSON instead of text");
    app.add_option("--threads", g.threads, "worker threads for the state sum")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-crossings", g.max_crossings,
                   "state sum crossing limit (env VSPAN_MAX_CROSSINGS)")
        ->check(CLI::PositiveNumber);

    std::string arg_code;
    auto add_code = [&](CLI::App* sub) {
        sub->add_option("code", arg_code, "signed Gauss code or @file")->required();
    };

    CLI::App* sub_info = app.add_subcommand("info", "diagram facts");
    add_code(sub_info);
    CLI::App* sub_bracket = app.add_subcommand("bracket", "Kauffman bracket polynomial");
    add_code(sub_bracket);
    CLI::App* sub_f = app.add_subcommand("f", "writhe-normalized bracket polynomial");
    add_code(sub_f);
    CLI::App* sub_span = app.add_subcommand("span", "span of the normalized bracket");
    add_code(sub_span);
    CLI::App* sub_genus = app.add_subcommand("genus", "surface summary");
    add_code(sub_genus);
    CLI::App* sub_classify = app.add_subcommand("classify", "predicates and coloring");
    add_code(sub_classify);

    CLI::App* sub_verify = app.add_subcommand("verify", "check span predictions");
    sub_verify->require_subcommand(1);
    int arg_crossing = 0;
    int arg_budget = 12;
    CLI::App* verify_alt = sub_verify->add_subcommand("alt", "span formula, alternating case");
    add_code(verify_alt);
    CLI::App* verify_valt = sub_verify->add_subcommand("valt", "span after one virtualization");
    add_code(verify_valt);
    verify_valt->add_option("--crossing", arg_crossing, "crossing to virtualize")->required();
    CLI::App* verify_claims = sub_verify->add_subcommand("claims", "state loop count bounds");
    add_code(verify_claims);
    verify_claims->add_option("--budget", arg_budget, "full sweep crossing budget");

    CLI::App* sub_gen = app.add_subcommand("gen", "generate diagram families");
    sub_gen->require_subcommand(1);
    std::vector<std::string> arg_blocks;
    CLI::App* gen_k_cmd = sub_gen->add_subcommand("k", "two-strand block family");
    gen_k_cmd->add_option("blocks", arg_blocks, "block twist counts")->required();
    bool arg_reduced = false;
    gen_k_cmd->add_flag("--reduced", arg_reduced, "emit the reduced form");
    int arg_n = 1, arg_r = 0;
    CLI::App* gen_dnr_cmd = sub_gen->add_subcommand("dnr", "high genus chain family");
    gen_dnr_cmd->add_option("n", arg_n, "genus")->required()->check(CLI::PositiveNumber);
    gen_dnr_cmd->add_option("r", arg_r, "twist count")->required()
        ->check(CLI::NonNegativeNumber);
    int arg_crossings = 6, arg_count = 1;
    unsigned long arg_seed = 1;
    CLI::App* gen_random_cmd = sub_gen->add_subcommand("random", "random proper alternating");
    gen_random_cmd->add_option("--crossings", arg_crossings, "crossing count")
        ->required()->check(CLI::PositiveNumber);
    gen_random_cmd->add_option("--seed", arg_seed, "random seed");
    gen_random_cmd->add_option("--count", arg_count, "how many to emit")
        ->check(CLI::PositiveNumber);

    int arg_cmax = 8, arg_samples = 50;
    unsigned long arg_census_seed = 1;
    CLI::App* sub_census = app.add_subcommand("census", "random verification sweep");
    sub_census->add_option("--cmax", arg_cmax, "largest crossing count");
    sub_census->add_option("--samples", arg_samples, "samples per crossing count");
    sub_census->add_option("--seed", arg_census_seed, "random seed");

    int arg_bench_c = 16, arg_reps = 3;
    CLI::App* sub_bench = app.add_subcommand("bench", "state sum wall clock benchmark");
    sub_bench->add_option("--crossings", arg_bench_c, "crossing count")
        ->check(CLI::PositiveNumber);
    sub_bench->add_option("--reps", arg_reps, "repetitions")->check(CLI::PositiveNumber);

    // accept the global flags after the subcommand as well
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* cmd) {
        for (CLI::App* s : cmd->get_subcommands({})) {
            s->fallthrough();
            allow_globals(s);
        }
    };
    allow_globals(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 1;
    }

    try {
        if (*sub_info) return run_info(g, gather_inputs(arg_code));
        if (*sub_bracket) return run_poly(g, gather_inputs(arg_code), false);
        if (*sub_f) return run_poly(g, gather_inputs(arg_code), true);
        if (*sub_span) return run_span(g, gather_inputs(arg_code));
        if (*sub_genus) return run_genus(g, gather_inputs(arg_code));
        if (*sub_classify) return run_classify(g, gather_inputs(arg_code));
        if (*sub_verify) {
            std::string mode = (*verify_alt) ? "alt" : (*verify_valt) ? "valt" : "claims";
            return run_verify(g, mode, gather_inputs(arg_code), arg_crossing, arg_budget);
        }
        if (*sub_gen) {
            if (*gen_k_cmd) {
                auto rs = parse_int_list(arg_blocks);
                return emit_diagrams(g, {arg_reduced ? vspan::reduce_k(rs) : vspan::gen_k(rs)});
            }
            if (*gen_dnr_cmd) return emit_diagrams(g, {vspan::gen_dnr(arg_n, arg_r)});
            std::vector<vspan::Diagram> ds;
            for (int i = 0; i < arg_count; ++i) {
                ds.push_back(vspan::random_proper_alternating(
                    arg_crossings, static_cast<std::uint64_t>(arg_seed) + i));
            }
            return emit_diagrams(g, ds);
        }
        if (*sub_census) return run_census(g, arg_cmax, arg_samples, arg_census_seed);
        if (*sub_bench) return run_bench(g, arg_bench_c, arg_reps);
    } catch (const vspan::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const vspan::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const vspan::ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const vspan::DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const vspan::InternalError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
