// edk: command-line front end. JSON on stdout by default, CSV with --format csv.
// Exit codes: 0 success, 1 domain error, 2 usage or input error.

#include "edk/distfun.hpp"
#include "edk/editing.hpp"
#include "edk/oracle.hpp"
#include "edk/property_io.hpp"
#include "edk/spectrum.hpp"
#include "edk/types.hpp"
#include "edk/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace edk;

namespace {

template <class>
struct KindOfImpl;
template <class K>
struct KindOfImpl<Family<K>> {
    using type = K;
};
template <class F>
using KindOf = typename KindOfImpl<std::decay_t<F>>::type;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AnyFamily load_property(const std::string& path) {
    try {
        return parse_property(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

template <class Kind>
CompleteGraph<Kind> load_graph(const std::string& path, const Family<Kind>& f) {
    try {
        if constexpr (Kind::directed) return parse_graph<Kind>(read_file(path), 4, f.palette);
        else return parse_graph<Kind>(read_file(path), f.r);
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Mode parse_mode(const std::string& s) {
    if (s == "weak") return Mode::weak;
    if (s == "strong") return Mode::strong;
    throw UsageError("mode must be weak or strong");
}

std::vector<Rational> parse_list(const std::string& s) {
    try {
        return parse_rational_list(s);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

DensityVector density_for(const MulticolorFamily&, const std::string& s) { return DensityVector(parse_list(s)); }

DirDensity density_for(const DirectedFamily& f, const std::string& s) {
    auto v = parse_list(s);
    if (v.size() != 2) throw UsageError("directed densities are given as \"p,q\"");
    return DirDensity(v[0], v[1], f.palette);
}

json density_json(const DensityVector& p) {
    json out = json::array();
    for (const auto& x : p.entries()) out.push_back(to_string(x));
    return out;
}

json density_json(const DirDensity& d) { return json{{"p", to_string(d.p)}, {"q", to_string(d.q)}}; }

std::string density_csv(const DensityVector& p) {
    std::string out;
    for (std::size_t i = 0; i < p.entries().size(); ++i) out += (i ? "," : "") + to_string(p[i]);
    return out;
}

std::string density_csv(const DirDensity& d) { return to_string(d.p) + "," + to_string(d.q); }

std::string density_header(const MulticolorFamily& f) {
    std::string out;
    for (int i = 1; i <= f.r; ++i) out += (i > 1 ? ",p" : "p") + std::to_string(i);
    return out;
}

std::string density_header(const DirectedFamily&) { return "p,q"; }

json rationals_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

template <class Kind>
json type_json(const Type<Kind>& K) {
    json phi = json::array();
    for (std::size_t i = 0; i < K.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < K.size(); ++j) row.push_back(format_color_set<Kind>(K.at(i, j)));
        phi.push_back(row);
    }
    return json{{"k", K.size()}, {"phi", phi}};
}

template <class Kind>
json bound_json(const DistBound<Kind>& b) {
    json out{{"value", to_string(b.value)}, {"kind", b.kind == BoundKind::upper ? "upper" : "lower"}};
    if (b.kind == BoundKind::upper) {
        out["kmax"] = b.kmax;
        out["certificate_type"] = b.type ? type_json(*b.type) : json(nullptr);
        out["weights"] = rationals_json(b.weights);
    } else {
        out["argument"] = b.argument;
    }
    return out;
}

json tuples_json(const std::vector<SpectrumTuple>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back(t);
    return out;
}

struct Options {
    std::string format = "json";
    unsigned jobs = 1;
    std::string property, graph, mode = "weak", p, grid, weights, palette, case_id = "all", estimate_mode = "exact";
    std::size_t kmax = 2, type_index = 0, trials = 1, n = 0;
    std::uint64_t seed = 0;
    bool max = false, lower = false;
    double ceiling = 5e7;
};

bool csv(const Options& o) { return o.format == "csv"; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_spectrum(const Options& o, bool chi_only) {
    const Mode mode = parse_mode(o.mode);
    std::visit(
        [&](const auto& f) {
            const auto s = clique_spectrum(f, mode);
            const auto chi = chromatic_number(f, mode);
            if (csv(o)) {
                if (chi_only) {
                    std::cout << "mode,chi,trivial\n" << mode_name(mode) << "," << chi.chi << "," << (chi.trivial ? "true" : "false") << "\n";
                } else {
                    for (const auto& t : s.tuples) {
                        for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
                        std::cout << "\n";
                    }
                }
                return;
            }
            json out{{"mode", mode_name(mode)}};
            if (!chi_only) out["tuples"] = tuples_json(s.tuples);
            out["chi"] = chi.chi;
            out["trivial"] = chi.trivial;
            emit(out);
        },
        load_property(o.property));
    return 0;
}

int cmd_types(const Options& o) {
    std::visit(
        [&](const auto& f) {
            const auto types = enumerate_types(f, o.kmax, EnumerationLimits{o.ceiling});
            if (o.format == "text") {
                for (std::size_t i = 0; i < types.size(); ++i) {
                    if (i) std::cout << "\n";
                    std::cout << "# index " << i << "\n" << format_type(types[i]);
                }
                return;
            }
            if (csv(o)) {
                std::cout << "index,k,phi\n";
                for (std::size_t i = 0; i < types.size(); ++i) {
                    std::string phi;
                    for (std::size_t a = 0; a < types[i].size(); ++a) {
                        for (std::size_t b = a; b < types[i].size(); ++b) phi += (phi.empty() ? "" : " ") + format_color_set<KindOf<decltype(f)>>(types[i].at(a, b));
                    }
                    std::cout << i << "," << types[i].size() << ",\"" << phi << "\"\n";
                }
                return;
            }
            json arr = json::array();
            for (std::size_t i = 0; i < types.size(); ++i) {
                auto t = type_json(types[i]);
                t["index"] = i;
                arr.push_back(t);
            }
            emit(json{{"kmax", o.kmax}, {"count", types.size()}, {"types", arr}});
        },
        load_property(o.property));
    return 0;
}

int cmd_distfn(const Options& o) {
    const int modes = !o.p.empty() + !o.grid.empty() + o.max + o.lower;
    if (modes != 1) throw UsageError("distfn needs exactly one of --p, --grid, --max, --lower");
    const EnumerationLimits limits{o.ceiling};
    std::visit(
        [&](const auto& f) {
            using Kind = KindOf<decltype(f)>;
            if (o.lower) {
                const auto b = dist_lower_turan(f);
                if (csv(o)) std::cout << "value\n" << to_string(b.value) << "\n";
                else emit(bound_json(b));
                return;
            }
            if (o.max) {
                const auto m = dist_max_upper(f, o.kmax, limits);
                if (csv(o)) {
                    std::cout << density_header(f) << ",value\n" << density_csv(m.argmax) << "," << to_string(m.bound.value) << "\n";
                    return;
                }
                auto out = bound_json(m.bound);
                out["argmax"] = density_json(m.argmax);
                emit(out);
                return;
            }
            if (!o.p.empty()) {
                const auto p = density_for(f, o.p);
                const auto b = dist_upper<Kind>(f, p, o.kmax, o.jobs, limits);
                if (csv(o)) std::cout << density_header(f) << ",value\n" << density_csv(p) << "," << to_string(b.value) << "\n";
                else emit(bound_json(b));
                return;
            }
            const Rational step = parse_rational(o.grid);
            if (step <= 0 || step.get_num() != 1) throw UsageError("grid step must be 1/N");
            const auto rows = distfn_grid(f, o.kmax, step.get_den().get_si(), o.jobs, limits);
            if (csv(o)) {
                std::cout << density_header(f) << ",value\n";
                for (const auto& r : rows) std::cout << density_csv(r.p) << "," << to_string(r.value) << "\n";
                return;
            }
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(json{{"p", density_json(r.p)}, {"value", to_string(r.value)}});
            emit(json{{"kmax", o.kmax}, {"rows", arr}});
        },
        load_property(o.property));
    return 0;
}

int cmd_edit(const Options& o) {
    std::visit(
        [&](const auto& f) {
            const auto g = load_graph(o.graph, f);
            const auto types = enumerate_types(f, o.kmax, EnumerationLimits{o.ceiling});
            if (o.type_index >= types.size()) {
                throw DomainError("type index " + std::to_string(o.type_index) + " out of range (" + std::to_string(types.size()) +
                                  " admissible types with kmax=" + std::to_string(o.kmax) + ")");
            }
            const auto& K = types[o.type_index];
            std::vector<Rational> w;
            if (o.weights.empty()) w.assign(K.size(), Rational(1, static_cast<long>(K.size())));
            else w = parse_list(o.weights);
            const Rational pairs(static_cast<long>(choose2(g.size())));
            json runs = json::array();
            bool all_members = true;
            for (std::size_t t = 0; t < o.trials; ++t) {
                const auto seed = o.trials == 1 ? o.seed : derive_seed(o.seed, t);
                const auto r = edit_by_any_type(g, K, w, seed);
                const bool member = is_member(r.graph, f);
                all_members = all_members && member;
                json run{{"changes", r.changes},
                         {"normalized", pairs == 0 ? "0" : to_string(Rational(static_cast<long>(r.changes)) / pairs)},
                         {"member", member}};
                if (o.trials == 1) run["graph"] = format_graph(r.graph);
                runs.push_back(run);
            }
            if (csv(o)) {
                std::cout << "trial,changes,normalized,member\n";
                for (std::size_t t = 0; t < runs.size(); ++t) {
                    std::cout << t << "," << runs[t]["changes"].get<std::size_t>() << "," << runs[t]["normalized"].get<std::string>() << ","
                              << (runs[t]["member"].get<bool>() ? "true" : "false") << "\n";
                }
                return;
            }
            if (o.trials == 1) {
                emit(runs[0]);
            } else {
                emit(json{{"trials", o.trials}, {"member", all_members}, {"runs", runs}});
            }
        },
        load_property(o.property));
    return 0;
}

int cmd_oracle(const Options& o) {
    std::visit(
        [&](const auto& f) {
            const auto g = load_graph(o.graph, f);
            const auto r = exact_dist(g, f);
            const Rational pairs(static_cast<long>(choose2(g.size())));
            const std::string norm = pairs == 0 ? "0" : to_string(Rational(static_cast<long>(r.edits)) / pairs);
            if (csv(o)) {
                std::cout << "edits,normalized\n" << r.edits << "," << norm << "\n";
                return;
            }
            emit(json{{"edits", r.edits}, {"normalized", norm}, {"member", is_member(r.witness, f)}, {"witness", format_graph(r.witness)}});
        },
        load_property(o.property));
    return 0;
}

int cmd_sample(const Options& o) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    std::string text;
    if (!o.palette.empty()) {
        DirectedFamily shape;
        try {
            shape.palette = Palette::of(parse_palette_kind(o.palette));
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
        const auto d = density_for(shape, o.p);
        text = format_header(shape) + format_graph(sample_digraph(o.n, d, o.seed));
    } else {
        const DensityVector p(parse_list(o.p));
        MulticolorFamily shape;
        shape.r = p.r();
        text = format_header(shape) + format_graph(sample_rgraph(o.n, p, o.seed));
    }
    if (o.format == "json") emit(json{{"n", o.n}, {"seed", o.seed}, {"graph", text}});
    else std::cout << text;
    return 0;
}

int cmd_estimate(const Options& o) {
    EstimateMode mode;
    if (o.estimate_mode == "exact") mode = EstimateMode::exact;
    else if (o.estimate_mode == "algorithmic") mode = EstimateMode::algorithmic;
    else throw UsageError("--mode must be exact or algorithmic");
    std::visit(
        [&](const auto& f) {
            using Kind = KindOf<decltype(f)>;
            const auto p = density_for(f, o.p);
            const auto s = estimate_dist<Kind>(o.n, p, f, o.trials, o.seed, o.kmax, mode, o.jobs);
            if (csv(o)) {
                std::cout << "trial,normalized\n";
                for (std::size_t t = 0; t < s.samples.size(); ++t) std::cout << t << "," << to_string(s.samples[t]) << "\n";
                return;
            }
            emit(json{{"n", o.n},
                      {"mode", o.estimate_mode},
                      {"trials", s.trials},
                      {"mean", s.mean},
                      {"sd", s.sd},
                      {"min", s.min},
                      {"max", s.max},
                      {"samples", rationals_json(s.samples)}});
        },
        load_property(o.property));
    return 0;
}

int cmd_verify(const Options& o) {
    const auto reports = verify_paper(o.case_id, o.jobs);
    bool ok = true;
    if (csv(o)) std::cout << "case,check,expected,computed,pass\n";
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.pass();
        json checks = json::array();
        for (const auto& c : r.checks) {
            if (csv(o)) std::cout << r.id << ",\"" << c.name << "\"," << c.expected << "," << c.computed << "," << (c.pass ? "pass" : "fail") << "\n";
            checks.push_back(json{{"check", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
        }
        arr.push_back(json{{"case", r.id}, {"pass", r.pass()}, {"checks", checks}});
    }
    if (!csv(o)) emit(json{{"pass", ok}, {"cases", arr}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edit distances of colored complete graphs and digraphs to hereditary properties"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "json (default) or csv; text for types and sample")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));

    auto property = [&](CLI::App* c) { c->add_option("--property", o.property, "property file")->required(); };
    auto kmax = [&](CLI::App* c) {
        c->add_option("--kmax", o.kmax, "largest type size")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
        c->add_option("--ceiling", o.ceiling, "refuse enumerations larger than this");
    };

    auto* spectrum = app.add_subcommand("spectrum", "clique spectrum");
    property(spectrum);
    spectrum->add_option("--mode", o.mode, "weak or strong");

    auto* chi = app.add_subcommand("chi", "chromatic number");
    property(chi);
    chi->add_option("--mode", o.mode, "weak or strong");

    auto* types = app.add_subcommand("types", "admissible types");
    property(types);
    kmax(types);

    auto* distfn = app.add_subcommand("distfn", "edit distance function bounds");
    property(distfn);
    kmax(distfn);
    distfn->add_option("--p", o.p, "density, e.g. \"1/3,1/3,1/3\" or \"p,q\" for digraphs");
    distfn->add_option("--grid", o.grid, "grid step 1/N");
    distfn->add_flag("--max", o.max, "maximize over all densities");
    distfn->add_flag("--lower", o.lower, "Turan lower bound");

    auto* edit = app.add_subcommand("edit", "run the partition editor");
    property(edit);
    kmax(edit);
    edit->add_option("--graph", o.graph, "graph file")->required();
    edit->add_option("--type-index", o.type_index, "index into the admissible types");
    edit->add_option("--weights", o.weights, "part probabilities (default uniform)");
    edit->add_option("--seed", o.seed, "random seed")->required();
    edit->add_option("--trials", o.trials, "independent runs")->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

    auto* oracle = app.add_subcommand("oracle", "exact edit distance");
    property(oracle);
    oracle->add_option("--graph", o.graph, "graph file")->required();

    auto* sample = app.add_subcommand("sample", "random graph G(n,p)");
    sample->add_option("--n", o.n, "vertices")->required();
    sample->add_option("--p", o.p, "density")->required();
    sample->add_option("--palette", o.palette, "sample a digraph with this palette");
    sample->add_option("--seed", o.seed, "random seed")->required();

    auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of dist_n(p,H)");
    property(estimate);
    kmax(estimate);
    estimate->add_option("--n", o.n, "vertices")->required();
    estimate->add_option("--p", o.p, "density")->required();
    estimate->add_option("--trials", o.trials, "samples")->required();
    estimate->add_option("--seed", o.seed, "random seed")->required();
    estimate->add_option("--mode", o.estimate_mode, "exact or algorithmic");

    auto* verify = app.add_subcommand("verify-paper", "reproduce the built-in reference values");
    verify->add_option("--case", o.case_id, "case id or all")->check(CLI::IsMember([] {
        auto ids = verify_case_ids();
        ids.push_back("all");
        return ids;
    }()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(o, false);
        if (chi->parsed()) return cmd_spectrum(o, true);
        if (types->parsed()) return cmd_types(o);
        if (distfn->parsed()) return cmd_distfn(o);
        if (edit->parsed()) return cmd_edit(o);
        if (oracle->parsed()) return cmd_oracle(o);
        if (sample->parsed()) return cmd_sample(o);
        if (estimate->parsed()) return cmd_estimate(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
