#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spanhyper/constructions.hpp"
#include "spanhyper/embedder.hpp"
#include "spanhyper/generators.hpp"
#include "spanhyper/hypergraph.hpp"
#include "spanhyper/profile.hpp"
#include "spanhyper/rational.hpp"
#include "spanhyper/search.hpp"
#include "spanhyper/thresholds.hpp"

using json = nlohmann::ordered_json;
using namespace spanhyper;

namespace {

const char* kVersion = "0.1.0";

// flag > SPANHYPER_BUDGET > library default
std::uint64_t default_budget() {
    const char* s = std::getenv("SPANHYPER_BUDGET");
    if (!s || !*s) return kDefaultSearchBudget;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("SPANHYPER_BUDGET must be a non-negative integer");
    }
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

Hypergraph load_hg(const std::string& path) {
    try {
        return read_hypergraph_file(path);
    } catch (const ParseError&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
}

Graph load_graph(const std::string& path) {
    auto h = load_hg(path);
    if (h.r() != 2) throw std::invalid_argument(path + ": expected a 2-uniform file");
    return to_graph(h);
}

// report goes to stdout, or atomically to --out when given
void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        write_file_atomic(out, text);
}

void emit_json(const json& j, const std::string& out) { emit(j.dump(2) + "\n", out); }

struct Common {
    std::uint64_t seed = 0;
    int jobs = 0;
    bool as_json = false;
    std::string out;
};

// ---- gen ----

struct GenArgs {
    std::string type;
    int n = 0, r = 3, ell = 1, d = 0, k = 0, i = 0, t = 0, delta = 0;
    double p = -1.0;
    long long m = -1;
};

int run_gen(const GenArgs& a, const Common& c) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("gen --type " + a.type + " requires " + what);
    };
    Hypergraph h;
    std::string params;
    if (a.type == "gnp") {
        need(a.n > 0 && a.p >= 0.0, "--n and --p");
        h = gnp(a.n, a.r, a.p, c.seed);
        params = "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " p=" + fmt_double(a.p);
    } else if (a.type == "gnm") {
        need(a.n > 0 && a.m >= 0, "--n and --m");
        h = gnm(a.n, a.r, static_cast<std::uint64_t>(a.m), c.seed);
        params = "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " m=" + std::to_string(a.m);
    } else if (a.type == "hamilton") {
        need(a.n > 0, "--n");
        h = hamilton_cycle(a.n, a.r, a.ell);
        params = "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " ell=" + std::to_string(a.ell);
    } else if (a.type == "cube") {
        need(a.d > 0, "--d");
        h = cube_hypergraph(a.r, a.d);
        params = "r=" + std::to_string(a.r) + " d=" + std::to_string(a.d);
    } else if (a.type == "lattice") {
        need(a.k > 0, "--k");
        h = lattice(a.r, a.k);
        params = "r=" + std::to_string(a.r) + " k=" + std::to_string(a.k);
    } else if (a.type == "sphere") {
        need(a.n > 0, "--n");
        h = sphere_apollonian(a.n, c.seed);
        params = "n=" + std::to_string(a.n);
    } else if (a.type == "power") {
        need(a.n > 0 && a.i > 0, "--n and --i");
        h = power_hamilton_cycle(a.n, a.r, a.i);
        params = "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " i=" + std::to_string(a.i);
    } else if (a.type == "kfactor") {
        need(a.n > 0 && a.t > 0, "--n and --t");
        h = kfactor(a.n, a.r, a.t);
        params = "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) + " t=" + std::to_string(a.t);
    } else if (a.type == "bounded") {
        need(a.n > 0 && a.delta > 0, "--n and --delta");
        h = sample_bounded_degree(a.n, a.r, a.delta, c.seed);
        params = "n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) +
                 " delta=" + std::to_string(a.delta);
    } else {
        throw std::invalid_argument("unknown --type " + a.type);
    }
    if (c.out.empty()) throw std::invalid_argument("gen requires --out FILE.hg");
    std::vector<std::string> meta{std::string("spanhyper ") + kVersion,
                                  "cmd=gen type=" + a.type + " " + params + " seed=" + std::to_string(c.seed)};
    write_file_atomic(c.out, format_hypergraph(h, meta));
    if (c.as_json) {
        json j{{"out", c.out}, {"r", h.r()}, {"n", h.n()}, {"m", h.edge_count()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << c.out << ": " << h.r() << "-uniform, " << h.n() << " vertices, "
                  << h.edge_count() << " edges\n";
    }
    return 0;
}

// ---- gamma ----

int run_gamma(const std::string& file, bool table, const Common& c) {
    auto h = load_hg(file);
    auto rep = gamma(h);
    if (c.as_json) {
        json j{{"gamma", to_string(rep.gamma)},
               {"argmax_v", rep.argmax_v},
               {"alpha", to_string(rep.alpha)},
               {"n", h.n()},
               {"r", h.r()},
               {"m", h.edge_count()}};
        if (table) {
            json rows = json::array();
            for (int v = h.r(); v < static_cast<int>(rep.e_sub_table.size()); ++v)
                rows.push_back({{"v", v}, {"e_sub", rep.e_sub_table[v]}});
            j["e_sub"] = rows;
        }
        emit_json(j, c.out);
    } else {
        std::string text = "gamma = " + to_string(rep.gamma) + " (argmax v = " +
                           std::to_string(rep.argmax_v) + ")\nalpha = " + to_string(rep.alpha) + "\n";
        if (table) {
            text += "v e_sub\n";
            for (int v = h.r(); v < static_cast<int>(rep.e_sub_table.size()); ++v)
                text += std::to_string(v) + " " + std::to_string(rep.e_sub_table[v]) + "\n";
        }
        emit(text, c.out);
    }
    return 0;
}

// ---- fratio ----

int run_fratio(const std::string& file, int n, int m, bool cheb, const Common& c) {
    auto pattern = load_hg(file);
    auto rep = second_moment_ratio(pattern, n, m);
    json j{{"n", rep.n},
           {"r", rep.r},
           {"m", rep.m},
           {"possible_edges", rep.possible_edges},
           {"pattern_edges", rep.pattern_edges},
           {"copy_count", to_string(rep.copy_count)},
           {"ex", to_string(rep.ex)},
           {"ex2", to_string(rep.ex2)},
           {"ex_positive", rep.ex_positive},
           {"ratio", to_string(rep.ratio)}};
    std::string text = "E X = " + to_string(rep.ex) + "\nE X^2 = " + to_string(rep.ex2) +
                       "\nratio = " + to_string(rep.ratio) + "\n";
    if (cheb) {
        auto ch = chebyshev_check(pattern, n, m);
        j["chebyshev"] = json{{"hosts", to_string(ch.hosts)},
                              {"p_zero", to_string(ch.p_zero)},
                              {"bound", to_string(ch.bound)},
                              {"applicable", ch.applicable},
                              {"holds", ch.holds},
                              {"ex_enum", to_string(ch.ex_enum)},
                              {"ex2_enum", to_string(ch.ex2_enum)}};
        text += "P(X=0) = " + to_string(ch.p_zero) + ", bound ratio-1 = " + to_string(ch.bound) +
                (ch.applicable ? (ch.holds ? " (holds)" : " (violated)") : " (not applicable)") + "\n";
    }
    if (c.as_json)
        emit_json(j, c.out);
    else
        emit(text, c.out);
    return 0;
}

// ---- conditions ----

int run_conditions(const std::string& file, double p, const std::string& gamma_str, const Common& c) {
    auto h = load_hg(file);
    std::optional<Rational> g;
    if (!gamma_str.empty()) g = parse_rational(gamma_str);
    auto rep = check_riordan_conditions(h, p, g);
    if (c.as_json) {
        json j{{"p", p},
               {"alpha", to_string(rep.alpha)},
               {"lhs_first", to_string(rep.lhs_first)},
               {"rhs_first", to_string(rep.rhs_first)},
               {"slack_first", to_string(rep.slack_first)},
               {"holds_first", rep.holds_first},
               {"growth_first", rep.growth_first},
               {"gamma", to_string(rep.gamma_value)},
               {"max_deg", rep.max_deg},
               {"value_second", rep.value_second}};
        emit_json(j, c.out);
    } else {
        std::string text =
            "first condition: " + to_string(rep.lhs_first) + " >= " + to_string(rep.rhs_first) +
            (rep.holds_first ? " (holds)" : " (violated)") +
            ", growth term = " + fmt_double(rep.growth_first) + "\n" +
            "second condition: gamma = " + to_string(rep.gamma_value) +
            ", value = " + fmt_double(rep.value_second) + " (must grow)\n";
        emit(text, c.out);
    }
    return 0;
}

// ---- contain ----

int run_contain(const std::string& host_file, const std::string& pattern_file, bool spanning,
                std::uint64_t budget, const Common& c) {
    auto host = load_hg(host_file);
    auto pattern = load_hg(pattern_file);
    auto res = find_embedding(host, pattern, spanning, budget);
    const char* status = res.status == SearchStatus::Found        ? "found"
                         : res.status == SearchStatus::NotFound   ? "not-found"
                                                                  : "budget-exhausted";
    if (c.as_json) {
        json j{{"status", status}, {"nodes", res.nodes}};
        if (res.status == SearchStatus::Found) j["mapping"] = res.embedding.mapping;
        emit_json(j, c.out);
    } else {
        std::string text = std::string(status) + " after " + std::to_string(res.nodes) + " nodes\n";
        if (res.status == SearchStatus::Found) {
            text += "mapping:";
            for (std::size_t i = 0; i < res.embedding.mapping.size(); ++i)
                text += " " + std::to_string(i + 1) + "->" + std::to_string(res.embedding.mapping[i]);
            text += "\n";
        }
        emit(text, c.out);
    }
    return res.status == SearchStatus::BudgetExhausted ? 1 : 0;
}

// ---- threshold ----

struct ThresholdArgs {
    std::string family = "tight-hamilton";
    int n = 0, r = 3, ell = 1;
    double pmin = 0.1, pmax = 0.9;
    int steps = 9, trials = 100;
    bool uncoupled = false;
    std::uint64_t budget = 0;
};

int run_threshold(const ThresholdArgs& a, const Common& c) {
    int ell;
    if (a.family == "tight-hamilton")
        ell = a.r - 1;
    else if (a.family == "loose-hamilton")
        ell = 1;
    else if (a.family == "hamilton")
        ell = a.ell;
    else
        throw std::invalid_argument("unknown --family " + a.family);
    if (a.n <= 0) throw std::invalid_argument("threshold requires --n");
    if (a.steps < 1) throw std::invalid_argument("--steps must be at least 1");
    auto pattern = hamilton_cycle(a.n, a.r, ell);
    std::vector<double> grid;
    for (int i = 0; i < a.steps; ++i)
        grid.push_back(a.steps == 1 ? a.pmin
                                    : a.pmin + (a.pmax - a.pmin) * i / (a.steps - 1));
    auto curve = monte_carlo_curve(pattern, a.family, grid, a.trials, c.seed, a.budget, c.jobs,
                                   !a.uncoupled);
    std::string csv;
    csv += std::string("# version=") + kVersion + "\n";
    csv += "# cmd=threshold\n";
    csv += "# family=" + a.family + "\n";
    csv += "# n=" + std::to_string(a.n) + "\n";
    csv += "# r=" + std::to_string(a.r) + "\n";
    csv += "# ell=" + std::to_string(ell) + "\n";
    csv += "# pmin=" + fmt_double(a.pmin) + "\n";
    csv += "# pmax=" + fmt_double(a.pmax) + "\n";
    csv += "# steps=" + std::to_string(a.steps) + "\n";
    csv += "# trials=" + std::to_string(a.trials) + "\n";
    csv += "# seed=" + std::to_string(c.seed) + "\n";
    csv += "# budget=" + std::to_string(a.budget) + "\n";
    csv += std::string("# coupled=") + (a.uncoupled ? "0" : "1") + "\n";
    csv += "p,trials,successes,phat,ci_low,ci_high\n";
    for (const auto& pt : curve.points)
        csv += fmt_double(pt.p) + "," + std::to_string(pt.trials) + "," +
               std::to_string(pt.successes) + "," + fmt_double(pt.phat) + "," +
               fmt_double(pt.ci_low) + "," + fmt_double(pt.ci_high) + "\n";
    emit(csv, c.out);
    if (!c.out.empty()) std::cout << c.out << ": " << curve.points.size() << " grid points\n";
    return 0;
}

// ---- embed / goodness shared partition setup ----

EmbedPartition make_pattern_partition(const Hypergraph& f, int delta, int t_flag,
                                      const std::string& eps_flag) {
    std::optional<int> t_override;
    if (t_flag > 0) t_override = t_flag;
    Rational eps;
    if (!eps_flag.empty()) {
        eps = parse_rational(eps_flag);
    } else {
        if (t_override)
            throw std::invalid_argument("--epsilon is required when --t is given");
        // fall back to the tightest admissible value for the default t
        long long t = 1;
        for (int q = 0; q < 3; ++q) t *= f.r();
        for (int q = 0; q < 3; ++q) t *= delta;
        std::set<std::string> keys;
        for (int v = 1; v <= f.n(); ++v) keys.insert(canonical_profile(profile(f, v)).key);
        eps = Rational(1, static_cast<long long>(keys.size()) * (t - 1));
    }
    return partition_pattern(f, delta, eps, t_override);
}

json stage_json(const StageRecord& st) {
    return json{{"stage", st.stage},         {"demand", st.demand},
                {"available", st.available}, {"slack", st.slack},
                {"matched", st.matched},     {"hall_violator", st.hall_violator}};
}

struct EmbedArgs {
    std::string host_file, pattern_file, trace_file, epsilon;
    int delta = 0, t = 0, attempts = 32;
    std::uint64_t budget = 0;
};

int run_embed(const EmbedArgs& a, const Common& c) {
    auto host = load_hg(a.host_file);
    auto f = load_hg(a.pattern_file);
    if (a.delta < 1) throw std::invalid_argument("embed requires --delta");
    auto ep = make_pattern_partition(f, a.delta, a.t, a.epsilon);
    auto hp = make_host_partition(host.n(), ep.t, ep.epsilon);
    auto tr = embed_universal(host, f, hp, ep, c.seed, a.budget, a.attempts);

    json j{{"success", tr.success},
           {"attempts", tr.attempts},
           {"t", ep.t},
           {"epsilon", to_string(ep.epsilon)},
           {"failure", tr.failure}};
    json stages = json::array();
    for (const auto& st : tr.stages) stages.push_back(stage_json(st));
    j["stages"] = stages;
    if (tr.success) j["mapping"] = tr.embedding.mapping;
    if (!a.trace_file.empty()) {
        json t = j;
        t["config"] = json{{"host", a.host_file},   {"pattern", a.pattern_file},
                           {"delta", a.delta},      {"seed", c.seed},
                           {"attempts", a.attempts}, {"budget", a.budget},
                           {"version", kVersion}};
        write_file_atomic(a.trace_file, t.dump(2) + "\n");
    }
    if (c.as_json) {
        emit_json(j, c.out);
    } else {
        std::string text;
        if (tr.success)
            text = "embedded: t = " + std::to_string(ep.t) + ", " + std::to_string(tr.attempts) +
                   " attempt" + (tr.attempts == 1 ? "" : "s") + ", " +
                   std::to_string(tr.stages.size()) + " stages\n";
        else
            text = "failed: " + tr.failure + " (after " + std::to_string(tr.attempts) +
                   " attempts)\n";
        emit(text, c.out);
    }
    return tr.success ? 0 : 1;
}

struct GoodnessArgs {
    std::string host_file, pattern_file, epsilon, mode = "sampled";
    double p = -1.0;
    int delta = 0, t = 0, samples = 200;
    std::uint64_t budget = 0;
};

int run_goodness(const GoodnessArgs& a, const Common& c) {
    auto host = load_hg(a.host_file);
    if (a.pattern_file.empty()) throw std::invalid_argument("goodness requires --pattern FILE.hg");
    auto f = load_hg(a.pattern_file);
    if (a.p <= 0.0) throw std::invalid_argument("goodness requires --p in (0,1]");
    if (a.delta < 1) throw std::invalid_argument("goodness requires --delta");
    auto ep = make_pattern_partition(f, a.delta, a.t, a.epsilon);
    auto hp = make_host_partition(host.n(), ep.t, ep.epsilon);
    GoodnessOptions opts;
    if (a.mode == "sampled")
        opts.mode = GoodnessMode::Sampled;
    else if (a.mode == "exhaustive")
        opts.mode = GoodnessMode::Exhaustive;
    else
        throw std::invalid_argument("--mode must be sampled or exhaustive");
    opts.samples = a.samples;
    opts.seed = c.seed;
    opts.jobs = c.jobs;
    opts.budget = a.budget;
    auto rep = check_goodness(host, hp, f, ep, a.p, a.delta, opts);

    auto prop = [](const PropertyReport& pr) {
        return json{{"holds", pr.holds},
                    {"vacuous", pr.vacuous},
                    {"checked", pr.checked},
                    {"witness", pr.witness}};
    };
    if (c.as_json) {
        json j{{"t", ep.t},
               {"epsilon", to_string(ep.epsilon)},
               {"copies_needed", rep.copies_needed},
               {"copies_found", rep.copies_found},
               {"p1", prop(rep.p1)},
               {"p2", prop(rep.p2)},
               {"p3", prop(rep.p3)},
               {"all_hold", rep.all_hold}};
        emit_json(j, c.out);
    } else {
        auto line = [](const char* name, const PropertyReport& pr) {
            std::string s = std::string(name) + ": " + (pr.holds ? "holds" : "fails");
            if (pr.vacuous) s += " (vacuous)";
            s += ", checked " + std::to_string(pr.checked);
            if (!pr.witness.empty()) s += ", witness: " + pr.witness;
            return s + "\n";
        };
        std::string text = "copies: " + std::to_string(rep.copies_needed) +
                           (rep.copies_found ? " placed\n" : " MISSING\n");
        text += line("property 1", rep.p1);
        text += line("property 2", rep.p2);
        text += line("property 3", rep.p3);
        text += std::string("all properties: ") + (rep.all_hold ? "hold" : "fail") + "\n";
        emit(text, c.out);
    }
    return 0;
}

// ---- construct ----

int run_construct(const std::string& method, const std::string& graph_file, int r, const Common& c) {
    auto g = load_graph(graph_file);
    Hypergraph h;
    if (method == "hr")
        h = hr_construction(g, r);
    else if (method == "kr")
        h = kr_construction(g, r);
    else
        throw std::invalid_argument("--method must be hr or kr");
    if (c.out.empty()) throw std::invalid_argument("construct requires --out FILE.hg");
    std::vector<std::string> meta{std::string("spanhyper ") + kVersion,
                                  "cmd=construct method=" + method + " r=" + std::to_string(r) +
                                      " source=" + graph_file};
    write_file_atomic(c.out, format_hypergraph(h, meta));
    if (c.as_json) {
        json j{{"out", c.out},
               {"r", h.r()},
               {"n", h.n()},
               {"m", h.edge_count()},
               {"graph_edges", g.edge_count()},
               {"graph_max_degree", g.max_degree()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << c.out << ": " << h.edge_count() << " edges from " << g.edge_count()
                  << " graph edges (max degree " << g.max_degree() << ")\n";
    }
    return 0;
}

// ---- sigma ----

int run_sigma(const std::string& file, bool exact, std::uint64_t budget, const Common& c) {
    auto f = load_hg(file);
    auto hg = hitting_graph(f, budget);
    json j{{"constructive_max_degree", hg.graph.max_degree()},
           {"graph_edges", hg.graph.edge_count()},
           {"pattern_max_degree", f.max_degree()}};
    std::string text = "hitting graph: max degree " + std::to_string(hg.graph.max_degree()) +
                       ", " + std::to_string(hg.graph.edge_count()) + " edges (bound " +
                       std::to_string(f.max_degree()) + ")\n";
    if (exact) {
        int s = sigma_exact(f, budget);
        j["sigma"] = s;
        text += "sigma = " + std::to_string(s) + "\n";
    }
    if (c.as_json)
        emit_json(j, c.out);
    else
        emit(text, c.out);
    return 0;
}

// ---- verify-universal ----

struct VerifyArgs {
    std::string file, base_file;
    int n = 0, r = 3, delta = 0, samples = 20;
    std::uint64_t budget = 0;
};

int run_verify(const VerifyArgs& a, const Common& c) {
    auto h = load_hg(a.file);
    if (a.n <= 0 || a.delta < 1)
        throw std::invalid_argument("verify-universal requires --n and --delta");
    std::optional<Graph> base;
    if (!a.base_file.empty()) base = load_graph(a.base_file);
    auto rep = verify_universal_sampled(h, a.n, a.r, a.delta, a.samples, c.seed,
                                        base ? &*base : nullptr, a.budget, c.jobs);
    if (c.as_json) {
        json details = json::array();
        for (const auto& s : rep.detail)
            details.push_back({{"contained", s.contained},
                               {"budget_exhausted", s.budget_exhausted},
                               {"lifted", s.lifted},
                               {"edges", s.edges}});
        json j{{"samples", rep.samples},
               {"successes", rep.successes},
               {"fraction", rep.fraction},
               {"detail", details}};
        emit_json(j, c.out);
    } else {
        std::string text = std::to_string(rep.successes) + "/" + std::to_string(rep.samples) +
                           " contained (fraction " + fmt_double(rep.fraction) + ")\n";
        for (std::size_t i = 0; i < rep.detail.size(); ++i) {
            const auto& s = rep.detail[i];
            text += "sample " + std::to_string(i) + ": " +
                    (s.contained ? (s.lifted ? "contained (lifted)" : "contained")
                                 : (s.budget_exhausted ? "budget-exhausted" : "not-found")) +
                    ", " + std::to_string(s.edges) + " edges\n";
        }
        emit(text, c.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spanning structures in random uniform hypergraphs: generators, thresholds, "
                 "embedding, and universality checks"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--seed", common.seed, "random seed (all randomness derives from it)")
        ->capture_default_str();
    app.add_option("--jobs", common.jobs, "worker threads, 0 = hardware")->capture_default_str();
    app.add_flag("--json", common.as_json, "machine-readable output");
    app.add_option("--out", common.out, "write primary output to this path (atomic)");

    std::uint64_t budget0;
    try {
        budget0 = default_budget();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    GenArgs gen_args;
    auto* sc_gen = app.add_subcommand("gen", "generate a hypergraph file");
    sc_gen->add_option("--type", gen_args.type,
                       "gnp|gnm|hamilton|cube|lattice|sphere|power|kfactor|bounded")
        ->required();
    sc_gen->add_option("--n", gen_args.n, "vertex count");
    sc_gen->add_option("--r", gen_args.r, "uniformity")->capture_default_str();
    sc_gen->add_option("--ell", gen_args.ell, "cycle overlap")->capture_default_str();
    sc_gen->add_option("--d", gen_args.d, "cube dimension");
    sc_gen->add_option("--k", gen_args.k, "lattice side");
    sc_gen->add_option("--i", gen_args.i, "cycle power");
    sc_gen->add_option("--t", gen_args.t, "factor block size");
    sc_gen->add_option("--delta", gen_args.delta, "max degree");
    sc_gen->add_option("--p", gen_args.p, "edge probability");
    sc_gen->add_option("--m", gen_args.m, "edge count");

    std::string gamma_file;
    bool gamma_table = false;
    auto* sc_gamma = app.add_subcommand("gamma", "exact density parameter of a file");
    sc_gamma->add_option("file", gamma_file, "hypergraph file")->required();
    sc_gamma->add_flag("--table", gamma_table, "include the e_sub table");

    std::string fr_file;
    int fr_n = 0, fr_m = 0;
    bool fr_cheb = false;
    auto* sc_fr = app.add_subcommand("fratio", "exact second-moment ratio in the m-edge model");
    sc_fr->add_option("file", fr_file, "pattern file")->required();
    sc_fr->add_option("--n", fr_n, "host vertices")->required();
    sc_fr->add_option("--m", fr_m, "host edges")->required();
    sc_fr->add_flag("--chebyshev", fr_cheb, "verify the tail bound by full enumeration");

    std::string cond_file, cond_gamma;
    double cond_p = -1.0;
    auto* sc_cond = app.add_subcommand("conditions", "containment-theorem conditions at (h, p)");
    sc_cond->add_option("file", cond_file, "hypergraph file")->required();
    sc_cond->add_option("--p", cond_p, "edge probability")->required();
    sc_cond->add_option("--gamma", cond_gamma, "use this density value instead of computing it");

    std::string ct_host, ct_pattern;
    bool ct_spanning = false;
    std::uint64_t ct_budget = budget0;
    auto* sc_ct = app.add_subcommand("contain", "search for a pattern copy in a host");
    sc_ct->add_option("host", ct_host, "host file")->required();
    sc_ct->add_option("pattern", ct_pattern, "pattern file")->required();
    sc_ct->add_flag("--spanning", ct_spanning, "require a spanning copy");
    sc_ct->add_option("--budget", ct_budget, "search node budget")->capture_default_str();

    ThresholdArgs th_args;
    th_args.budget = budget0;
    auto* sc_th = app.add_subcommand("threshold", "empirical containment curve over a p-grid");
    sc_th->add_option("--family", th_args.family, "tight-hamilton|loose-hamilton|hamilton")
        ->capture_default_str();
    sc_th->add_option("--n", th_args.n, "vertex count")->required();
    sc_th->add_option("--r", th_args.r, "uniformity")->capture_default_str();
    sc_th->add_option("--ell", th_args.ell, "overlap for --family hamilton")->capture_default_str();
    sc_th->add_option("--pmin", th_args.pmin, "grid start")->capture_default_str();
    sc_th->add_option("--pmax", th_args.pmax, "grid end")->capture_default_str();
    sc_th->add_option("--steps", th_args.steps, "grid points")->capture_default_str();
    sc_th->add_option("--trials", th_args.trials, "hosts per grid point")->capture_default_str();
    sc_th->add_flag("--uncoupled", th_args.uncoupled, "independent hosts per grid point");
    sc_th->add_option("--budget", th_args.budget, "search node budget")->capture_default_str();

    EmbedArgs em_args;
    em_args.budget = budget0;
    auto* sc_em = app.add_subcommand("embed", "staged spanning embedding of a pattern");
    sc_em->add_option("host", em_args.host_file, "host file")->required();
    sc_em->add_option("pattern", em_args.pattern_file, "pattern file")->required();
    sc_em->add_option("--delta", em_args.delta, "degree bound for the pattern")->required();
    sc_em->add_option("--t", em_args.t, "number of stages (floor)");
    sc_em->add_option("--epsilon", em_args.epsilon, "reserved fraction, e.g. 1/30");
    sc_em->add_option("--attempts", em_args.attempts, "staged passes before giving up")
        ->capture_default_str();
    sc_em->add_option("--budget", em_args.budget, "copy-placement node budget")
        ->capture_default_str();
    sc_em->add_option("--trace", em_args.trace_file, "write the full stage trace to this file");

    GoodnessArgs gd_args;
    gd_args.budget = budget0;
    auto* sc_gd = app.add_subcommand("goodness", "host-side expansion and edge-presence checks");
    sc_gd->add_option("host", gd_args.host_file, "host file")->required();
    sc_gd->add_option("--pattern", gd_args.pattern_file, "pattern file")->required();
    sc_gd->add_option("--p", gd_args.p, "host edge probability")->required();
    sc_gd->add_option("--delta", gd_args.delta, "degree bound for the pattern")->required();
    sc_gd->add_option("--t", gd_args.t, "number of stages (floor)");
    sc_gd->add_option("--epsilon", gd_args.epsilon, "reserved fraction, e.g. 1/30");
    sc_gd->add_option("--mode", gd_args.mode, "sampled|exhaustive")->capture_default_str();
    sc_gd->add_option("--samples", gd_args.samples, "samples per property")->capture_default_str();
    sc_gd->add_option("--budget", gd_args.budget, "copy-placement node budget")
        ->capture_default_str();

    std::string cons_method, cons_graph;
    int cons_r = 3;
    auto* sc_cons = app.add_subcommand("construct", "expand a graph into a uniform hypergraph");
    sc_cons->add_option("--method", cons_method, "hr|kr")->required();
    sc_cons->add_option("graph", cons_graph, "2-uniform graph file")->required();
    sc_cons->add_option("--r", cons_r, "target uniformity")->capture_default_str();

    std::string sig_file;
    bool sig_exact = false;
    std::uint64_t sig_budget = budget0;
    auto* sc_sig = app.add_subcommand("sigma", "hitting graph and minimum hitting degree");
    sc_sig->add_option("file", sig_file, "hypergraph file")->required();
    sc_sig->add_flag("--exact", sig_exact, "compute the exact minimum (v <= 12)");
    sc_sig->add_option("--budget", sig_budget, "search node budget")->capture_default_str();

    VerifyArgs vf_args;
    vf_args.budget = budget0;
    auto* sc_vf = app.add_subcommand("verify-universal", "sampled bounded-degree universality");
    sc_vf->add_option("file", vf_args.file, "candidate hypergraph file")->required();
    sc_vf->add_option("--n", vf_args.n, "pattern vertices")->required();
    sc_vf->add_option("--r", vf_args.r, "uniformity")->capture_default_str();
    sc_vf->add_option("--delta", vf_args.delta, "pattern degree bound")->required();
    sc_vf->add_option("--samples", vf_args.samples, "patterns to draw")->capture_default_str();
    sc_vf->add_option("--base", vf_args.base_file, "base graph for the clique-lift route");
    sc_vf->add_option("--budget", vf_args.budget, "search node budget")->capture_default_str();

    for (CLI::App* sc : {sc_gen, sc_gamma, sc_fr, sc_cond, sc_ct, sc_th, sc_em, sc_gd, sc_cons,
                         sc_sig, sc_vf})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sc_gen)) return run_gen(gen_args, common);
        if (app.got_subcommand(sc_gamma)) return run_gamma(gamma_file, gamma_table, common);
        if (app.got_subcommand(sc_fr)) return run_fratio(fr_file, fr_n, fr_m, fr_cheb, common);
        if (app.got_subcommand(sc_cond)) return run_conditions(cond_file, cond_p, cond_gamma, common);
        if (app.got_subcommand(sc_ct))
            return run_contain(ct_host, ct_pattern, ct_spanning, ct_budget, common);
        if (app.got_subcommand(sc_th)) return run_threshold(th_args, common);
        if (app.got_subcommand(sc_em)) return run_embed(em_args, common);
        if (app.got_subcommand(sc_gd)) return run_goodness(gd_args, common);
        if (app.got_subcommand(sc_cons)) return run_construct(cons_method, cons_graph, cons_r, common);
        if (app.got_subcommand(sc_sig)) return run_sigma(sig_file, sig_exact, sig_budget, common);
        if (app.got_subcommand(sc_vf)) return run_verify(vf_args, common);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
