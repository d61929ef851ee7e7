// graphlogic: recognition, deletion, domination, coloring, decomposition and
// formula evaluation over small graphs, with stable machine-readable output.
//
// Exit codes: 0 success / affirmative, 1 negative answer, 2 usage or parse
// error, 3 infeasible, 4 resource cap or deadline.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "graphlogic/catalog.hpp"
#include "graphlogic/coloring.hpp"
#include "graphlogic/decomposition.hpp"
#include "graphlogic/domination.hpp"
#include "graphlogic/evaluator.hpp"
#include "graphlogic/generators.hpp"
#include "graphlogic/graph_io.hpp"
#include "graphlogic/modification.hpp"
#include "graphlogic/recognition.hpp"
#include "graphlogic/serialize.hpp"

using namespace graphlogic;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitCap = 4;

Deadline deadline_from(double secs) {
    if (secs > 0) return Deadline::after_seconds(secs);
    if (const char* env = std::getenv("GRAPHLOGIC_DEADLINE_SECS")) {
        try {
            double v = std::stod(env);
            if (v > 0) return Deadline::after_seconds(v);
        } catch (const std::exception&) {
            throw InputError("GRAPHLOGIC_DEADLINE_SECS is not a number");
        }
    }
    return {};
}

Graph load_graph(const std::string& path, const std::string& format) {
    return read_graph_file(path, graph_format_from_name(format));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct RecognizeArgs {
    std::string input, cls, format = "edge-list", output = "json";
};

int cmd_recognize(const RecognizeArgs& a) {
    Graph g = load_graph(a.input, a.format);
    auto cls = recognition::class_from_name(a.cls);
    auto d = recognition::is_in_class(g, cls);
    if (a.output == "text") {
        if (d.member) {
            std::cout << recognition::class_name(cls) << ": yes\n";
        } else {
            std::cout << recognition::class_name(cls) << ": no";
            if (d.witness && !d.witness->pattern.empty())
                std::cout << " (witness " << d.witness->pattern << ")";
            std::cout << "\n";
        }
    } else {
        json j;
        j["class"] = recognition::class_name(cls);
        j["member"] = d.member;
        j["witness"] = d.witness ? to_json(*d.witness) : json();
        emit(std::cout, j);
    }
    return d.member ? kExitTrue : kExitFalse;
}

struct DeleteArgs {
    std::string input, cls, format = "edge-list";
    std::string mode = "node", method = "auto";
    bool prefer_exact = false;
    int cap = 16;
    double deadline_secs = 0;
};

int cmd_delete(const DeleteArgs& a) {
    using namespace modification;
    Graph g = load_graph(a.input, a.format);
    auto cls = recognition::class_from_name(a.cls);
    Mode mode = mode_from_name(a.mode);
    SearchOptions opts;
    opts.node_cap = a.cap;
    opts.edge_cap = a.cap;
    opts.deadline = deadline_from(a.deadline_secs);

    Method method;
    if (a.method == "exact") {
        method = Method::Exact;
    } else if (a.method == "approx") {
        method = recognition::is_pattern_class(cls) ? Method::ApproxPacking
                                                    : Method::HeuristicConflict;
    } else if (a.method == "auto") {
        if (a.prefer_exact &&
            (mode == Mode::Node ? g.vertex_count() <= a.cap : g.edge_count() <= a.cap))
            method = Method::Exact;
        else
            method = recognition::is_pattern_class(cls) ? Method::ApproxPacking
                                                        : Method::HeuristicConflict;
    } else {
        throw InputError("unknown method '" + a.method + "'");
    }
    if (!supports(cls, mode, method))
        throw InputError(recognition::class_name(cls) + " " + a.mode + " deletion has no " +
                         method_name(method) + " solver (not formulated)");
    DeletionResult r;
    switch (method) {
        case Method::Exact:
            r = mode == Mode::Node ? exact_node_deletion(g, cls, opts)
                                   : exact_edge_deletion(g, cls, opts);
            break;
        case Method::ApproxPacking:
            r = mode == Mode::Node ? approx_node_deletion(g, cls) : approx_edge_deletion(g, cls);
            break;
        case Method::HeuristicConflict:
            r = heuristic_orientation_deletion(g, cls, mode);
            break;
    }
    emit(std::cout, to_json(r));
    return kExitTrue;
}

struct SolveArgs {
    std::string input, variant, format = "edge-list";
    std::string td_path, strategy = "min-fill", method = "auto";
    int k = 0;
    bool min_k = false;
    int cap = 20;
    double deadline_secs = 0;
};

tw::NiceDecomposition solve_decomposition(const Graph& g, const SolveArgs& a) {
    tw::TreeDecomposition td;
    if (!a.td_path.empty()) {
        td = tw::read_td_file(a.td_path);
        tw::validate_decomposition(g, td);
    } else {
        td = tw::decompose(g, tw::strategy_from_name(a.strategy));
    }
    return tw::make_nice(td);
}

int cmd_solve(const SolveArgs& a) {
    Graph g = load_graph(a.input, a.format);
    const bool is_coloring_name = [&] {
        try {
            tw::coloring_variant_from_name(a.variant);
            return true;
        } catch (const InputError&) {
            return false;
        }
    }();

    if (is_coloring_name) {
        auto variant = tw::coloring_variant_from_name(a.variant);
        if (!a.min_k && a.k < 1) throw InputError("coloring needs --k or --min-k");
        tw::ColoringResult r;
        if (variant == tw::ColoringVariant::Proper) {
            auto nd = solve_decomposition(g, a);
            r = a.min_k ? tw::minimize_k_coloring_dp(g, nd) : tw::solve_coloring_dp(g, nd, a.k);
        } else {
            tw::ColoringOptions opts;
            opts.deadline = deadline_from(a.deadline_secs);
            r = a.min_k ? tw::minimize_k_coloring_exact(g, variant, opts)
                        : tw::solve_coloring_exact(g, variant, a.k, opts);
        }
        emit(std::cout, to_json(r));
        return r.feasible ? kExitTrue : kExitInfeasible;
    }

    auto variant = tw::dom_variant_from_name(a.variant);
    bool use_dp = tw::dom_variant_has_dp(variant);
    if (a.method == "exact") use_dp = false;
    if (a.method == "dp" && !use_dp)
        throw InputError("no dynamic program for " + a.variant + "; use --method exact");
    tw::DominationResult r;
    if (use_dp) {
        r = tw::solve_domination_dp(g, solve_decomposition(g, a), variant);
    } else {
        tw::ExactSolveOptions opts;
        opts.cap = a.cap;
        opts.deadline = deadline_from(a.deadline_secs);
        r = tw::solve_domination_exact(g, variant, opts);
    }
    emit(std::cout, to_json(r));
    return r.feasible ? kExitTrue : kExitInfeasible;
}

struct DecomposeArgs {
    std::string input, format = "edge-list", strategy = "min-fill", out;
};

int cmd_decompose(const DecomposeArgs& a) {
    Graph g = load_graph(a.input, a.format);
    tw::TreeDecomposition td = tw::decompose(g, tw::strategy_from_name(a.strategy));
    if (a.out.empty())
        tw::write_td(std::cout, td);
    else
        tw::write_td_file(a.out, td);
    return kExitTrue;
}

struct CheckArgs {
    std::string input, formula, set_text, format = "edge-list";
    double deadline_secs = 0;
};

int cmd_check(const CheckArgs& a) {
    Graph g = load_graph(a.input, a.format);
    logic::Formula f = [&] {
        if (!a.formula.empty() && a.formula[0] == '@')
            return logic::catalog_formula(a.formula.substr(1));
        std::ifstream in(a.formula);
        if (!in) throw InputError("cannot open formula file '" + a.formula + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return logic::parse_formula(ss.str());
    }();
    logic::Structure m;
    m.graph = &g;
    for (const auto& fv : f.free_vars()) {
        if (fv.sort == logic::VarSort::Orientation)
            throw InputError("formula quantifies an orientation; check cannot bind it");
        if (fv.sort == logic::VarSort::Vertex || fv.sort == logic::VarSort::Edge)
            throw InputError("formula has a free element variable '" + fv.name + "'");
    }
    auto sets = f.free_set_vars();
    if (sets.size() > 1) throw InputError("formula has more than one free set variable");
    if (sets.size() == 1) {
        VertexSet vs;
        EdgeSet es;
        std::stringstream ss(a.set_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto dash = item.find('-');
            if (dash != std::string::npos)
                es.push_back(make_edge(std::stoi(item.substr(0, dash)),
                                       std::stoi(item.substr(dash + 1))));
            else
                vs.push_back(std::stoi(item));
        }
        if (sets[0].sort == logic::VarSort::VertexSet)
            m.vertex_sets[sets[0].name] = canonical_vertex_set(vs);
        else
            m.edge_sets[sets[0].name] = canonical_edge_set(es);
    }
    logic::EvalOptions opts;
    opts.deadline = deadline_from(a.deadline_secs);
    bool value = logic::evaluate(f, m, opts);
    json j;
    j["formula"] = a.formula;
    j["value"] = value;
    emit(std::cout, j);
    return value ? kExitTrue : kExitFalse;
}

struct GenArgs {
    std::string kind, out, td_out, format = "edge-list";
    int n = 0;
    double p = 0.5;
    uint32_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
    Graph g;
    std::optional<tw::TreeDecomposition> td;
    if (a.kind == "path") {
        g = path_graph(a.n);
    } else if (a.kind == "cycle") {
        g = cycle_graph(a.n);
    } else if (a.kind == "star") {
        g = star_graph(a.n);
    } else if (a.kind == "complete") {
        g = complete_graph(a.n);
    } else if (a.kind == "gnp") {
        g = gnp_graph(a.n, a.p, a.seed);
    } else if (a.kind == "partial-2-tree") {
        auto r = partial_two_tree(a.n, a.seed);
        g = r.graph;
        td = r.decomposition;
    } else {
        throw InputError("unknown generator '" + a.kind + "'");
    }
    GraphFormat fmt = graph_format_from_name(a.format);
    if (a.out.empty())
        write_graph(std::cout, g, fmt);
    else
        write_graph_file(a.out, g, fmt);
    if (!a.td_out.empty()) {
        if (!td) throw InputError("--td-out is only available for partial-2-tree");
        tw::write_td_file(a.td_out, *td);
    }
    return kExitTrue;
}

struct AuditArgs {
    std::string cls, mode = "node";
    int count = 100;
    int max_n = 8;
    double p = 0.5;
    uint32_t seed = 0;
    double deadline_secs = 0;
};

int cmd_audit(const AuditArgs& a) {
    using namespace modification;
    auto cls = recognition::class_from_name(a.cls);
    Mode mode = mode_from_name(a.mode);
    SearchOptions opts;
    opts.deadline = deadline_from(a.deadline_secs);
    Rng rng(a.seed);
    double max_ratio = 0, sum_ratio = 0;
    int violations = 0;
    int done = 0;
    uint32_t sub_seed = a.seed;
    std::optional<int> bound;
    if (recognition::is_pattern_class(cls) && mode == Mode::Node)
        bound = cls == recognition::GraphClass::Split ? 5 : 4;
    while (done < a.count) {
        Graph g = gnp_graph(2 + rng.below(std::max(1, a.max_n - 1)), a.p, sub_seed++);
        if (mode == Mode::Edge && g.edge_count() > opts.edge_cap) continue;
        auto audit = audit_ratio(g, cls, mode, opts);
        max_ratio = std::max(max_ratio, audit.ratio);
        sum_ratio += audit.ratio;
        if (bound && audit.ratio > *bound + 1e-9) ++violations;
        ++done;
    }
    json j;
    j["class"] = recognition::class_name(cls);
    j["mode"] = a.mode;
    j["count"] = a.count;
    j["meanRatio"] = done ? sum_ratio / done : 1.0;
    j["maxRatio"] = max_ratio;
    j["ratioBound"] = bound ? json(*bound) : json();
    j["boundViolations"] = violations;
    emit(std::cout, j);
    return violations == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph class recognition, modification and MSO-style solvers"};
    app.require_subcommand(1);

    RecognizeArgs rec;
    auto* recognize = app.add_subcommand("recognize", "decide class membership");
    recognize->add_option("input", rec.input, "graph file")->required();
    recognize->add_option("--class", rec.cls, "target class")->required();
    recognize->add_option("--format", rec.format, "edge-list|dimacs");
    recognize->add_option("--output", rec.output, "json|text");

    DeleteArgs del;
    auto* del_cmd = app.add_subcommand("delete", "node/edge deletion toward a class");
    del_cmd->add_option("input", del.input, "graph file")->required();
    del_cmd->add_option("--class", del.cls, "target class")->required();
    del_cmd->add_option("--mode", del.mode, "node|edge");
    del_cmd->add_option("--method", del.method, "exact|approx|auto");
    del_cmd->add_flag("--prefer-exact", del.prefer_exact, "auto picks exact within caps");
    del_cmd->add_option("--cap", del.cap, "exact search cap")->check(CLI::PositiveNumber);
    del_cmd->add_option("--deadline", del.deadline_secs, "seconds before giving up");
    del_cmd->add_option("--format", del.format, "edge-list|dimacs");

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "domination / coloring solvers");
    solve_cmd->add_option("input", solve.input, "graph file")->required();
    solve_cmd->add_option("--variant", solve.variant, "problem variant")->required();
    solve_cmd->add_option("--k", solve.k, "color count");
    solve_cmd->add_flag("--min-k", solve.min_k, "minimize the color count");
    solve_cmd->add_option("--td", solve.td_path, "tree decomposition file (PACE .td)");
    solve_cmd->add_option("--strategy", solve.strategy, "min-degree|min-fill|exact-small");
    solve_cmd->add_option("--method", solve.method, "dp|exact|auto");
    solve_cmd->add_option("--cap", solve.cap, "exact search cap")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--deadline", solve.deadline_secs, "seconds before giving up");
    solve_cmd->add_option("--format", solve.format, "edge-list|dimacs");

    DecomposeArgs dec;
    auto* dec_cmd = app.add_subcommand("decompose", "compute a tree decomposition");
    dec_cmd->add_option("input", dec.input, "graph file")->required();
    dec_cmd->add_option("--strategy", dec.strategy, "min-degree|min-fill|exact-small");
    dec_cmd->add_option("--out", dec.out, "output file (default stdout)");
    dec_cmd->add_option("--format", dec.format, "edge-list|dimacs");

    CheckArgs chk;
    auto* chk_cmd = app.add_subcommand("check", "evaluate a formula on a graph");
    chk_cmd->add_option("input", chk.input, "graph file")->required();
    chk_cmd->add_option("--formula", chk.formula, "formula file or @catalog-name")->required();
    chk_cmd->add_option("--set", chk.set_text, "binding, e.g. \"0,2\" or \"0-1,2-3\"");
    chk_cmd->add_option("--deadline", chk.deadline_secs, "seconds before giving up");
    chk_cmd->add_option("--format", chk.format, "edge-list|dimacs");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate instances");
    gen_cmd->add_option("kind", gen.kind, "path|cycle|star|complete|gnp|partial-2-tree")->required();
    gen_cmd->add_option("n", gen.n, "vertex count")->required();
    gen_cmd->add_option("p", gen.p, "edge probability (gnp)");
    gen_cmd->add_option("--seed", gen.seed, "rng seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");
    gen_cmd->add_option("--td-out", gen.td_out, "write the generated decomposition");
    gen_cmd->add_option("--format", gen.format, "edge-list|dimacs");

    AuditArgs audit;
    auto* audit_cmd = app.add_subcommand("audit", "approximation-ratio campaign");
    audit_cmd->add_option("--class", audit.cls, "target class")->required();
    audit_cmd->add_option("--mode", audit.mode, "node|edge");
    audit_cmd->add_option("--count", audit.count, "number of instances");
    audit_cmd->add_option("--max-n", audit.max_n, "largest instance size");
    audit_cmd->add_option("--p", audit.p, "edge probability");
    audit_cmd->add_option("--seed", audit.seed, "rng seed");
    audit_cmd->add_option("--deadline", audit.deadline_secs, "seconds before giving up");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*recognize) return cmd_recognize(rec);
        if (*del_cmd) return cmd_delete(del);
        if (*solve_cmd) return cmd_solve(solve);
        if (*dec_cmd) return cmd_decompose(dec);
        if (*chk_cmd) return cmd_check(chk);
        if (*gen_cmd) return cmd_gen(gen);
        if (*audit_cmd) return cmd_audit(audit);
    } catch (const CapExceeded& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const DeadlineExceeded& e) {
        std::cerr << "deadline: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
