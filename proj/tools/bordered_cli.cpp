#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bordered/algebras.hpp"
#include "bordered/fatgraph.hpp"
#include "bordered/foliation.hpp"
#include "bordered/geodesic.hpp"
#include "bordered/moves.hpp"
#include "bordered/poisson.hpp"
#include "bordered/relations.hpp"

using namespace bordered;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

// Input problem with a location; reported as "<where>: <cause>" and exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FatGraph load_graph(const std::string& path) {
    try {
        return FatGraph::parse(read_file(path));
    } catch (const GraphError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Assignment parse_at(const FatGraph& g, const std::string& text) {
    Assignment at(g.edge_count());
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--at: expected name=value, got '" + item + "'");
        const auto e = g.find(item.substr(0, eq));
        if (!e) throw InputError("--at: unknown edge '" + item.substr(0, eq) + "'");
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item.substr(eq + 1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() - eq - 1) throw InputError("--at: bad number in '" + item + "'");
        at.set(*e, v);
    }
    return at;
}

std::string number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void check_line(const RelationCheck& c) {
    std::cout << "CHECK " << c.name << ' ' << (c.holds ? "PASS" : "FAIL");
    if (!c.detail.empty()) std::cout << " [" << c.detail << ']';
    std::cout << '\n';
}

int report(const std::vector<RelationCheck>& checks) {
    for (const auto& c : checks) check_line(c);
    return all_hold(checks) ? 0 : exit_fail;
}

AlgebraKind algebra_of(const std::string& s) { return s == "an" ? AlgebraKind::a_series : AlgebraKind::d_series; }
Regime regime_of(const std::string& s) { return s == "quantum" ? Regime::quantum : Regime::classical; }

struct Options {
    std::string graph;
    std::string word;
    std::vector<std::string> words;
    std::string at;
    std::string edge;
    std::string shear_file;
    std::string algebra = "an";
    std::string regime = "classical";
    int n = 3;
    std::uint64_t seed = 1;
    int samples = 20;
    double tol = 1e-9;
};

int run_eval(const Options& o) {
    const FatGraph g = load_graph(o.graph);
    if (regime_of(o.regime) == Regime::quantum) {
        const PathWord w = parse_path_word(g, o.word);
        std::cout << render(quantum_trace(g, w, torus_context(g)), g.names()) << '\n';
        return 0;
    }
    const LaurentElem trace = literal_trace(parse_matrix_word(g, o.word));
    if (o.at.empty()) {
        std::cout << render(trace, g.names()) << '\n';
        return 0;
    }
    std::cout << number(evaluate(trace, parse_at(g, o.at))) << '\n';
    return 0;
}

int run_flip(const Options& o) {
    const FatGraph g = load_graph(o.graph);
    const auto e = g.find(o.edge);
    if (!e) throw InputError("unknown edge '" + o.edge + "'");
    const FlipResult r = flip(g, *e);
    std::cout << r.after.to_text();
    for (const auto& line : r.describe()) std::cout << "# " << line << '\n';
    if (!o.word.empty()) std::cout << "# word " << format_word(r.after, r.transport(parse_path_word(g, o.word))) << '\n';
    return 0;
}

int run_tropical_flip(const Options& o) {
    const FatGraph g = load_graph(o.graph);
    const auto e = g.find(o.edge);
    if (!e) throw InputError("unknown edge '" + o.edge + "'");
    FoliationShear s;
    try {
        s = parse_shear(g, read_file(o.shear_file));
    } catch (const GraphError& err) {
        throw InputError(o.shear_file + ": " + err.what());
    }
    const TropicalFlip t = tropical_flip(g, s, *e);
    std::cout << format_shear(t.move.after, t.shear);
    const bool before = face_conditions_hold(g, s);
    const bool after = face_conditions_hold(t.move.after, t.shear);
    check_line({"face conditions on the input", before, ""});
    check_line({"face conditions after the flip", after, ""});
    return before && !after ? exit_fail : 0;
}

int run_verify(const std::string& what, const Options& o) {
    std::cout << "seed " << o.seed << '\n';
    const Regime regime = regime_of(o.regime);
    if (what == "an") return report(a_series_relations(o.n, regime));
    if (what == "dn") {
        auto checks = d_series_relations(o.n, regime);
        if (regime == Regime::quantum) checks.push_back(d_series_jacobi(o.n));
        for (auto& c : invariant_relations(o.n, regime)) checks.push_back(std::move(c));
        return report(checks);
    }
    const AlgebraKind kind = algebra_of(o.algebra);
    auto checks = braid_relations(kind, regime, o.n);
    const SamplingOptions opt{o.seed, o.samples, o.tol};
    if (kind == AlgebraKind::a_series) {
        for (auto& c : numeric_braid_relations(o.n, opt)) checks.push_back(std::move(c));
    } else {
        const auto w = chain_power_counterexample(kind, o.n, o.seed, o.samples, o.tol);
        std::string detail = "no witness found";
        if (w) {
            const FatGraph g = algebra_graph(kind, o.n);
            detail = "G_" + std::to_string(w->i) + std::to_string(w->j) + " " + number(w->before) + " -> " +
                     number(w->after) + " at " + format_point(g, w->point);
        }
        checks.push_back({"(R_{n-1,n} ... R_12)^n = Id is lost", w.has_value(), detail});
    }
    return report(checks);
}

int run_double(const Options& o) {
    const FatGraph g = load_graph(o.graph);
    const DoubledSignature d = double_signature(signature(g));
    if (d.degenerate) {
        std::cout << "degenerate: no marked points, the double is two disjoint copies\n";
        return exit_fail;
    }
    std::cout << "ĝ=" << d.genus << " ŝ=" << d.holes << '\n';
    return 0;
}

int run_bracket(const Options& o) {
    const FatGraph g = load_graph(o.graph);
    if (o.words.size() != 2) throw InputError("bracket needs --word twice");
    const PathWord a = parse_path_word(g, o.words[0]);
    const PathWord b = parse_path_word(g, o.words[1]);
    if (regime_of(o.regime) == Regime::quantum) {
        const TorusContext ctx = torus_context(g);
        std::cout << render(commutator(quantum_trace(g, a, ctx), quantum_trace(g, b, ctx)), g.names()) << '\n';
    } else {
        std::cout << render(bracket(holonomy_trace(g, a), holonomy_trace(g, b), wp_matrix(g)), g.names()) << '\n';
    }
    return 0;
}

std::string missing_names(const FatGraph* g, const AssignmentError& e) {
    std::string out;
    for (EdgeId id : e.missing()) out += (out.empty() ? "" : ", ") + (g ? g->name(id) : std::to_string(index(id)));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shear-coordinate computations on fatgraphs of bordered surfaces"};
    app.require_subcommand(1);
    Options o;
    const auto graph_opt = [&](CLI::App* sub, bool positional) {
        if (positional)
            sub->add_option("graph", o.graph, "graph file")->required();
        else
            sub->add_option("--graph", o.graph, "graph file")->required();
    };
    const auto sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--samples", o.samples, "random points per check")->check(CLI::PositiveNumber);
        sub->add_option("--tol", o.tol, "relative tolerance")->check(CLI::PositiveNumber);
    };
    const auto regime_opt = [&](CLI::App* sub) {
        sub->add_option("--regime", o.regime, "classical or quantum")->check(CLI::IsMember({"classical", "quantum"}));
    };

    auto* eval = app.add_subcommand("eval", "trace of a literal matrix word, symbolic or at a point");
    graph_opt(eval, false);
    eval->add_option("--word", o.word, "edge:dir:turn,...")->required();
    eval->add_option("--at", o.at, "name=value,...");
    regime_opt(eval);

    auto* flip_cmd = app.add_subcommand("flip", "flip an edge; prints the new graph and the coordinate map");
    flip_cmd->add_option("graph", o.graph, "graph file")->required();
    flip_cmd->add_option("edge", o.edge, "edge name")->required();
    flip_cmd->add_option("--word", o.word, "path to transport");

    auto* tropical = app.add_subcommand("tropical", "tropical foliation-shear dynamics");
    tropical->require_subcommand(1);
    auto* tflip = tropical->add_subcommand("flip", "tropical flip of a shear vector file");
    tflip->add_option("graph", o.graph, "graph file")->required();
    tflip->add_option("edge", o.edge, "edge name")->required();
    tflip->add_option("shear", o.shear_file, "edge=value lines")->required();

    auto* verify = app.add_subcommand("verify", "relation checks; exit 0 iff all pass");
    verify->require_subcommand(1);
    std::string verify_what;
    for (const char* name : {"an", "dn", "braid"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--n", o.n, "algebra size")->check(CLI::PositiveNumber);
        regime_opt(sub);
        sampling(sub);
        if (std::string(name) == "braid")
            sub->add_option("--algebra", o.algebra, "an or dn")->check(CLI::IsMember({"an", "dn"}));
        sub->callback([&verify_what, name] { verify_what = name; });
    }

    auto* dbl = app.add_subcommand("double", "genus and holes of the double");
    graph_opt(dbl, false);

    auto* br = app.add_subcommand("bracket", "Poisson bracket or commutator of two geodesic functions");
    graph_opt(br, false);
    br->add_option("--word", o.words, "path word, given twice")->required()->expected(1)->multi_option_policy(
        CLI::MultiOptionPolicy::TakeAll);
    regime_opt(br);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    const FatGraph* graph_for_errors = nullptr;
    std::optional<FatGraph> loaded;
    try {
        if (!o.graph.empty()) {
            loaded = load_graph(o.graph);
            graph_for_errors = &*loaded;
        }
        if (*eval) return run_eval(o);
        if (*flip_cmd) return run_flip(o);
        if (*tflip) return run_tropical_flip(o);
        if (*verify) {
            if (o.n < minimum_size(algebra_of(verify_what == "braid" ? o.algebra : verify_what)))
                throw InputError("--n below the minimum size of the algebra");
            return run_verify(verify_what, o);
        }
        if (*dbl) return run_double(o);
        if (*br) return run_bracket(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const WordError& e) {
        std::cerr << "error: --word: " << e.what() << '\n';
        return exit_input;
    } catch (const AssignmentError& e) {
        std::cerr << "error: missing coordinate values for " << missing_names(graph_for_errors, e) << '\n';
        return exit_input;
    } catch (const WrongMoveError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << " (seed " << o.seed << ")\n";
        return exit_internal;
    }
    return exit_input;
}
