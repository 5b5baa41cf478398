// Command-line front end: parses graph/digraph/plane/set-system files,
// computes the interlace family of polynomials through one or both
// pipelines, and runs the cross-validation suites.
//
// Exit codes: 0 all good, 1 mismatch or identity failure, 2 usage or parse
// error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "interlace/check.hpp"
#include "interlace/delta.hpp"
#include "interlace/error.hpp"
#include "interlace/eulerian.hpp"
#include "interlace/interlace_polys.hpp"
#include "interlace/io.hpp"
#include "interlace/isotropic.hpp"
#include "interlace/plane.hpp"

using namespace interlace;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct PolyCommandState {
    std::string input;
    std::string method = "statesum";
};

int emit_both(const std::string& a_name, const IntPoly1& a, const std::string& b_name,
              const IntPoly1& b) {
    std::cout << a_name << ": " << a.to_line() << "\n";
    std::cout << b_name << ": " << b.to_line() << "\n";
    bool match = a == b;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitMismatch;
}

int emit_both2(const std::string& a_name, const IntPoly2& a, const std::string& b_name,
               const IntPoly2& b) {
    std::cout << a_name << ":\n" << a.to_lines();
    std::cout << b_name << ":\n" << b.to_lines();
    bool match = a == b;
    std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact interlace, Martin, Tutte-Martin and delta-matroid polynomials"};
    app.require_subcommand(1);

    PolyCommandState q_state, q2_state, bigq_state, qm_state;
    std::string martin_input, euler_input, tutte_input, tm_input, delta_input, delta_sub;
    std::string euler_method = "backtracking";
    bool tm_global = false;
    std::string check_suite = "all";
    uint64_t seed = 1;
    std::size_t max_n = 0, trials = 0;

    auto add_poly_cmd = [&](const char* name, const char* help, PolyCommandState& state) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("--input", state.input, "input file")->required();
        cmd->add_option("--method", state.method, "statesum | recursive | both")
            ->check(CLI::IsMember({"statesum", "recursive", "both"}));
        return cmd;
    };

    CLI::App* cmd_q = add_poly_cmd("q", "one-variable interlace polynomial of a graph", q_state);
    CLI::App* cmd_q2 =
        add_poly_cmd("q2", "two-variable interlace polynomial of a graph", q2_state);
    CLI::App* cmd_bigq = add_poly_cmd("Q", "independence-style Q polynomial of a graph", bigq_state);
    CLI::App* cmd_qm =
        add_poly_cmd("qm", "interlace polynomial of the adjacency matrix", qm_state);

    CLI::App* cmd_martin =
        app.add_subcommand("martin", "martin polynomial of a 4-regular or two-in two-out host");
    cmd_martin->add_option("--input", martin_input, "input file (graph4 or digraph4)")->required();

    CLI::App* cmd_euler = app.add_subcommand("euler-count", "number of Eulerian circuits");
    cmd_euler->add_option("--input", euler_input, "input file (digraph4)")->required();
    cmd_euler->add_option("--method", euler_method, "backtracking | both")
        ->check(CLI::IsMember({"backtracking", "both"}));

    CLI::App* cmd_tutte = app.add_subcommand(
        "tutte-diag", "tutte polynomial of a plane graph and its medial/interlace forms");
    cmd_tutte->add_option("--input", tutte_input, "input file (plane)")->required();

    CLI::App* cmd_tm =
        app.add_subcommand("tm", "restricted Tutte-Martin polynomial of a graphic presentation");
    cmd_tm->add_option("--input", tm_input, "input file (graph)")->required();
    cmd_tm->add_flag("--global", tm_global, "global polynomial over all complete vectors");

    CLI::App* cmd_delta = app.add_subcommand("delta", "set-system polynomials");
    cmd_delta->add_option("sub", delta_sub, "q | Q | qbar | tutte")
        ->required()
        ->check(CLI::IsMember({"q", "Q", "qbar", "tutte"}));
    cmd_delta->add_option("--input", delta_input, "input file (setsystem)")->required();

    CLI::App* cmd_check = app.add_subcommand("check", "run a cross-validation suite");
    cmd_check->add_option("suite", check_suite, "interlace | euler | plane | isotropic | delta | all")
        ->check(CLI::IsMember({"interlace", "euler", "plane", "isotropic", "delta", "all"}));
    cmd_check->add_option("--seed", seed, "deterministic seed for the random corpora");
    cmd_check->add_option("--max-n", max_n, "cap on random corpus order");
    cmd_check->add_option("--trials", trials, "override per-identity trial counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_q->parsed()) {
            Graph g = parse_graph(read_file(q_state.input));
            if (q_state.method == "statesum") {
                std::cout << q_nullity_statesum(g).to_line() << "\n";
            } else if (q_state.method == "recursive") {
                std::cout << (g.is_simple() ? q_nullity_recursive(g) : q_nullity_looped(g)).to_line()
                          << "\n";
            } else {
                return emit_both("statesum", q_nullity_statesum(g), "recursive",
                                 g.is_simple() ? q_nullity_recursive(g) : q_nullity_looped(g));
            }
        } else if (cmd_q2->parsed()) {
            Graph g = parse_graph(read_file(q2_state.input));
            if (q2_state.method == "statesum") {
                std::cout << q_twovar_statesum(g).to_lines();
            } else if (q2_state.method == "recursive") {
                std::cout << q_twovar_recursive(g).to_lines();
            } else {
                return emit_both2("statesum", q_twovar_statesum(g), "recursive",
                                  q_twovar_recursive(g));
            }
        } else if (cmd_bigq->parsed()) {
            Graph g = parse_graph(read_file(bigq_state.input));
            if (bigq_state.method == "statesum") {
                std::cout << Q_statesum(g).to_line() << "\n";
            } else if (bigq_state.method == "recursive") {
                std::cout << Q_recursive(g).to_line() << "\n";
            } else {
                return emit_both("statesum", Q_statesum(g), "recursive", Q_recursive(g));
            }
        } else if (cmd_qm->parsed()) {
            Gf2Matrix a = parse_graph(read_file(qm_state.input)).adjacency_matrix();
            if (qm_state.method == "statesum") {
                std::cout << q_matrix_statesum(a).to_line() << "\n";
            } else if (qm_state.method == "recursive") {
                std::cout << q_matrix_recursive(a).to_line() << "\n";
            } else {
                return emit_both("statesum", q_matrix_statesum(a), "recursive",
                                 q_matrix_recursive(a));
            }
        } else if (cmd_martin->parsed()) {
            std::string text = read_file(martin_input);
            InputKind kind = sniff_kind(text);
            if (kind == InputKind::Digraph4) {
                std::cout << martin_directed(parse_digraph4(text)).to_line() << "\n";
            } else if (kind == InputKind::Graph4) {
                std::cout << martin_undirected(parse_graph4(text)).to_line() << "\n";
            } else {
                std::cerr << "martin expects a digraph4 or graph4 input\n";
                return kExitUsage;
            }
        } else if (cmd_euler->parsed()) {
            TwoInTwoOutDigraph d = parse_digraph4(read_file(euler_input));
            uint64_t count = count_euler_circuits_backtracking(d);
            if (euler_method == "backtracking") {
                std::cout << count << "\n";
            } else {
                auto systems = euler_systems_directed(d);
                Graph h = interlace_graph(d.host(), trace_directed(d, systems.front()));
                BigInt via_poly = q_nullity_statesum(h).evaluate(1);
                std::cout << "backtracking: " << count << "\n";
                std::cout << "interlace evaluation: " << via_poly.get_str() << "\n";
                bool match = via_poly == BigInt(static_cast<unsigned long>(count));
                std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
                return match ? kExitOk : kExitMismatch;
            }
        } else if (cmd_tutte->parsed()) {
            PlaneGraph pg = parse_plane(read_file(tutte_input));
            IntPoly2 t = tutte(pg.to_multigraph());
            IntPoly1 diag = t.diagonal();
            std::cout << "tutte:\n" << t.to_lines();
            std::cout << "diagonal: " << diag.to_line() << "\n";
            TwoInTwoOutDigraph med = pg.oriented_medial();
            IntPoly1 m = martin_directed(med);
            std::cout << "medial martin: " << m.to_line() << "\n";
            auto systems = euler_systems_directed(med);
            Graph h = interlace_graph(med.host(), trace_directed(med, systems.front()));
            IntPoly1 q = q_nullity_statesum(h);
            std::cout << "circuit interlace: " << q.to_line() << "\n";
            bool match = diag == m && diag == q;
            std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
            return match ? kExitOk : kExitMismatch;
        } else if (cmd_tm->parsed()) {
            Graph g = parse_graph(read_file(tm_input));
            if (!g.is_simple()) {
                std::cerr << "graphic presentations need a simple graph\n";
                return kExitUsage;
            }
            klein::KVec a = presentation_all(g.order(), klein::kX);
            klein::KVec b = presentation_all(g.order(), klein::kY);
            IsotropicSystem s = from_graphic_presentation(g, a, b);
            std::cout << (tm_global ? global_tm(s) : restricted_tm(s, a ^ b)).to_line() << "\n";
        } else if (cmd_delta->parsed()) {
            SetSystem s = parse_setsystem(read_file(delta_input));
            if (delta_sub == "q") {
                std::cout << q_delta(s).to_line() << "\n";
            } else if (delta_sub == "Q") {
                std::cout << q_delta_global(s).to_line() << "\n";
            } else if (delta_sub == "qbar") {
                std::cout << q_bar(s).to_lines();
            } else {
                std::cout << tutte_matroid(s).to_lines();
            }
        } else if (cmd_check->parsed()) {
            CheckConfig cfg;
            cfg.seed = seed;
            cfg.max_n = max_n;
            cfg.trials = trials;
            auto results = run_checks(check_suite, cfg);
            render_report(std::cout, results);
            for (const SuiteResult& suite : results)
                if (!suite.ok()) return kExitMismatch;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotAMatroidError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
