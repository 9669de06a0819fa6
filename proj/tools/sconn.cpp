// Command line front end: solve instances, generate gadget and random
// instances, run the verification suites, export graphs and play the game
// interactively against the equilibrium opponent.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sconn/analysis.hpp"
#include "sconn/cactus.hpp"
#include "sconn/gadgets.hpp"
#include "sconn/game.hpp"
#include "sconn/solver.hpp"

using json = nlohmann::ordered_json;
using namespace sconn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBudget = 3;
constexpr int kExitAborted = 4;

Graph load_graph(const std::string& path) {
    if (path == "-") return Graph::parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return Graph::parse_instance(in);
}

RuleSet pick_rules(const Graph& g, const std::string& flag) {
    if (flag == "r2") return RuleSet{false};
    if (flag == "r3") return RuleSet{true};
    return g.rules();
}

Engine parse_engine(const std::string& name) {
    if (name == "auto") return Engine::kAuto;
    if (name == "exact") return Engine::kExact;
    if (name == "cactus") return Engine::kCactus;
    if (name == "tree") return Engine::kTree;
    throw ParseError("unknown engine '" + name + "'");
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += " ";
        out += tokens[i];
    }
    return out;
}

void print_equilibrium(const Graph& g, const Equilibrium& eq) {
    std::cout << "A: " << join_tokens(eq.path_a_tokens(g)) << " ("
              << eq.cost_a.decimal_or_fraction() << ")\n";
    std::cout << "B: " << join_tokens(eq.path_b_tokens(g)) << " ("
              << eq.cost_b.decimal_or_fraction() << ")\n";
    std::cout << "meet " << g.token(eq.meeting) << "\n";
}

json equilibrium_json(const Graph& g, const Equilibrium& eq) {
    json j;
    j["cost_a"] = eq.cost_a.str();
    j["cost_b"] = eq.cost_b.str();
    j["path_a"] = eq.path_a_tokens(g);
    j["path_b"] = eq.path_b_tokens(g);
    j["meeting"] = g.token(eq.meeting);
    j["nodes_expanded"] = eq.nodes_expanded;
    return j;
}

void write_instance(const GeneratedInstance& inst, const std::string& out_path) {
    std::string text = inst.graph.serialize(inst.header);
    if (out_path == "-" || out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot write '" + out_path + "'");
        out << text;
    }
    for (const auto& line : inst.header) std::cerr << line << "\n";
}

std::vector<std::int64_t> parse_items(const std::string& csv) {
    std::vector<std::int64_t> items;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        items.push_back(std::stoll(part));
    }
    return items;
}

VertexCoverInstance parse_vc_graph(int n, const std::string& csv) {
    VertexCoverInstance h;
    h.num_vertices = n;
    std::stringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dash = part.find('-');
        if (dash == std::string::npos) throw ParseError("edge list expects i-j pairs");
        h.edges.push_back({std::stoi(part.substr(0, dash)), std::stoi(part.substr(dash + 1))});
    }
    return h;
}

// ---------------------------------------------------------------- verify --

struct VerifyReport {
    int checks = 0;
    int failures = 0;

    void expect(bool ok, const std::string& what, const std::string& detail = "") {
        ++checks;
        if (ok) {
            std::cout << "pass: " << what << "\n";
        } else {
            ++failures;
            std::cout << "FAIL: " << what << "\n";
            if (!detail.empty()) std::cout << detail << "\n";
        }
    }
};

std::string divergence_detail(const Graph& g, const Equilibrium& got, const Equilibrium& want) {
    std::ostringstream os;
    os << "dp/exact divergence; reproducer instance:\n" << g.serialize();
    os << "dp:    A=" << got.cost_a.str() << " B=" << got.cost_b.str() << " meet "
       << g.token(got.meeting) << "\n";
    os << "exact: A=" << want.cost_a.str() << " B=" << want.cost_b.str() << " meet "
       << g.token(want.meeting) << "\n";
    return os.str();
}

int verify_examples(VerifyReport& rep) {
    Graph ex1 = gen_example(1);
    auto eq1 = solve_exact(ex1, RuleSet{});
    rep.expect(eq1.cost_a == Cost(4) && eq1.cost_b == Cost(5) &&
                   ex1.token(eq1.meeting) == "e" &&
                   join_tokens(eq1.path_a_tokens(ex1)) == "s d b e" &&
                   join_tokens(eq1.path_b_tokens(ex1)) == "t c e",
               "example 1 spe-conn (4,5) via s d b e / t c e");

    Graph ex2 = gen_example(2, Cost(10));
    auto eq2 = solve_exact(ex2, RuleSet{});
    auto poa2 = price_of_anarchy(ex2, RuleSet{});
    rep.expect(eq2.cost_a == Cost(1) && eq2.cost_b == Cost(10) && poa2 == Cost(11, 3),
               "example 2 (M=10) spe-conn (1,M), PoA 11/3");

    Graph ex3 = gen_example(3, Cost(5));
    auto eq3 = solve_exact(ex3, RuleSet{});
    rep.expect(eq3.cost_a == Cost(12) && eq3.cost_b == Cost(4),
               "example 3 (M=5) spe-conn (2M+2, 4)");
    return rep.failures == 0 ? kExitOk : kExitUsage;
}

int verify_dp_vs_exact(VerifyReport& rep, int trials, int nmax, std::uint64_t seed) {
    RuleSet r3{true};
    for (int i = 0; i < trials; ++i) {
        int n = 3 + (int)((seed + (std::uint64_t)i * 7919) % (std::uint64_t)(nmax - 2));
        Graph g = gen_random_cactus(n, seed + (std::uint64_t)i);
        auto exact = solve_exact(g, r3);
        auto dp = solve_cactus_r3(g);
        bool same = dp.cost_a == exact.cost_a && dp.cost_b == exact.cost_b &&
                    dp.meeting == exact.meeting;
        if (!same) {
            rep.expect(false, "dp-vs-exact trial " + std::to_string(i),
                       divergence_detail(g, dp, exact));
            return kExitUsage;
        }
    }
    rep.expect(true, "dp-vs-exact: " + std::to_string(trials) + " random cacti agree");
    return kExitOk;
}

int verify_tree_vs_exact(VerifyReport& rep, int trials, int nmax, std::uint64_t seed) {
    RuleSet r3{true};
    for (int i = 0; i < trials; ++i) {
        int n = 3 + (int)((seed + (std::uint64_t)i * 104729) % (std::uint64_t)(nmax - 2));
        Graph g = gen_random_tree(n, seed + (std::uint64_t)i);
        auto exact = solve_exact(g, r3);
        auto tree = solve_tree(g);
        bool same = tree.cost_a == exact.cost_a && tree.cost_b == exact.cost_b &&
                    tree.meeting == exact.meeting;
        if (!same) {
            rep.expect(false, "tree-vs-exact trial " + std::to_string(i),
                       divergence_detail(g, tree, exact));
            return kExitUsage;
        }
    }
    rep.expect(true, "tree-vs-exact: " + std::to_string(trials) + " random trees agree");
    return kExitOk;
}

int verify_gadgets(VerifyReport& rep) {
    // Structural checks first.
    auto t = gen_qsat_bipartite(
        QuantifiedFormula::parse("E x1 A x2 : (x1 | x2) & (x1 | !x2)"), false);
    rep.expect(is_bipartite(t.graph), "qsat gadget is bipartite");
    auto tv = gen_qsat_bipartite(
        QuantifiedFormula::parse("E x1 A x2 : (x1 | x2) & (x1 | !x2)"), true);
    rep.expect(is_bipartite(tv.graph), "qsat simple-path gadget is bipartite");

    VertexCoverInstance k3{3, {{1, 2}, {1, 3}, {2, 3}}};
    auto vc = gen_vertex_cover_dag(k3, 3);
    rep.expect(is_dag(vc.graph), "vertex-cover gadget is a DAG");
    std::int64_t n = 3, k = 3, m = 3;
    rep.expect(vc.graph.vertex_count() == 6 + (k + 1) + n + 17 * m &&
                   vc.graph.edge_count() == 5 + k + 2 * n + n * (n - 1) / 2 + 21 * m,
               "vertex-cover gadget size formulas");
    auto vcs = gen_vertex_cover_dag(k3, 3, {.bipartite_split = true});
    rep.expect(is_dag(vcs.graph) && is_bipartite(vcs.graph),
               "split vertex-cover gadget is a bipartite DAG");

    auto tp = gen_3partition_cactus({1, 1, 2, 1, 1, 2});
    rep.expect(is_cactus(tp.graph), "3-partition gadget is a cactus");
    int twos = 0, ones = 0, others = 0;
    for (const Edge& e : tp.graph.edges()) {
        if (e.cost == Cost(2)) ++twos;
        else if (e.cost == Cost(1)) ++ones;
        else if (!e.cost.is_zero()) ++others;
    }
    rep.expect(twos == 1 && ones == 2 && others == 0,
               "3-partition gadget cost multiset (one 2, two 1s, rest 0)");

    // Tiny-scale behavioral checks via the exact solver.
    auto qsat_true = QuantifiedFormula::parse("E x1 A x2 : (x1 | x2) & (x1 | !x2)");
    auto qsat_false = QuantifiedFormula::parse("E x1 A x2 : (x1 | x2) & (!x1 | x2)");
    rep.expect(evaluate_formula(qsat_true) && !evaluate_formula(qsat_false),
               "oracle labels for the tiny formulas");
    for (bool variant : {false, true}) {
        RuleSet rules{variant};
        auto gt = gen_qsat_bipartite(qsat_true, variant);
        auto gf = gen_qsat_bipartite(qsat_false, variant);
        auto eqt = solve_exact(gt.graph, rules);
        auto eqf = solve_exact(gf.graph, rules);
        rep.expect(eqt.cost_a < Cost(1),
                   std::string("qsat gadget, true formula: c(A) < 1") +
                       (variant ? " (simple-path)" : ""),
                   "c(A) = " + eqt.cost_a.str());
        rep.expect(eqf.cost_a > Cost(1),
                   std::string("qsat gadget, false formula: c(A) > 1") +
                       (variant ? " (simple-path)" : ""),
                   "c(A) = " + eqf.cost_a.str());
    }

    auto vq = solve_exact(vc.graph, RuleSet{});
    Cost eps(1, vc.graph.edge_count());
    rep.expect(vq.cost_a == eps * Cost(k + 6), "vertex-cover gadget, K3/k=3: c(A) = (k+6)eps",
               "c(A) = " + vq.cost_a.str());
    VertexCoverInstance disjoint{8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}};
    auto vcn = gen_vertex_cover_dag(disjoint, 3);
    auto vqn = solve_exact(vcn.graph, RuleSet{});
    rep.expect(vqn.cost_a > Cost(1), "vertex-cover gadget, 4 disjoint edges/k=3: c(A) > 1",
               "c(A) = " + vqn.cost_a.str());
    return rep.failures == 0 ? kExitOk : kExitUsage;
}

// ------------------------------------------------------------------ play --

struct MoveScript {
    std::vector<std::string> entries;
    std::size_t next = 0;
    bool interactive;
};

int parse_move_token(const std::string& token, const Graph& g,
                     const std::vector<int>& legal) {
    std::string text = token;
    for (const char* arrow : {"->", "→", ">"}) {
        auto pos = text.find(arrow);
        if (pos == std::string::npos) continue;
        std::string tail = text.substr(0, pos);
        std::string head = text.substr(pos + std::string(arrow).size());
        for (int eid : legal) {
            const Edge& e = g.edge(eid);
            if (g.token(e.tail) == tail && g.token(e.head) == head) return eid;
        }
        return -1;
    }
    try {
        std::size_t idx = (std::size_t)std::stoul(text);
        if (idx >= 1 && idx <= legal.size()) return legal[idx - 1];
    } catch (const std::exception&) {
    }
    return -1;
}

int cmd_play(const Graph& g, RuleSet rules, bool human_is_a, const std::string& moves_csv,
             std::uint64_t budget) {
    MoveScript script;
    script.interactive = moves_csv.empty();
    if (!script.interactive) {
        std::stringstream ss(moves_csv);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) script.entries.push_back(part);
        }
    }

    ExactSolver solver(g, rules, budget);
    GameState state = initial_state(g, rules);
    if (!feasible(state, g, rules)) {
        std::cout << "no feasible play\n";
        return kExitInfeasible;
    }

    while (!state.terminal()) {
        bool humans_turn = state.a_to_move == human_is_a;
        auto legal = legal_moves(state, g, rules);
        if (legal.empty()) {
            std::cout << "no feasible play\n";
            return kExitInfeasible;
        }
        if (!humans_turn) {
            int eid = solver.best_move(state);
            const Edge& e = g.edge(eid);
            std::cout << "engine (" << (state.a_to_move ? "A" : "B") << ") plays "
                      << g.token(e.tail) << " -> " << g.token(e.head) << " ["
                      << e.cost.decimal_or_fraction() << "]\n";
            state = apply_move(state, g, eid);
            continue;
        }

        std::cout << (state.a_to_move ? "A" : "B") << " at "
                  << g.token(state.a_to_move ? state.pos_a : state.pos_b) << ", opponent at "
                  << g.token(state.a_to_move ? state.pos_b : state.pos_a) << "\n";
        for (std::size_t i = 0; i < legal.size(); ++i) {
            const Edge& e = g.edge(legal[i]);
            GameState next = apply_move(state, g, legal[i]);
            StateValue v = solver.evaluate(next);
            std::cout << "  " << (i + 1) << ") " << g.token(e.tail) << " -> " << g.token(e.head)
                      << " cost " << e.cost.decimal_or_fraction();
            if (!v.infeasible)
                std::cout << "  [then A:" << v.cost_a.str() << " B:" << v.cost_b.str() << "]";
            std::cout << "\n";
        }

        int chosen = -1;
        while (chosen < 0) {
            std::string token;
            if (script.interactive) {
                std::cout << "move> " << std::flush;
                if (!(std::cin >> token)) {
                    std::cout << "\naborted\n";
                    return kExitAborted;
                }
            } else {
                if (script.next >= script.entries.size()) {
                    std::cout << "aborted: move script exhausted\n";
                    return kExitAborted;
                }
                token = script.entries[script.next++];
            }
            chosen = parse_move_token(token, g, legal);
            if (chosen < 0) {
                std::cout << "illegal move index\n";
                if (!script.interactive) return kExitAborted;
            }
        }
        const Edge& e = g.edge(chosen);
        std::cout << "you (" << (state.a_to_move ? "A" : "B") << ") play " << g.token(e.tail)
                  << " -> " << g.token(e.head) << " [" << e.cost.decimal_or_fraction() << "]\n";
        state = apply_move(state, g, chosen);
    }

    std::cout << format_transcript(state, g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shortest Connection Game toolkit"};
    app.require_subcommand(1);

    // ---- solve
    auto* solve = app.add_subcommand("solve", "compute the spe-conn of an instance");
    std::string solve_file, solve_rules = "file", solve_engine = "auto";
    std::vector<std::string> bounds;
    bool solve_json = false, dump_tables = false;
    std::uint64_t budget = kDefaultBudget;
    solve->add_option("file", solve_file, "instance file or -")->required();
    solve->add_option("--rules", solve_rules, "r2 or r3 (default: from the file)");
    solve->add_option("--engine", solve_engine, "auto|exact|cactus|tree");
    solve->add_option("--check-bounds", bounds, "decision variant: C_A C_B")->expected(2);
    solve->add_option("--budget", budget, "exact-search state budget");
    solve->add_flag("--json", solve_json, "machine-readable report");
    solve->add_flag("--dump-tables", dump_tables, "dump the cactus DP tables");

    // ---- generate
    auto* gen = app.add_subcommand("generate", "emit an instance file");
    std::string gen_kind, gen_out = "-";
    int gen_which = 1;
    std::string gen_m = "10";
    std::string gen_formula;
    bool gen_simple = false, gen_split = false, gen_text_costs = false;
    int gen_hn = 0, gen_k = 3, gen_n = 10;
    std::string gen_hedges, gen_items;
    std::uint64_t gen_seed = 1;
    gen->add_option("kind", gen_kind,
                    "example|qsat|qsat-simple|vertex-cover|vc-bipartite|three-partition|"
                    "random-cactus|random-tree|random-dag")
        ->required();
    gen->add_option("--out", gen_out, "output file or -");
    gen->add_option("--which", gen_which, "example number (1..3)");
    gen->add_option("--m", gen_m, "M parameter of examples 2 and 3");
    gen->add_option("--formula", gen_formula, "quantified formula, e.g. \"E x1 A x2 : (x1|!x2)\"");
    gen->add_flag("--simple", gen_simple, "simple-path variant of the qsat gadget");
    gen->add_option("--hn", gen_hn, "vertex-cover: number of vertices of H");
    gen->add_option("--hedges", gen_hedges, "vertex-cover: edges of H as i-j,i-j,...");
    gen->add_option("--k", gen_k, "vertex-cover budget k");
    gen->add_flag("--split", gen_split, "vertex-cover: bipartite edge splitting");
    gen->add_flag("--text-costs", gen_text_costs, "vertex-cover: cost 2 on (gamma,eta),(lambda,mu)");
    gen->add_option("--items", gen_items, "three-partition items c1,c2,...");
    gen->add_option("--n", gen_n, "random family size");
    gen->add_option("--seed", gen_seed, "random family seed");

    // ---- verify
    auto* verify = app.add_subcommand("verify", "run a cross-validation suite");
    std::string suite;
    int trials = 100, verify_n = 10;
    std::uint64_t verify_seed = 1;
    verify->add_option("suite", suite, "examples|dp-vs-exact|tree-vs-exact|gadgets")->required();
    verify->add_option("--trials", trials, "number of random instances");
    verify->add_option("--n", verify_n, "maximum instance size");
    verify->add_option("--seed", verify_seed, "base seed");

    // ---- export
    auto* exp = app.add_subcommand("export", "print the graph description");
    std::string exp_file;
    exp->add_option("file", exp_file, "instance file or -")->required();

    // ---- poa
    auto* poa = app.add_subcommand("poa", "price of anarchy of an instance");
    std::string poa_file, poa_rules = "file";
    std::uint64_t poa_budget = kDefaultBudget;
    poa->add_option("file", poa_file, "instance file or -")->required();
    poa->add_option("--rules", poa_rules, "r2 or r3");
    poa->add_option("--budget", poa_budget, "exact-search state budget");

    // ---- play
    auto* play = app.add_subcommand("play", "step a game against the equilibrium opponent");
    std::string play_file, play_as = "A", play_rules = "file", play_moves;
    std::uint64_t play_budget = kDefaultBudget;
    play->add_option("file", play_file, "instance file or -")->required();
    play->add_option("--as", play_as, "play as A or B");
    play->add_option("--rules", play_rules, "r2 or r3");
    play->add_option("--moves", play_moves, "scripted moves: tail>head,tail>head,...");
    play->add_option("--budget", play_budget, "exact-search state budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            Graph g = load_graph(solve_file);
            RuleSet rules = pick_rules(g, solve_rules);
            Engine engine = parse_engine(solve_engine);
            if (dump_tables) {
                CactusOptions copts;
                copts.want_tables = true;
                auto full = solve_cactus_r3_full(g, copts);
                for (const auto& line : full.table_dump) std::cout << line << "\n";
                print_equilibrium(g, full.equilibrium);
                return kExitOk;
            }
            auto outcome = solve_dispatch(g, rules, engine, budget);
            if (!bounds.empty()) {
                Cost ca = Cost::parse(bounds[0]);
                Cost cb = Cost::parse(bounds[1]);
                bool yes = outcome.equilibrium.cost_a <= ca && outcome.equilibrium.cost_b <= cb;
                std::cout << (yes ? "yes" : "no") << "\n";
                return kExitOk;
            }
            if (solve_json) {
                std::cout << equilibrium_json(g, outcome.equilibrium).dump(2) << "\n";
            } else {
                print_equilibrium(g, outcome.equilibrium);
            }
            return kExitOk;
        }

        if (gen->parsed()) {
            GeneratedInstance inst;
            if (gen_kind == "example") {
                inst.graph = gen_example(gen_which, Cost::parse(gen_m));
                inst.header = {"example " + std::to_string(gen_which) +
                               (gen_which >= 2 ? " M=" + Cost::parse(gen_m).str() : "")};
            } else if (gen_kind == "qsat" || gen_kind == "qsat-simple") {
                auto f = QuantifiedFormula::parse(gen_formula);
                inst = gen_qsat_bipartite(f, gen_simple || gen_kind == "qsat-simple");
            } else if (gen_kind == "vertex-cover" || gen_kind == "vc-bipartite") {
                VertexCoverOptions opts;
                opts.bipartite_split = gen_split || gen_kind == "vc-bipartite";
                opts.text_costs = gen_text_costs;
                inst = gen_vertex_cover_dag(parse_vc_graph(gen_hn, gen_hedges), gen_k, opts);
            } else if (gen_kind == "three-partition" || gen_kind == "3part") {
                inst = gen_3partition_cactus(parse_items(gen_items));
            } else if (gen_kind == "random-cactus") {
                inst.graph = gen_random_cactus(gen_n, gen_seed);
                inst.header = {"random-cactus n=" + std::to_string(gen_n) +
                               " seed=" + std::to_string(gen_seed)};
            } else if (gen_kind == "random-tree") {
                inst.graph = gen_random_tree(gen_n, gen_seed);
                inst.header = {"random-tree n=" + std::to_string(gen_n) +
                               " seed=" + std::to_string(gen_seed)};
            } else if (gen_kind == "random-dag") {
                inst.graph = gen_random_dag(gen_n, gen_seed);
                inst.header = {"random-dag n=" + std::to_string(gen_n) +
                               " seed=" + std::to_string(gen_seed)};
            } else {
                throw ParseError("unknown generator kind '" + gen_kind + "'");
            }
            write_instance(inst, gen_out);
            return kExitOk;
        }

        if (verify->parsed()) {
            VerifyReport rep;
            int rc;
            if (suite == "examples") rc = verify_examples(rep);
            else if (suite == "dp-vs-exact") rc = verify_dp_vs_exact(rep, trials, verify_n, verify_seed);
            else if (suite == "tree-vs-exact") rc = verify_tree_vs_exact(rep, trials, verify_n, verify_seed);
            else if (suite == "gadgets") rc = verify_gadgets(rep);
            else throw ParseError("unknown suite '" + suite + "'");
            std::cout << rep.checks - rep.failures << "/" << rep.checks << " checks passed\n";
            return rc;
        }

        if (exp->parsed()) {
            std::cout << load_graph(exp_file).export_dot();
            return kExitOk;
        }

        if (poa->parsed()) {
            Graph g = load_graph(poa_file);
            RuleSet rules = pick_rules(g, poa_rules);
            auto spe = solve_exact(g, rules, poa_budget);
            auto coop = cooperative_optimum(g, rules, poa_budget);
            Cost ratio = price_of_anarchy(spe, coop);
            std::cout << "spe " << spe.total().decimal_or_fraction() << "\n";
            std::cout << "cooperative " << coop.total().decimal_or_fraction() << "\n";
            std::cout << ratio.str() << "\n";
            return kExitOk;
        }

        if (play->parsed()) {
            Graph g = load_graph(play_file);
            RuleSet rules = pick_rules(g, play_rules);
            if (play_as != "A" && play_as != "B") throw ParseError("--as expects A or B");
            return cmd_play(g, rules, play_as == "A", play_moves, play_budget);
        }
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
