#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "liri/bipartite.hpp"
#include "liri/degenerate.hpp"
#include "liri/exact.hpp"
#include "liri/factor.hpp"
#include "liri/graph.hpp"
#include "liri/irregularity.hpp"
#include "liri/parity.hpp"
#include "liri/random.hpp"
#include "liri/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitExceptional = 2;
constexpr int kExitSolverFailed = 3;
constexpr int kExitUsage = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw liri::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* reason_text(liri::ExceptionalReason r) {
    switch (r) {
        case liri::ExceptionalReason::OddPath:
            return "odd path";
        case liri::ExceptionalReason::OddCycle:
            return "odd cycle";
        case liri::ExceptionalReason::FamilyT:
            return "triangle tree";
        default:
            return "none";
    }
}

struct DecomposeArgs {
    std::string graph_path;
    std::string method = "auto";
    int d = -1;
    int threshold = 2;
    bool force = false;
    long long budget = 1'000'000;
    int restarts = 20;
    unsigned seed = 1;
    std::string report_path;
};

liri::HighDegreeDecomposer exact_plugin(int threshold) {
    return {threshold, [](const liri::Graph& h) {
                auto r = liri::chi_irr_exact(h, 3, /*size_guard=*/1000);
                if (!r.found() || !r.witness)
                    throw liri::internal_error("high-degree plugin: exact search failed");
                return *r.witness;
            }};
}

int run_decompose(const DecomposeArgs& a) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    liri::Graph g = liri::Graph::parse_edge_list(read_file(a.graph_path));

    std::string method = a.method;
    if (method == "auto") method = liri::is_bipartite(g) ? "bipartite" : "general";

    if ((method == "bipartite" || method == "general") && liri::is_connected(g) &&
        liri::is_exceptional(g)) {
        std::cerr << "exceptional: " << reason_text(liri::exceptional_reason(g)) << "\n";
        return kExitExceptional;
    }

    std::optional<liri::Decomposition> dec;
    long long bound = -1;
    if (method == "bipartite") {
        dec = liri::decompose_bipartite(g);
        if (!dec) {
            std::cerr << "exceptional: odd path\n";
            return kExitExceptional;
        }
        bound = g.odd_size() ? 10 : 9;
    } else if (method == "degenerate") {
        int d = (a.d > 0) ? a.d : liri::degeneracy_order(g).degeneracy;
        dec = liri::chi_bound_degenerate(g, d);
        bound = 9LL * liri::degenerate_part_bound(d);
    } else if (method == "general") {
        dec = liri::decompose_general(g, exact_plugin(a.threshold));
        bound = g.odd_size() ? liri::general_chi_bound(a.threshold)
                             : liri::general_chi_bound_even(a.threshold);
    } else if (method == "factor") {
        liri::FactorOptions opts{a.budget, a.restarts, a.seed};
        dec = liri::decompose_16ec_bipartite(g, a.force, opts);
        if (!dec) {
            std::cerr << "solver failed: factor search exhausted its budget\n";
            return kExitSolverFailed;
        }
        bound = 2;
    } else {
        std::cerr << "unknown method: " << method << "\n";
        return kExitUsage;
    }

    liri::Certificate cert = liri::verify(*dec);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();

    if (!a.report_path.empty()) {
        nlohmann::json rep = {{"method", method},
                              {"classes", cert.class_count},
                              {"bound", bound},
                              {"valid", cert.valid},
                              {"timings", {{"total_ms", ms}}},
                              {"seed", a.seed}};
        std::ofstream out(a.report_path);
        out << rep.dump(2) << "\n";
    }
    if (!cert.valid) {
        std::cerr << "internal verification failed\n";
        return kExitInvalid;
    }
    std::cout << dec->serialize();
    return kExitOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"locally irregular edge decompositions"};
    app.require_subcommand(1);

    DecomposeArgs da;
    auto* dcmd = app.add_subcommand("decompose", "decompose a graph; prints 'u v class' lines");
    dcmd->add_option("graph", da.graph_path, "edge-list file ('-' for stdin)")->required();
    dcmd->add_option("--method", da.method,
                     "auto | bipartite | degenerate | factor | general");
    dcmd->add_option("--d", da.d, "degeneracy bound for --method degenerate");
    dcmd->add_option("--threshold", da.threshold, "degree split threshold for --method general");
    dcmd->add_flag("--force", da.force, "skip the connectivity gate for --method factor");
    dcmd->add_option("--budget", da.budget, "factor search toggle budget");
    dcmd->add_option("--restarts", da.restarts, "factor search restarts");
    dcmd->add_option("--seed", da.seed, "random seed");
    dcmd->add_option("--report", da.report_path, "write a JSON report to this file");

    std::string vgraph, vcoloring;
    int max_classes = -1;
    auto* vcmd = app.add_subcommand("verify", "verify a coloring file against a graph");
    vcmd->add_option("graph", vgraph)->required();
    vcmd->add_option("coloring", vcoloring)->required();
    vcmd->add_option("--max-classes", max_classes);

    std::string cgraph;
    int climit = 10;
    auto* ccmd = app.add_subcommand("chi", "exact irregular chromatic index");
    ccmd->add_option("graph", cgraph)->required();
    bool cexact = false;
    ccmd->add_flag("--exact", cexact);
    ccmd->add_option("--limit", climit, "largest class count to try");

    std::string rgraph;
    auto* rcmd = app.add_subcommand("reduce-odd",
                                    "remove a locally irregular subgraph leaving even components");
    rcmd->add_option("graph", rgraph)->required();

    auto* gcmd = app.add_subcommand("generate", "emit graphs as edge lists");
    int all_n = -1;
    std::vector<int> rb, rd;
    unsigned gseed = 1;
    double gp = 0.5;
    gcmd->add_option("--all-connected", all_n, "every connected graph on N vertices");
    gcmd->add_option("--random-bipartite", rb, "sides nA nB")->expected(2);
    gcmd->add_option("--random-degenerate", rd, "degeneracy d and order m")->expected(2);
    gcmd->add_option("--p", gp, "edge probability");
    gcmd->add_option("--seed", gseed);

    std::string sgraph;
    auto* scmd = app.add_subcommand("stats", "order, size, parity, structure summary");
    scmd->add_option("graph", sgraph)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (dcmd->parsed()) return run_decompose(da);

    if (vcmd->parsed()) {
        liri::Graph g = liri::Graph::parse_edge_list(read_file(vgraph));
        liri::Decomposition d = liri::Decomposition::parse(g, read_file(vcoloring));
        std::optional<int> mc;
        if (max_classes > 0) mc = max_classes;
        liri::Certificate cert = liri::verify(d, mc);
        if (cert.valid) {
            std::cout << "valid: " << cert.class_count << " classes\n";
            return kExitOk;
        }
        for (const auto& viol : cert.violations)
            std::cout << "violation: class " << viol.cls << " edge " << viol.edge.u << " "
                      << viol.edge.v << " degrees " << viol.deg_u << " " << viol.deg_v << "\n";
        if (mc && cert.class_count > *mc)
            std::cout << "violation: " << cert.class_count << " classes exceed bound " << *mc
                      << "\n";
        return kExitInvalid;
    }

    if (ccmd->parsed()) {
        liri::Graph g = liri::Graph::parse_edge_list(read_file(cgraph));
        if (liri::is_connected(g) && liri::is_exceptional(g)) {
            std::cerr << "exceptional: " << reason_text(liri::exceptional_reason(g)) << "\n";
            return kExitExceptional;
        }
        auto r = liri::chi_irr_exact(g, climit, /*size_guard=*/1000);
        if (r.found()) {
            std::cout << r.k << "\n";
            return kExitOk;
        }
        std::cerr << "solver failed: no decomposition within " << climit << " classes\n";
        return kExitSolverFailed;
    }

    if (rcmd->parsed()) {
        liri::Graph g = liri::Graph::parse_edge_list(read_file(rgraph));
        if (liri::is_exceptional(g)) {
            std::cerr << "exceptional: " << reason_text(liri::exceptional_reason(g)) << "\n";
            return kExitExceptional;
        }
        auto red = liri::reduce_odd_size(g);
        if (!red) {
            std::cerr << "solver failed: no reduction found\n";
            return kExitSolverFailed;
        }
        std::cout << "# removed\n" << red->removed.to_edge_list() << "# rest\n"
                  << red->rest.to_edge_list();
        return kExitOk;
    }

    if (gcmd->parsed()) {
        std::mt19937 rng(gseed);
        if (all_n > 0) {
            for (const liri::Graph& g : liri::enumerate_connected_graphs(all_n))
                std::cout << g.to_edge_list() << "---\n";
        } else if (rb.size() == 2) {
            std::cout << liri::random_connected_bipartite_even(rng, rb[0], rb[1], gp)
                             .to_edge_list();
        } else if (rd.size() == 2) {
            std::cout << liri::random_degenerate_even(rng, rd[1], rd[0], gp).to_edge_list();
        } else {
            std::cerr << "generate: choose one of --all-connected, --random-bipartite, "
                         "--random-degenerate\n";
            return kExitUsage;
        }
        return kExitOk;
    }

    if (scmd->parsed()) {
        liri::Graph g = liri::Graph::parse_edge_list(read_file(sgraph));
        std::cout << "order " << g.order() << "\n";
        std::cout << "size " << g.size() << "\n";
        std::cout << "parity " << (g.odd_size() ? "odd" : "even") << "\n";
        std::cout << "components " << liri::components(g).size() << "\n";
        std::cout << "bipartite " << (liri::is_bipartite(g) ? "yes" : "no") << "\n";
        std::cout << "degeneracy " << liri::degeneracy_order(g).degeneracy << "\n";
        if (liri::is_connected(g) && g.order() >= 2)
            std::cout << "edge-connectivity " << liri::edge_connectivity(g) << "\n";
        if (liri::is_connected(g))
            std::cout << "exceptional " << reason_text(liri::exceptional_reason(g)) << "\n";
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const liri::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const liri::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
