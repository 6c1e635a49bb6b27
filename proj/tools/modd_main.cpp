// modd: double domination bounds on maximal outerplanar graphs and 2-trees.
//
// Exit codes: 0 success / valid result, 1 invalid input, 2 internal
// invariant violation (an algorithm bug, not bad input), 3 node budget
// exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modd/exact.hpp"
#include "modd/generators.hpp"
#include "modd/graph_io.hpp"
#include "modd/peel_color.hpp"
#include "modd/rainbow.hpp"
#include "modd/recognition.hpp"
#include "modd/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitBudget = 3;

struct GenOptions {
    std::string family;
    int k = 0;
    int q = 0;
    int n = 0;
    int fan_n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string inner = "fan";
    std::string out = "-";
};

struct RunOptions {
    std::string input;
    std::string method = "dispatch";
    std::uint64_t budget = modd::kDefaultNodeBudget;
    bool brute = false;
};

struct BenchOptions {
    std::string family;
    std::string k_range, q_range, n_range;
    int seeds = 1;
    int exact_cutoff = 18;
    std::uint64_t budget = modd::kDefaultNodeBudget;
    std::string out = "-";
};

int to_int(const std::string& text) {
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return value;
    } catch (...) {
        throw std::invalid_argument("bad integer '" + text + "'");
    }
}

// Accepts "7", "3,5,7" and "4..12".
std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("missing " + flag + " values");
    std::vector<int> values;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        int lo = to_int(text.substr(0, dots));
        int hi = to_int(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("bad range '" + text + "'");
        for (int v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        values.push_back(to_int(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return values;
}

modd::GenSpec spec_from_options(const GenOptions& opt) {
    modd::GenSpec spec;
    if (opt.seed_given) spec.seed = opt.seed;
    if (opt.inner == "fan") spec.inner = modd::InnerTriangulation::Fan;
    else if (opt.inner == "random") spec.inner = modd::InnerTriangulation::RandomBinary;
    else throw std::invalid_argument("unknown inner triangulation '" + opt.inner + "'");

    if (opt.fan_n > 0) {
        spec.family = modd::Family::Fan;
        spec.param = opt.fan_n;
        return spec;
    }
    if (opt.family == "u") {
        spec.family = modd::Family::FamilyU;
        spec.param = opt.k;
    } else if (opt.family == "a") {
        spec.family = modd::Family::FamilyA;
        spec.param = opt.q;
    } else if (opt.family == "fan") {
        spec.family = modd::Family::Fan;
        spec.param = opt.n;
    } else if (opt.family == "random") {
        spec.family = modd::Family::RandomMop;
        spec.param = opt.n;
    } else {
        throw std::invalid_argument("unknown family '" + opt.family + "' (use u, a, fan, random)");
    }
    if (spec.param <= 0)
        throw std::invalid_argument("missing or non-positive size parameter for family '" +
                                    opt.family + "'");
    return spec;
}

void write_graph_to(const std::string& out, const modd::Graph& g) {
    if (out == "-") modd::write_graph(std::cout, g);
    else modd::write_graph_file(out, g);
}

int cmd_generate(const GenOptions& opt) {
    modd::Graph g = modd::generate(spec_from_options(opt));
    write_graph_to(opt.out, g);

    auto emb = modd::recognize_mop(g);
    if (!emb) throw modd::InvariantViolation("generated graph is not a MOP: " + emb.reason());
    std::cerr << "n=" << g.vertex_count() << " m=" << g.edge_count()
              << " t=" << modd::degree_two_vertices(g).size()
              << " striped=" << (modd::is_striped(*emb, g) ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_check(const std::string& input) {
    modd::Graph g = modd::read_graph_file(input);
    auto emb = modd::recognize_mop(g);
    if (emb) {
        auto internal = modd::internal_triangles(*emb, g);
        std::cout << "MOP, " << (internal.empty() ? "striped" : "not striped")
                  << ", t=" << modd::degree_two_vertices(g).size()
                  << ", internal_triangles=" << internal.size() << '\n';
        return kExitOk;
    }
    auto peel = modd::recognize_two_tree(g);
    if (peel) {
        std::cout << "not MOP: " << emb.reason() << "; 2-tree, t="
                  << modd::degree_two_vertices(g).size() << '\n';
    } else {
        std::cout << "not MOP: " << emb.reason() << "; not 2-tree: " << peel.reason() << '\n';
    }
    return kExitInvalidInput;
}

int cmd_bound(const RunOptions& opt) {
    modd::Graph g = modd::read_graph_file(opt.input);
    modd::DominationResult result;
    if (opt.method == "peel") {
        result = modd::peel_double_domination(g);
    } else if (opt.method == "rainbow" || opt.method == "degree" || opt.method == "dispatch") {
        auto emb = modd::recognize_mop(g);
        if (!emb) throw std::invalid_argument("not a MOP: " + emb.reason());
        if (opt.method == "rainbow") result = modd::rainbow_double_domination(g, *emb);
        else if (opt.method == "degree") result = modd::degree_set_double_domination(g);
        else result = modd::dispatch_bound(g);
    } else {
        throw std::invalid_argument("unknown method '" + opt.method +
                                    "' (use peel, rainbow, degree, dispatch)");
    }

    std::cout << "method: " << modd::method_name(result.method) << "\nset:";
    for (int v : result.set) std::cout << ' ' << v;
    std::cout << "\nsize: " << result.set.size()
              << "\nbound: " << *result.claimed_bound << '\n';
    bool valid = modd::is_double_dominating(g, result.set);
    std::cout << "valid: " << (valid ? "yes" : "no") << '\n';
    return valid ? kExitOk : kExitInvariant;
}

int cmd_exact(const RunOptions& opt) {
    modd::Graph g = modd::read_graph_file(opt.input);
    modd::SolverReport report = opt.brute ? modd::brute_force_gamma_x2(g)
                                          : modd::exact_gamma_x2(g, opt.budget);
    if (!report.optimal) {
        std::cout << "best: " << report.optimum << " (NON-OPTIMAL, budget exceeded)\nnodes: "
                  << report.nodes_explored << '\n';
        return kExitBudget;
    }
    std::cout << "optimum: " << report.optimum << "\nwitness:";
    for (int v : report.witness) std::cout << ' ' << v;
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.6f", report.elapsed.count());
    std::cout << "\nnodes: " << report.nodes_explored << "\ntime: " << elapsed << " s\n";
    return kExitOk;
}

int cmd_bench(const BenchOptions& opt) {
    std::vector<std::pair<std::string, modd::Graph>> instances;
    auto add = [&](std::string id, modd::Graph g) {
        instances.emplace_back(std::move(id), std::move(g));
    };

    if (opt.family == "a") {
        for (int q : parse_int_list("--q", opt.q_range))
            add("a_q" + std::to_string(q), modd::generate_family_a(q));
    } else if (opt.family == "u") {
        for (int k : parse_int_list("--k", opt.k_range))
            add("u_k" + std::to_string(k), modd::generate_family_u(k));
    } else if (opt.family == "fan") {
        for (int n : parse_int_list("--n", opt.n_range))
            add("fan_n" + std::to_string(n), modd::generate_fan(n));
    } else if (opt.family == "random") {
        for (int n : parse_int_list("--n", opt.n_range))
            for (int s = 0; s < opt.seeds; ++s)
                add("rand_n" + std::to_string(n) + "_s" + std::to_string(s),
                    modd::generate_random_mop(n, static_cast<std::uint64_t>(s)));
    } else {
        throw std::invalid_argument("unknown family '" + opt.family + "' (use u, a, fan, random)");
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (opt.out != "-") {
        file.open(opt.out);
        if (!file) throw std::invalid_argument("cannot open " + opt.out + " for writing");
        out = &file;
    }
    *out << modd::kReportCsvHeader << '\n';
    for (const auto& [id, g] : instances)
        *out << modd::to_csv(modd::evaluate_instance(id, g, opt.exact_cutoff, opt.budget)) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"double domination bounds on maximal outerplanar graphs and 2-trees"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph from one of the built-in families");
    gen_cmd->add_option("--family", gen.family, "family: u, a, fan, random");
    gen_cmd->add_option("--k", gen.k, "family u: number of hung vertices (k >= 2)");
    gen_cmd->add_option("--q", gen.q, "family a: rail length (odd q >= 3)");
    gen_cmd->add_option("--n", gen.n, "fan/random: vertex count (n >= 3)");
    gen_cmd->add_option("--fan", gen.fan_n, "shorthand for --family fan --n N");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed")->each([&gen](const std::string&) {
        gen.seed_given = true;
    });
    gen_cmd->add_option("--inner", gen.inner, "family u polygon triangulation: fan or random");
    gen_cmd->add_option("--out", gen.out, "output path, - for stdout");

    RunOptions check;
    auto* check_cmd = app.add_subcommand("check", "recognize a graph file (exit 0 iff MOP)");
    check_cmd->add_option("input", check.input, "graph file")->required();

    RunOptions bound;
    auto* bound_cmd = app.add_subcommand("bound", "compute a bounded double dominating set");
    bound_cmd->add_option("input", bound.input, "graph file")->required();
    bound_cmd->add_option("--method", bound.method, "peel, rainbow, degree or dispatch");

    RunOptions exact;
    auto* exact_cmd = app.add_subcommand("exact", "exact double domination number");
    exact_cmd->add_option("input", exact.input, "graph file")->required();
    exact_cmd->add_option("--budget", exact.budget, "branch-and-bound node budget");
    exact_cmd->add_flag("--brute", exact.brute, "force the subset-enumeration oracle");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "sweep a family and emit a CSV report");
    bench_cmd->add_option("--family", bench.family, "family: u, a, fan, random")->required();
    bench_cmd->add_option("--k", bench.k_range, "k values: N, A,B,C or A..B");
    bench_cmd->add_option("--q", bench.q_range, "q values: N, A,B,C or A..B");
    bench_cmd->add_option("--n", bench.n_range, "n values: N, A,B,C or A..B");
    bench_cmd->add_option("--seeds", bench.seeds, "random family: seeds 0..S-1 per size");
    bench_cmd->add_option("--exact-cutoff", bench.exact_cutoff,
                          "solve exactly only when n <= cutoff (default 18)");
    bench_cmd->add_option("--budget", bench.budget, "branch-and-bound node budget");
    bench_cmd->add_option("--out", bench.out, "CSV path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (gen_cmd->parsed()) return cmd_generate(gen);
        if (check_cmd->parsed()) return cmd_check(check.input);
        if (bound_cmd->parsed()) return cmd_bound(bound);
        if (exact_cmd->parsed()) return cmd_exact(exact);
        if (bench_cmd->parsed()) return cmd_bench(bench);
    } catch (const modd::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}
