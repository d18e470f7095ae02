// srdlab: command-line front end for the signed Roman domination lab.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "srd/graph.hpp"
#include "srd/io.hpp"
#include "srd/nd_fpt.hpp"
#include "srd/reductions.hpp"
#include "srd/solvers.hpp"
#include "srd/srdf.hpp"

namespace fs = std::filesystem;
using srd::io::json;

namespace {

enum Exit { kOk = 0, kInvalidInput = 2, kUncertified = 3, kDisagreement = 4 };

using Clock = std::chrono::steady_clock;

struct Common {
    std::string algo = "bb";
    std::optional<long long> k;
    double timeout_s = 60.0;
    std::uint64_t seed = 1;
    std::string out;
};

std::string command_line;

std::chrono::milliseconds budget(const Common& c) {
    return std::chrono::milliseconds(static_cast<long long>(c.timeout_s * 1000.0));
}

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int emit(const Common& c, const std::string& digest, json result, Clock::time_point start, bool certified) {
    json report{{"command", command_line},
                {"input_digest", digest},
                {"result", std::move(result)},
                {"wall_ms", elapsed_ms(start)},
                {"certified", certified}};
    const std::string text = report.dump(2) + "\n";
    if (c.out.empty())
        std::cout << text;
    else
        srd::io::write_file(c.out, text);
    return certified ? kOk : kUncertified;
}

srd::Algo parse_algo(const std::string& name) {
    auto a = srd::algo_from_name(name);
    if (!a)
        throw srd::PreconditionError("unknown algorithm '" + name + "' (expected brute, bb or nd-ilp)");
    return *a;
}

srd::SolveResult run_solver(const srd::Graph& g, srd::Algo algo, std::chrono::milliseconds limit) {
    switch (algo) {
    case srd::Algo::Brute: return srd::solve_brute(g);
    case srd::Algo::BranchAndBound: {
        srd::BranchAndBoundOptions o;
        o.budget = limit;
        return srd::solve_bb(g, o);
    }
    case srd::Algo::NdIlp: {
        srd::NdOptions o;
        o.budget = limit;
        return srd::solve_nd(g, o);
    }
    }
    throw srd::PreconditionError("unknown algorithm");
}

// --- subcommands -----------------------------------------------------------

int cmd_solve(const Common& c, const std::string& path) {
    const auto start = Clock::now();
    const std::string text = srd::io::read_file(path);
    const srd::Graph g = srd::parse_graph(text);
    const auto r = run_solver(g, parse_algo(c.algo), budget(c));
    json result = srd::io::to_json(r);
    result["weight"] = srd::weight(r.witness);
    if (c.k) {
        if (r.optimum <= *c.k)
            result["decision"] = true;
        else if (r.certified)
            result["decision"] = false;
        else
            result["decision"] = nullptr;
    }
    return emit(c, srd::io::digest(text), std::move(result), start, r.certified);
}

int cmd_verify(const Common& c, const std::string& graph_path, const std::string& labels_path) {
    const auto start = Clock::now();
    const std::string text = srd::io::read_file(graph_path);
    const std::string labels_text = srd::io::read_file(labels_path);
    const srd::Graph g = srd::parse_graph(text);
    json lj;
    try {
        lj = json::parse(labels_text);
    } catch (const json::exception& e) {
        throw srd::ParseError(srd::ParseErrorKind::MalformedLine, 1, std::string("labeling: ") + e.what());
    }
    const srd::Labeling f = srd::io::labeling_from_json(lj);
    if (static_cast<srd::Vertex>(f.size()) != g.order())
        throw srd::PreconditionError("labeling has " + std::to_string(f.size()) + " entries, graph has " +
                                     std::to_string(g.order()) + " vertices");
    json result = srd::io::to_json(srd::is_valid_srdf(g, f));
    result["weight"] = srd::weight(f);
    return emit(c, srd::io::digest(text + labels_text), std::move(result), start, true);
}

int cmd_reduce(const Common& c, const std::string& problem, const std::string& path) {
    const auto start = Clock::now();
    const std::string text = srd::io::read_file(path);
    srd::ReductionOutput out;
    if (problem == "ds-split" || problem == "ds-gadget") {
        if (!c.k)
            throw srd::PreconditionError(problem + " needs --k");
        const srd::Graph g = srd::parse_graph(text);
        out = problem == "ds-split" ? srd::reduce_ds_cubic_to_split(g, *c.k) : srd::reduce_ds_gadget(g, *c.k);
    } else if (problem == "mrss-fvs") {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw srd::ParseError(srd::ParseErrorKind::MalformedLine, 1, std::string("mrss instance: ") + e.what());
        }
        out = srd::reduce_mrss_to_fvs(srd::io::mrss_from_json(j));
    } else if (problem == "rbds-vc") {
        out = srd::reduce_rbds_to_vc(srd::io::parse_rbds(text));
    } else {
        throw srd::PreconditionError("unknown reduction '" + problem +
                                     "' (expected ds-split, ds-gadget, mrss-fvs or rbds-vc)");
    }

    json result{{"reduction", problem},
                {"vertices", out.graph.order()},
                {"edges", out.graph.size()},
                {"k_prime", out.k_prime},
                {"witness_valid", srd::witness_validates(out)}};
    if (!c.out.empty()) {
        srd::io::write_file(c.out + ".graph", srd::write_graph(out.graph));
        srd::io::write_file(c.out + ".json", srd::io::sidecar(out).dump(2) + "\n");
        result["files"] = {c.out + ".graph", c.out + ".json"};
    }
    Common to_stdout = c;
    to_stdout.out.clear();
    return emit(to_stdout, srd::io::digest(text), std::move(result), start, true);
}

std::vector<int> parse_params(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw srd::PreconditionError("bad generator parameter '" + item + "'");
        }
    }
    return out;
}

int cmd_generate(const Common& c, const std::string& kind_name, const std::string& params) {
    auto kind = srd::graph_kind_from_name(kind_name);
    if (!kind)
        throw srd::PreconditionError("unknown graph kind '" + kind_name + "'");
    const auto p = parse_params(params);
    const std::string text = srd::write_graph(srd::generate(*kind, p, c.seed));
    if (c.out.empty())
        std::cout << text;
    else
        srd::io::write_file(c.out, text);
    return kOk;
}

int cmd_analyze(const Common& c, const std::string& path) {
    const auto start = Clock::now();
    const std::string text = srd::io::read_file(path);
    const srd::Graph g = srd::parse_graph(text);
    json result{{"n", g.order()}, {"m", g.size()}};
    const auto p = srd::nd_partition(g);
    result["nd"] = srd::io::to_json(p);
    if (g.order() > 0) {
        const auto bound = srd::lower_bound_degree(g);
        result["max_degree"] = g.max_degree();
        result["min_degree"] = g.min_degree();
        result["lower_bound"] = {{"num", bound.num}, {"den", bound.den}, {"ceil", bound.ceil()}};
        result["component_lower_bound"] = srd::component_lower_bound(g);
    }
    return emit(c, srd::io::digest(text), std::move(result), start, true);
}

int cmd_bench(const Common& c, const std::string& dir, const std::string& algos) {
    std::vector<srd::Algo> chosen;
    {
        std::stringstream ss(algos);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                chosen.push_back(parse_algo(item));
    }
    if (!fs::is_directory(dir))
        throw srd::PreconditionError("corpus '" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::ostringstream csv;
    csv << "file,n,m,t,algo,optimum,time_ms,certified\n";
    for (const auto& file : files) {
        srd::Graph g;
        try {
            g = srd::parse_graph(srd::io::read_file(file.string()));
        } catch (const srd::Error& e) {
            throw srd::PreconditionError(file.filename().string() + ": " + e.what());
        }
        const int t = srd::nd_partition(g).type_count();
        std::optional<long long> agreed;
        std::string agreed_by;
        for (srd::Algo a : chosen) {
            if (a == srd::Algo::Brute && g.order() > srd::BruteOptions{}.cap)
                continue;
            const auto start = Clock::now();
            const auto r = run_solver(g, a, budget(c));
            csv << file.filename().string() << ',' << g.order() << ',' << g.size() << ',' << t << ','
                << srd::algo_name(a) << ',' << r.optimum << ',' << elapsed_ms(start) << ','
                << (r.certified ? "true" : "false") << '\n';
            if (!r.certified)
                continue;
            if (agreed && *agreed != r.optimum) {
                std::cout << csv.str();
                std::cerr << "srdlab: disagreement on " << file.string() << ": " << agreed_by << " gives " << *agreed
                          << ", " << srd::algo_name(a) << " gives " << r.optimum << "\n";
                return kDisagreement;
            }
            agreed = r.optimum;
            agreed_by = std::string(srd::algo_name(a));
        }
    }
    if (c.out.empty())
        std::cout << csv.str();
    else
        srd::io::write_file(c.out, csv.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i)
        command_line += (i ? " " : "") + std::string(argv[i]);

    CLI::App app{"Signed Roman domination lab"};
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub, bool algo, bool k, bool timeout) {
        if (algo)
            sub->add_option("--algo", c.algo, "brute | bb | nd-ilp")->capture_default_str();
        if (k)
            sub->add_option("--k", c.k, "decision threshold / source budget");
        if (timeout)
            sub->add_option("--timeout-s", c.timeout_s, "solver budget in seconds")->capture_default_str();
        sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
        sub->add_option("--out", c.out, "output path");
    };

    std::string graph_path, labels_path, problem, instance, kind, params, corpus, algos = "brute,bb,nd-ilp";

    auto* solve = app.add_subcommand("solve", "minimum SRDF weight of a graph");
    solve->add_option("graph", graph_path)->required();
    add_common(solve, true, true, true);

    auto* verify = app.add_subcommand("verify", "check a labeling against a graph");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("labeling", labels_path)->required();
    add_common(verify, false, false, false);

    auto* reduce = app.add_subcommand("reduce", "build a reduced instance");
    reduce->add_option("problem", problem, "ds-split | ds-gadget | mrss-fvs | rbds-vc")->required();
    reduce->add_option("instance", instance)->required();
    add_common(reduce, false, true, false);

    auto* generate = app.add_subcommand("generate", "write a generated graph");
    generate->add_option("kind", kind)->required();
    generate->add_option("params", params, "comma-separated integers")->default_str("");
    add_common(generate, false, false, false);

    auto* analyze = app.add_subcommand("analyze", "degrees, type classes and lower bound");
    analyze->add_option("graph", graph_path)->required();
    add_common(analyze, false, false, false);

    auto* bench = app.add_subcommand("bench", "solve every graph in a directory");
    bench->add_option("corpus", corpus)->required();
    bench->add_option("--algos", algos, "comma-separated algorithms")->capture_default_str();
    add_common(bench, false, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }

    try {
        if (*solve)
            return cmd_solve(c, graph_path);
        if (*verify)
            return cmd_verify(c, graph_path, labels_path);
        if (*reduce)
            return cmd_reduce(c, problem, instance);
        if (*generate)
            return cmd_generate(c, kind, params);
        if (*analyze)
            return cmd_analyze(c, graph_path);
        if (*bench)
            return cmd_bench(c, corpus, algos);
    } catch (const srd::Error& e) {
        std::cerr << "srdlab: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}
