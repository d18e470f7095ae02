// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "srd/nd_fpt.hpp"
#include "srd/reductions.hpp"
#include "srd/solvers.hpp"
#include "srd/srdf.hpp"
#include "support.hpp"

using namespace srd;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr int kSmallGraphs = 200;
constexpr int kMediumGraphs = 50;
constexpr double kAgreementBudgetS = 600.0;
constexpr double kScalingBudgetS = 5.0;
constexpr auto kDecideBudget = std::chrono::minutes(5);
constexpr int kRandomMrss = 40;
constexpr int kRandomRbds = 40;
constexpr int kSoundnessMaxN = 8;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> flags;
    std::string first_failure;
    int checks = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
};

struct Solved {
    Graph g;
    SolveResult r;
};

std::vector<Solved> solved;

bool report(int id, const char* title, const Outcome& o, const std::string& extra = "") {
    std::printf("criterion %d %s: %s (%d checks%s%s)", id, title, o.pass ? "PASS" : "FAIL", o.checks,
                extra.empty() ? "" : ", ", extra.c_str());
    if (!o.pass)
        std::printf(" first failure: %s", o.first_failure.c_str());
    for (const auto& f : o.flags)
        std::printf(" [flagged: %s]", f.c_str());
    std::printf("\n");
    std::fflush(stdout);
    return o.pass;
}

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << "n=" << g.order() << " m=" << g.size();
    return s.str();
}

bool agreement() {
    Outcome o;
    const auto start = Clock::now();
    for (const Graph& g : srd::testing::corpus(kSmallGraphs, 1, 10, 20261016)) {
        const auto b = solve_brute(g);
        const auto bb = solve_bb(g);
        const auto nd = solve_nd(g);
        o.check(bb.certified && nd.certified, "uncertified on " + describe(g));
        o.check(b.optimum == bb.optimum && b.optimum == nd.optimum,
                "optima " + std::to_string(b.optimum) + "/" + std::to_string(bb.optimum) + "/" +
                    std::to_string(nd.optimum) + " on " + describe(g));
        solved.push_back({g, b});
        solved.push_back({g, bb});
        solved.push_back({g, nd});
    }
    for (const Graph& g : srd::testing::corpus(kMediumGraphs, 11, 16, 4242)) {
        const auto bb = solve_bb(g);
        const auto nd = solve_nd(g);
        o.check(bb.certified && nd.certified, "uncertified on " + describe(g));
        o.check(bb.optimum == nd.optimum, "bb " + std::to_string(bb.optimum) + " vs nd " +
                                              std::to_string(nd.optimum) + " on " + describe(g));
        solved.push_back({g, bb});
        solved.push_back({g, nd});
    }
    const double secs = seconds_since(start);
    o.check(secs <= kAgreementBudgetS, "took " + std::to_string(secs) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", secs);
    return report(1, "cross-solver agreement", o, buf);
}

bool bounds() {
    Outcome o;
    for (const auto& [g, r] : solved) {
        o.check(is_valid_srdf(g, r.witness).valid(), "invalid witness on " + describe(g));
        o.check(weight(r.witness) == r.optimum, "witness weight mismatch on " + describe(g));
        o.check(r.optimum <= g.order(), "optimum above n on " + describe(g));
        if (g.order() > 0)
            o.check(component_lower_bound(g) <= r.optimum, "below component bound on " + describe(g));
    }
    return report(2, "universal bounds", o, std::to_string(solved.size()) + " solved instances");
}

// Reverse direction via branch and bound. Returns nullopt when uncertified.
std::optional<bool> decide_bb(const Graph& g, long long k, const std::optional<Incumbent>& inc) {
    DecideOptions opt;
    opt.budget = kDecideBudget;
    opt.incumbent = inc;
    try {
        return decide(g, k, Algo::BranchAndBound, opt);
    } catch (const SolverTimeout&) {
        return std::nullopt;
    }
}

bool split_reduction() {
    Outcome o;
    const Graph k4 = srd::testing::make(GraphKind::Complete, {4});
    const long long n = 4;
    std::string detail;
    for (long long k = 1; k <= 4; ++k) {
        const auto out = reduce_ds_cubic_to_split(k4, k);
        const std::string at = "k=" + std::to_string(k);
        o.check(std::holds_alternative<SplitPartition>(out.witness) &&
                    is_split(out.graph, std::get<SplitPartition>(out.witness)),
                "not split at " + at);
        o.check(out.graph.order() == 5 * n + 3 * ((2 * n - k + 4 + 1) / 2), "vertex count at " + at);
        o.check(out.k_prime == k - 3 * n, "k' at " + at);

        std::optional<Incumbent> inc;
        int bad = 0, total = 0;
        for (const auto& S : all_dominating_sets(k4, k)) {
            const Labeling f = forward_label_split(out, S);
            const bool valid = is_valid_srdf(out.graph, f).valid();
            ++total;
            bad += !valid;
            o.check(valid, "forward labeling invalid at " + at + " |S|=" + std::to_string(S.size()));
            o.check(weight(f) == static_cast<long long>(S.size()) - 3 * n, "forward weight at " + at);
            if (valid && (!inc || weight(f) < inc->weight))
                inc = Incumbent{f, weight(f)};
        }
        detail += " " + at + ":" + std::to_string(total - bad) + "/" + std::to_string(total) + " forward valid";

        if (!inc)
            inc = Incumbent{uniform_labeling(out.graph.order(), Label::One), out.graph.order()};
        const auto yes = decide_bb(out.graph, out.k_prime, inc);
        if (!yes)
            o.flags.push_back("reverse direction uncertified at " + at);
        else
            o.check(*yes, "gamma(G') > k' at " + at + " although the source is a yes-instance");
    }
    return report(3, "split reduction on K_4", o, detail.substr(1));
}

bool gadget_reduction() {
    Outcome o;
    const std::vector<std::pair<std::string, Graph>> sources = {
        {"P_2", srd::testing::make(GraphKind::Path, {2})},
        {"P_3", srd::testing::make(GraphKind::Path, {3})},
        {"C_4", srd::testing::make(GraphKind::Cycle, {4})},
    };
    for (const auto& [name, g] : sources) {
        for (long long k = 1; k <= g.order(); ++k) {
            const auto out = reduce_ds_gadget(g, k);
            const std::string at = name + " k=" + std::to_string(k);
            o.check(is_bipartite(out.graph).has_value() && witness_validates(out), "not bipartite at " + at);
            const auto sets = all_dominating_sets(g, k);
            std::optional<Incumbent> inc;
            for (const auto& S : sets) {
                const Labeling f = forward_label_gadget(out, S);
                o.check(is_valid_srdf(out.graph, f).valid(), "forward labeling invalid at " + at);
                for (Vertex v = 0; v < g.order(); ++v) {
                    long long gadget = 0;
                    for (Vertex w = 0; w < out.graph.order(); ++w) {
                        const auto& r = out.roles[w];
                        if (r.tag != "V" && !r.index.empty() && r.index[0] == v)
                            gadget += value(f[w]);
                    }
                    o.check(gadget == -1, "gadget weight " + std::to_string(gadget) + " at " + at);
                }
                o.check(weight(f) == static_cast<long long>(S.size()), "total weight at " + at);
                if (!inc || weight(f) < inc->weight)
                    inc = Incumbent{f, weight(f)};
            }
            const bool source_yes = !sets.empty();
            if (!inc)
                inc = Incumbent{uniform_labeling(out.graph.order(), Label::One), out.graph.order()};
            const auto yes = decide_bb(out.graph, out.k_prime, inc);
            if (!yes)
                o.flags.push_back("reverse direction uncertified at " + at);
            else
                o.check(*yes == source_yes, "decision mismatch at " + at);
        }
    }
    return report(4, "gadget reduction on P_2, P_3, C_4", o);
}

std::vector<int> pad_to(std::vector<int> S, int m) {
    for (int i = 0; static_cast<int>(S.size()) < m; ++i)
        if (std::find(S.begin(), S.end(), i) == S.end())
            S.push_back(i);
    std::sort(S.begin(), S.end());
    return S;
}

bool mrss_reduction() {
    Outcome o;
    {
        const auto inst = srd::testing::figure_six();
        const auto out = reduce_mrss_to_fvs(inst);
        o.check(out.graph.order() == 114, "picture instance vertex count");
        o.check(out.k_prime == 10, "picture instance k'");
        o.check(std::holds_alternative<FeedbackVertexSet>(out.witness) &&
                    std::get<FeedbackVertexSet>(out.witness).vertices.size() == 4 && witness_validates(out),
                "feedback vertex set witness");
        const auto S = oracle_mrss(inst);
        o.check(S.has_value(), "picture instance has no solution");
        if (S) {
            const Labeling f = forward_label_mrss(out, *S);
            o.check(is_valid_srdf(out.graph, f).valid() && weight(f) == out.k_prime, "picture forward labeling");
        }
    }
    std::mt19937_64 rng(606);
    int yes = 0, no = 0;
    for (int trial = 0; trial < kRandomMrss; ++trial) {
        const auto inst = srd::testing::random_mrss(rng);
        const auto out = reduce_mrss_to_fvs(inst);
        o.check(witness_validates(out), "random instance witness");
        const auto S = oracle_mrss(inst);
        if (S) {
            ++yes;
            const Labeling f = forward_label_mrss(out, pad_to(*S, inst.m));
            o.check(is_valid_srdf(out.graph, f).valid() && weight(f) == out.k_prime,
                    "yes-instance forward labeling, trial " + std::to_string(trial));
        } else {
            ++no;
            const int n = static_cast<int>(inst.vectors.size());
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<int> T;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1)
                        T.push_back(i);
                if (static_cast<int>(T.size()) > inst.m)
                    continue;
                const Labeling f = forward_label_mrss_table(out, T);
                o.check(!(is_valid_srdf(out.graph, f).valid() && weight(f) <= out.k_prime),
                        "no-instance produced a labeling, trial " + std::to_string(trial));
            }
        }
    }
    return report(5, "subset sum reduction", o, std::to_string(yes) + " yes / " + std::to_string(no) + " no");
}

bool rbds_reduction() {
    Outcome o;
    {
        const auto inst = srd::testing::figure_eight();
        const auto out = reduce_rbds_to_vc(inst);
        o.check(out.k_prime == -3, "picture instance k'");
        o.check(std::holds_alternative<VertexCover>(out.witness) &&
                    std::get<VertexCover>(out.witness).vertices.size() == 8 && witness_validates(out),
                "vertex cover witness");
        const auto S = oracle_rbds(inst);
        o.check(S.has_value(), "picture instance has no solution");
        if (S) {
            const Labeling f = forward_label_rbds(out, *S);
            o.check(is_valid_srdf(out.graph, f).valid() && weight(f) == -3, "picture forward labeling");
        }
    }
    std::mt19937_64 rng(808);
    int solutions = 0;
    for (int trial = 0; trial < kRandomRbds; ++trial) {
        const auto inst = srd::testing::random_rbds(rng);
        const auto out = reduce_rbds_to_vc(inst);
        o.check(witness_validates(out), "random instance witness");
        for (const auto& S : all_rbds_solutions(inst)) {
            ++solutions;
            const Labeling f = forward_label_rbds(out, S);
            o.check(is_valid_srdf(out.graph, f).valid() && weight(f) <= out.k_prime,
                    "forward labeling, trial " + std::to_string(trial));
        }
    }
    return report(6, "red-blue reduction", o, std::to_string(solutions) + " oracle solutions");
}

bool scaling() {
    Outcome o;
    const Graph g = srd::testing::make(GraphKind::CompleteMultipartite, {20, 20, 20});
    const auto start = Clock::now();
    const auto r = solve_nd(g);
    const double secs = seconds_since(start);
    o.check(nd_partition(g).type_count() == 3, "t != 3");
    o.check(r.certified, "uncertified");
    o.check(secs <= kScalingBudgetS, "took " + std::to_string(secs) + " s");
    o.check(is_valid_srdf(g, r.witness).valid() && weight(r.witness) == r.optimum, "witness");
    o.check(lower_bound_degree(g).ceil() <= r.optimum, "below degree bound");
    char buf[64];
    std::snprintf(buf, sizeof buf, "optimum %lld in %.3f s", r.optimum, secs);
    return report(7, "K_{20,20,20} via nd", o, buf);
}

bool guess_soundness() {
    Outcome o;
    int graphs = 0;
    long long rejected = 0;
    for (const Graph& g : srd::testing::corpus(160, 1, kSoundnessMaxN, 88)) {
        ++graphs;
        const auto p = nd_partition(g);
        for (const auto& gv : enumerate_guesses(p))
            rejected += !check_guess_feasible(p, gv);
        srd::testing::for_each_labeling(g.order(), [&](const Labeling& f) {
            if (!is_valid_srdf(g, f).valid())
                return;
            GuessVector gv(static_cast<std::size_t>(p.type_count()));
            for (Vertex v = 0; v < g.order(); ++v) {
                auto& pr = gv[static_cast<std::size_t>(p.class_of[v])];
                pr.minus = pr.minus || f[v] == Label::Minus;
                pr.one = pr.one || f[v] == Label::One;
                pr.two = pr.two || f[v] == Label::Two;
            }
            o.check(check_guess_feasible(p, gv), "valid labeling with a rejected pattern on " + describe(g));
        });
    }
    return report(8, "guess-space soundness", o,
                  std::to_string(graphs) + " graphs, " + std::to_string(rejected) + " rejected guesses");
}

}  // namespace

int main() {
    const std::vector<std::function<bool()>> criteria = {agreement,    bounds,         split_reduction, gadget_reduction,
                                                         mrss_reduction, rbds_reduction, scaling,         guess_soundness};
    int failed = 0;
    for (const auto& c : criteria) {
        try {
            failed += !c();
        } catch (const std::exception& e) {
            std::printf("criterion FAIL: exception %s\n", e.what());
            ++failed;
        }
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
