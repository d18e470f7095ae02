#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instances.hpp"
#include "srd/reductions.hpp"
#include "srd/solvers.hpp"
#include "support.hpp"

using namespace srd;
using srd::testing::make;
using srd::testing::set_weight;

namespace {

long long min_labelsum(const ReductionOutput& out, const Labeling& f, std::string_view tag) {
    long long low = std::numeric_limits<long long>::max();
    for (Vertex v : out.with_tag(tag))
        low = std::min<long long>(low, labelsum(out.graph, f, v));
    return low;
}

}  // namespace

// --- dominating set on cubic graphs -> split ----------------------------------

TEST_CASE("split reduction shape") {
    const Graph k4 = make(GraphKind::Complete, {4});
    const auto one = reduce_ds_cubic_to_split(k4, 1);
    CHECK(one.graph.order() == 38);
    CHECK(one.k_prime == -11);
    CHECK(witness_validates(one));
    CHECK(std::holds_alternative<SplitPartition>(one.witness));

    const auto two = reduce_ds_cubic_to_split(k4, 2);
    CHECK(two.graph.order() == 35);
    CHECK(two.k_prime == -10);
    CHECK(two.with_tag("E").size() == 5);

    CHECK_THROWS_AS(reduce_ds_cubic_to_split(make(GraphKind::Cycle, {4}), 1), PreconditionError);
    CHECK_THROWS_AS(reduce_ds_cubic_to_split(k4, 0), PreconditionError);
    CHECK_THROWS_AS(reduce_ds_cubic_to_split(k4, 5), PreconditionError);
}

TEST_CASE("split forward labeling on K_4 with one vertex") {
    const auto out = reduce_ds_cubic_to_split(make(GraphKind::Complete, {4}), 1);
    const Labeling f = forward_label_split(out, {0});
    CHECK(is_valid_srdf(out.graph, f).valid());
    CHECK(weight(f) == -11);
    CHECK(set_weight(out, f, "A") == 4 + 1);
    for (const char* tag : {"B", "C", "D", "X"})
        CHECK(set_weight(out, f, tag) == -4);
    CHECK(set_weight(out, f, "E") + set_weight(out, f, "Y") + set_weight(out, f, "Z") == 0);
    CHECK_THROWS_AS(forward_label_split(out, {}), PreconditionError);
    CHECK_THROWS_AS(forward_label_split(out, {0, 1}), PreconditionError);
}

TEST_CASE("property: split reduction counts and forward labeling closed forms") {
    for (int n = 4; n <= 10; n += 2)
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const Graph g = make(GraphKind::RandomCubic, {n}, seed);
            for (int k = 1; k <= n; ++k) {
                const auto out = reduce_ds_cubic_to_split(g, k);
                const long long s = (2LL * n - k + 5) / 2;
                const long long clique = 4LL * n + s;
                CHECK(out.graph.order() == 5 * n + 3 * s);
                CHECK(out.graph.size() == static_cast<std::size_t>(3 * n + 4 * n + 2 * s + clique * (clique - 1) / 2));
                CHECK(out.k_prime == k - 3LL * n);
                CHECK(witness_validates(out));
                const auto sets = all_dominating_sets(g, k);
                for (std::size_t i = 0; i < sets.size(); i += std::max<std::size_t>(1, sets.size() / 5)) {
                    const auto& S = sets[i];
                    const Labeling f = forward_label_split(out, S);
                    CHECK(weight(f) == static_cast<long long>(S.size()) - 3LL * n);
                    // Each a_i sees the whole clique and four X vertices labelled -1.
                    const long long a_sum = static_cast<long long>(S.size()) - k + k % 2;
                    CHECK(min_labelsum(out, f, "A") == a_sum);
                    CHECK(is_valid_srdf(out.graph, f).valid() == (a_sum >= 1));
                }
            }
        }
}

// --- dominating set -> gadget graph -----------------------------------------

TEST_CASE("gadget reduction shape") {
    const auto p2 = reduce_ds_gadget(make(GraphKind::Path, {2}), 1);
    CHECK(p2.graph.order() == 28);
    CHECK(witness_validates(p2));
    CHECK(reduce_ds_gadget(make(GraphKind::Path, {3}), 1).graph.order() == 48);
    const auto c4 = reduce_ds_gadget(make(GraphKind::Cycle, {4}), 1);
    CHECK(c4.graph.order() == 80);
    CHECK(c4.k_prime == 1);
    CHECK(is_bipartite(c4.graph));
    CHECK(witness_validates(c4));

    const auto k3 = reduce_ds_gadget(make(GraphKind::Complete, {3}), 1);
    CHECK(std::holds_alternative<std::monostate>(k3.witness));
    CHECK_FALSE(witness_validates(k3));

    CHECK_THROWS_AS(reduce_ds_gadget(Graph(3, {{0, 1}}), 1), PreconditionError);
    CHECK_THROWS_AS(reduce_ds_gadget(make(GraphKind::Path, {2}), 3), PreconditionError);
}

TEST_CASE("gadget forward labelings") {
    const auto c4 = reduce_ds_gadget(make(GraphKind::Cycle, {4}), 2);
    Labeling f = forward_label_gadget(c4, {0, 2});
    CHECK(is_valid_srdf(c4.graph, f).valid());
    CHECK(weight(f) == 2);

    const auto p2 = reduce_ds_gadget(make(GraphKind::Path, {2}), 1);
    f = forward_label_gadget(p2, {0});
    CHECK(is_valid_srdf(p2.graph, f).valid());
    CHECK(weight(f) == 1);
    CHECK(weight(f) - set_weight(p2, f, "V") == -2);
    CHECK_THROWS_AS(forward_label_gadget(p2, {}), PreconditionError);
}

TEST_CASE("property: gadget reduction on random graphs") {
    std::uint64_t seed = 0;
    int checked = 0;
    for (const Graph& g : srd::testing::corpus(80, 2, 9, 55)) {
        ++seed;
        if (g.min_degree() < 1)
            continue;
        const long long k = 1 + static_cast<long long>(seed % static_cast<std::uint64_t>(g.order()));
        const auto out = reduce_ds_gadget(g, k);
        long long expect_vertices = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            expect_vertices += 6 * (g.degree(v) + 1) + 2;
        CHECK(out.graph.order() == expect_vertices);
        CHECK(out.graph.size() == g.size() + static_cast<std::size_t>(expect_vertices - g.order()));
        CHECK(is_bipartite(out.graph).has_value() == is_bipartite(g).has_value());
        if (is_bipartite(g))
            CHECK(witness_validates(out));
        for (const auto& S : all_dominating_sets(g, k)) {
            const Labeling f = forward_label_gadget(out, S);
            CHECK(is_valid_srdf(out.graph, f).valid());
            CHECK(weight(f) == static_cast<long long>(S.size()));
            CHECK(weight(f) - set_weight(out, f, "V") == -g.order());
        }
        ++checked;
    }
    CHECK(checked >= 40);
}

// --- subset sum -> feedback vertex set ---------------------------------------

TEST_CASE("subset sum reduction on the six-vector picture instance") {
    const auto inst = srd::testing::figure_six();
    const auto out = reduce_mrss_to_fvs(inst);
    CHECK(out.k_prime == 10);
    CHECK(out.graph.order() == 114);
    CHECK(out.with_tag("D").size() == 14);
    CHECK(out.with_tag("F").size() == 8);
    REQUIRE(std::holds_alternative<FeedbackVertexSet>(out.witness));
    CHECK(std::get<FeedbackVertexSet>(out.witness).vertices.size() == 4);
    CHECK(witness_validates(out));
    CHECK_FALSE(is_forest_after_removal(out.graph, std::vector<Vertex>{}));

    const auto S = oracle_mrss(inst);
    REQUIRE(S);
    CHECK(*S == std::vector<int>{0, 1});
    const Labeling f = forward_label_mrss(out, *S);
    CHECK(is_valid_srdf(out.graph, f).valid());
    CHECK(weight(f) == 10);
}

TEST_CASE("subset sum per-vector weights") {
    const auto inst = srd::testing::figure_six();
    const auto out = reduce_mrss_to_fvs(inst);
    const Labeling f = forward_label_mrss(out, {0, 1});
    for (int i = 0; i < 3; ++i) {
        long long w = 0;
        for (Vertex v = 0; v < out.graph.order(); ++v) {
            const auto& r = out.roles[v];
            static const std::string vector_tags[] = {"a", "b", "c", "Zp", "w", "x", "y", "g", "h", "p", "q"};
            if (std::find(std::begin(vector_tags), std::end(vector_tags), r.tag) != std::end(vector_tags) &&
                r.index[0] == i)
                w += value(f[v]);
        }
        const int top = *std::max_element(inst.vectors[i].begin(), inst.vectors[i].end());
        CHECK(w == 3 * top + (i < 2 ? 2 : 1));
    }
}

TEST_CASE("subset sum preconditions and oracle") {
    auto inst = srd::testing::figure_six();
    inst.target = {0, 3};
    CHECK_THROWS_AS(reduce_mrss_to_fvs(inst), PreconditionError);
    inst = srd::testing::figure_six();
    inst.vectors.push_back({0, 0});
    CHECK_THROWS_AS(reduce_mrss_to_fvs(inst), PreconditionError);
    inst = srd::testing::figure_six();
    inst.vectors[0] = {1};
    CHECK_THROWS_AS(reduce_mrss_to_fvs(inst), PreconditionError);

    MrssInstance zero{1, 0, {{1}}, {0}};
    CHECK(oracle_mrss(zero) == std::vector<int>{});
    MrssInstance short_of{1, 1, {{1}}, {2}};
    CHECK_FALSE(oracle_mrss(short_of));

    const auto out = reduce_mrss_to_fvs(srd::testing::figure_six());
    CHECK_THROWS_AS(forward_label_mrss(out, {2}), PreconditionError);
    CHECK_THROWS_AS(forward_label_mrss(out, {0, 1, 2}), PreconditionError);
}

TEST_CASE("property: subset sum reduction on random instances") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = srd::testing::random_mrss(rng);
        const auto out = reduce_mrss_to_fvs(inst);
        long long expect = 0, k_prime = 2LL * inst.k + inst.m;
        for (int j = 0; j < inst.k; ++j) {
            long long t = inst.target[j];
            for (const auto& s : inst.vectors)
                t += s[j];
            expect += 4 + t + 3 * ((t + 1) / 2);
            k_prime -= t;
        }
        for (const auto& s : inst.vectors) {
            const int top = *std::max_element(s.begin(), s.end());
            expect += 1 + 13LL * top;
            k_prime += 3LL * top + 1;
        }
        CHECK(out.graph.order() == expect);
        CHECK(out.k_prime == k_prime);
        CHECK(witness_validates(out));

        const int n = static_cast<int>(inst.vectors.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> S;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1)
                    S.push_back(i);
            const Labeling f = forward_label_mrss_table(out, S);
            CHECK(weight(f) == out.k_prime - inst.m + static_cast<long long>(S.size()));
            bool covers = true;
            for (int j = 0; j < inst.k; ++j) {
                long long sum = 0;
                for (int i : S)
                    sum += inst.vectors[i][j];
                covers = covers && sum >= inst.target[j];
            }
            CHECK(is_valid_srdf(out.graph, f).valid() == covers);
            CHECK((is_valid_srdf(out.graph, f).valid() && weight(f) <= out.k_prime) == is_mrss_solution(inst, S));
        }
    }
}

// --- red-blue dominating set -> vertex cover ---------------------------------

TEST_CASE("red-blue reduction on the picture instance") {
    const auto inst = srd::testing::figure_eight();
    const auto out = reduce_rbds_to_vc(inst);
    CHECK(out.k_prime == -3);
    CHECK(out.graph.order() == 41);
    REQUIRE(std::holds_alternative<VertexCover>(out.witness));
    CHECK(std::get<VertexCover>(out.witness).vertices.size() == 8);
    CHECK(witness_validates(out));

    const auto S = oracle_rbds(inst);
    REQUIRE(S);
    CHECK(*S == std::vector<int>{1, 2});
    CHECK(all_rbds_solutions(inst).size() == 1);
    const Labeling f = forward_label_rbds(out, *S);
    CHECK(is_valid_srdf(out.graph, f).valid());
    CHECK(weight(f) == -3);
    CHECK_THROWS_AS(forward_label_rbds(out, {0, 1}), PreconditionError);
}

TEST_CASE("red-blue labelsum closed forms") {
    const auto inst = srd::testing::figure_eight();
    const auto out = reduce_rbds_to_vc(inst);
    const std::vector<int> S{1, 2};
    const Labeling f = forward_label_rbds(out, S);
    for (Vertex v : out.with_tag("Y1")) {
        const int y = out.roles[v].index[0];
        int hits = 0;
        for (auto [x, yy] : inst.edges)
            if (yy == y && (x == 1 || x == 2))
                ++hits;
        CHECK(labelsum(out.graph, f, v) == -1 + 2 * hits);
    }
    for (Vertex v : out.with_tag("X1")) {
        const int x = out.roles[v].index[0];
        if (x == 1 || x == 2)
            continue;
        int degree = 0;
        for (auto [xx, y] : inst.edges)
            degree += xx == x;
        CHECK(labelsum(out.graph, f, v) == -1 + 2 * degree);
    }
}

TEST_CASE("red-blue preconditions and oracle") {
    RbdsInstance lonely{2, 2, {{0, 0}, {0, 1}}, 1};
    CHECK_THROWS_AS(reduce_rbds_to_vc(lonely), PreconditionError);
    RbdsInstance blue{1, 2, {{0, 0}}, 1};
    CHECK_THROWS_AS(reduce_rbds_to_vc(blue), PreconditionError);
    CHECK_FALSE(oracle_rbds(blue));
    RbdsInstance star{1, 3, {{0, 0}, {0, 1}, {0, 2}}, 1};
    CHECK(oracle_rbds(star) == std::vector<int>{0});
    RbdsInstance too_big = srd::testing::figure_eight();
    too_big.k = 4;
    CHECK_THROWS_AS(reduce_rbds_to_vc(too_big), PreconditionError);
    RbdsInstance repeated{1, 1, {{0, 0}, {0, 0}}, 1};
    CHECK_THROWS_AS(validate(repeated), PreconditionError);
}

TEST_CASE("property: red-blue reduction on random instances") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = srd::testing::random_rbds(rng);
        const auto out = reduce_rbds_to_vc(inst);
        CHECK(out.graph.order() == 3 * inst.x_count + 8 * inst.y_count);
        CHECK(out.graph.size() == 4 * inst.edges.size() + 6 * static_cast<std::size_t>(inst.y_count));
        CHECK(out.k_prime == -2LL * inst.y_count - inst.x_count + 4LL * inst.k);
        CHECK(witness_validates(out));
        for (const auto& S : all_rbds_solutions(inst)) {
            const Labeling f = forward_label_rbds(out, S);
            CHECK(is_valid_srdf(out.graph, f).valid());
            CHECK(weight(f) == -2LL * inst.y_count - inst.x_count + 4LL * static_cast<long long>(S.size()));
        }
    }
}

// --- oracles -------------------------------------------------------------------

TEST_CASE("dominating set oracle") {
    CHECK(oracle_ds(make(GraphKind::Complete, {4}), 1) == std::vector<Vertex>{0});
    CHECK_FALSE(oracle_ds(make(GraphKind::Cycle, {4}), 1));
    const auto two = oracle_ds(make(GraphKind::Cycle, {4}), 2);
    REQUIRE(two);
    CHECK(two->size() == 2);
    CHECK_THROWS_AS(oracle_ds(make(GraphKind::Path, {21}), 3), CapExceeded);
    CHECK(all_dominating_sets(make(GraphKind::Complete, {3}), 1).size() == 3);
}
