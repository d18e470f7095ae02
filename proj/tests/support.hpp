#pragma once

#include <random>
#include <vector>

#include "srd/graph.hpp"
#include "srd/srdf.hpp"

namespace srd::testing {

inline Graph make(GraphKind kind, std::vector<int> params, std::uint64_t seed = 1) {
    return generate(kind, params, seed);
}

/// Mixed corpus of small graphs: G(n,p) at several densities, trees, cliques,
/// cycles, stars, split and multipartite graphs. Deterministic in seed.
inline std::vector<Graph> corpus(int count, int min_n, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = pick(min_n, max_n);
        const std::uint64_t s = rng();
        if (n == 0) {
            out.push_back(Graph());
            continue;
        }
        switch (i % 8) {
        case 0: out.push_back(make(GraphKind::RandomGnp, {n, 20}, s)); break;
        case 1: out.push_back(make(GraphKind::RandomGnp, {n, 45}, s)); break;
        case 2: out.push_back(make(GraphKind::RandomGnp, {n, 75}, s)); break;
        case 3: out.push_back(make(GraphKind::RandomTree, {n}, s)); break;
        case 4: {
            const int c = pick(1, std::max(1, n - 1));
            out.push_back(make(GraphKind::RandomSplit, {c, n - c, 50}, s));
            break;
        }
        case 5: {
            std::vector<int> parts;
            for (int left = n; left > 0;) {
                const int p = pick(1, left);
                parts.push_back(p);
                left -= p;
            }
            out.push_back(make(GraphKind::CompleteMultipartite, parts));
            break;
        }
        case 6:
            out.push_back(n >= 3 ? make(n % 2 ? GraphKind::Cycle : GraphKind::Wheel, {n % 2 ? n : n - 1})
                                 : make(GraphKind::Complete, {n}));
            break;
        default: out.push_back(make(GraphKind::RandomGnp, {n, 60}, s)); break;
        }
    }
    return out;
}

/// All 3^n labelings in lexicographic order (vertex 0 most significant).
template <class Visit>
void for_each_labeling(Vertex n, Visit&& visit) {
    Labeling f(static_cast<std::size_t>(n), Label::Minus);
    for (;;) {
        visit(f);
        Vertex i = n - 1;
        while (i >= 0 && f[i] == Label::Two) {
            f[i] = Label::Minus;
            --i;
        }
        if (i < 0)
            return;
        f[i] = f[i] == Label::Minus ? Label::One : Label::Two;
    }
}

/// Direct re-evaluation of the two SRDF conditions, independent of is_valid_srdf.
inline bool naive_valid(const Graph& g, const Labeling& f) {
    for (Vertex u = 0; u < g.order(); ++u) {
        int sum = value(f[u]);
        bool two = false;
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v)) {
                sum += value(f[v]);
                two = two || f[v] == Label::Two;
            }
        if (sum < 1 || (f[u] == Label::Minus && !two))
            return false;
    }
    return true;
}

}  // namespace srd::testing
