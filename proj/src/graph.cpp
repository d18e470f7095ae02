#include "srd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace srd {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw PreconditionError("negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge endpoint out of range");
        if (u == v)
            throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw PreconditionError("duplicate edge");

    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adj_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

int Graph::min_degree() const noexcept {
    if (adj_.empty())
        return 0;
    int best = static_cast<int>(adj_.front().size());
    for (const auto& list : adj_)
        best = std::min(best, static_cast<int>(list.size()));
    return best;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> to_int(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::optional<long long> n, m;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, std::size_t>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tok = split_ws(line);
        if (tok.empty() || tok[0].starts_with('#'))
            continue;

        if (tok[0] == "p") {
            if (n)
                throw ParseError(ParseErrorKind::MalformedHeader, line_no, "duplicate header");
            if (tok.size() != 3)
                throw ParseError(ParseErrorKind::MalformedHeader, line_no, "expected 'p <n> <m>'");
            n = to_int(tok[1]);
            m = to_int(tok[2]);
            if (!n || !m || *n < 0 || *m < 0 || *n > (1LL << 30))
                throw ParseError(ParseErrorKind::MalformedHeader, line_no, "bad vertex or edge count");
            continue;
        }
        if (tok[0] != "e")
            throw ParseError(ParseErrorKind::MalformedLine, line_no, "unknown line type '" + std::string(tok[0]) + "'");
        if (!n)
            throw ParseError(ParseErrorKind::MalformedHeader, line_no, "edge before 'p' header");
        if (tok.size() != 3)
            throw ParseError(ParseErrorKind::MalformedLine, line_no, "expected 'e <u> <v>'");
        auto u = to_int(tok[1]);
        auto v = to_int(tok[2]);
        if (!u || !v)
            throw ParseError(ParseErrorKind::MalformedLine, line_no, "non-integer endpoint");
        if (*u < 1 || *v < 1 || *u > *n || *v > *n)
            throw ParseError(ParseErrorKind::EndpointOutOfRange, line_no, "endpoint outside [1, n]");
        if (*u == *v)
            throw ParseError(ParseErrorKind::SelfLoop, line_no, "self-loop");
        Edge e{static_cast<Vertex>(std::min(*u, *v) - 1), static_cast<Vertex>(std::max(*u, *v) - 1)};
        edges.push_back(e);
        seen.emplace_back(e, line_no);
    }
    if (!n)
        throw ParseError(ParseErrorKind::MalformedHeader, line_no, "missing 'p' header");

    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw ParseError(ParseErrorKind::DuplicateEdge, seen[i].second, "duplicate edge");
    if (static_cast<long long>(edges.size()) != *m)
        throw ParseError(ParseErrorKind::EdgeCountMismatch, line_no,
                         "header declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<Vertex>(*n), std::move(edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::pair<std::string_view, GraphKind> kKindNames[] = {
    {"path", GraphKind::Path},
    {"cycle", GraphKind::Cycle},
    {"complete", GraphKind::Complete},
    {"complete_bipartite", GraphKind::CompleteBipartite},
    {"complete_multipartite", GraphKind::CompleteMultipartite},
    {"star", GraphKind::Star},
    {"wheel", GraphKind::Wheel},
    {"random_gnp", GraphKind::RandomGnp},
    {"random_cubic", GraphKind::RandomCubic},
    {"random_split", GraphKind::RandomSplit},
    {"random_tree", GraphKind::RandomTree},
};

// Raw 64-bit draws only: std distributions differ between standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    bool percent(int p) { return below(100) < static_cast<std::uint64_t>(p); }

    template <class It>
    void shuffle(It first, It last) {
        for (auto i = last - first; i > 1; --i)
            std::iter_swap(first + (i - 1), first + static_cast<std::ptrdiff_t>(below(static_cast<std::uint64_t>(i))));
    }

  private:
    std::mt19937_64 engine_;
};

void expect_params(std::span<const int> params, std::size_t count, std::string_view kind) {
    if (params.size() != count)
        throw PreconditionError(std::string(kind) + " expects " + std::to_string(count) + " parameter(s)");
    for (int p : params)
        if (p < 0)
            throw PreconditionError(std::string(kind) + ": parameters must be nonnegative");
}

Graph complete_multipartite(std::span<const int> sizes) {
    std::vector<int> part;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
    const auto n = static_cast<Vertex>(part.size());
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)])
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

std::vector<Edge> random_perfect_matching(Vertex n, Rng& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm.begin(), perm.end());
    std::vector<Edge> m;
    for (std::size_t i = 0; i + 1 < perm.size(); i += 2)
        m.emplace_back(std::min(perm[i], perm[i + 1]), std::max(perm[i], perm[i + 1]));
    return m;
}

Graph random_cubic(Vertex n, Rng& rng) {
    // Superpose three perfect matchings, resampling any that repeats an edge.
    constexpr int kMaxAttempts = 100000;
    std::vector<Edge> edges;
    std::vector<Edge> sorted;
    for (int matching = 0; matching < 3; ++matching) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
            auto m = random_perfect_matching(n, rng);
            placed = std::none_of(m.begin(), m.end(), [&](const Edge& e) {
                return std::binary_search(sorted.begin(), sorted.end(), e);
            });
            if (placed) {
                edges.insert(edges.end(), m.begin(), m.end());
                sorted = edges;
                std::sort(sorted.begin(), sorted.end());
            }
        }
        if (!placed)
            throw Error("random_cubic: matching superposition did not converge");
    }
    return Graph(n, std::move(edges));
}

}  // namespace

std::optional<GraphKind> graph_kind_from_name(std::string_view name) {
    for (auto [text, kind] : kKindNames)
        if (text == name)
            return kind;
    return std::nullopt;
}

std::string_view graph_kind_name(GraphKind kind) {
    for (auto [text, k] : kKindNames)
        if (k == kind)
            return text;
    return "unknown";
}

std::pair<Graph, SplitPartition> generate_random_split(int clique, int independent, int percent,
                                                       std::uint64_t seed) {
    if (clique < 0 || independent < 0 || percent < 0 || percent > 100)
        throw PreconditionError("random_split: invalid parameters");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < clique; ++u)
        for (Vertex v = u + 1; v < clique; ++v)
            edges.emplace_back(u, v);
    for (Vertex i = clique; i < clique + independent; ++i)
        for (Vertex c = 0; c < clique; ++c)
            if (rng.percent(percent))
                edges.emplace_back(c, i);
    SplitPartition witness;
    for (Vertex u = 0; u < clique; ++u)
        witness.clique.push_back(u);
    for (Vertex u = clique; u < clique + independent; ++u)
        witness.independent.push_back(u);
    return {Graph(clique + independent, std::move(edges)), std::move(witness)};
}

Graph generate(GraphKind kind, std::span<const int> params, std::optional<std::uint64_t> seed) {
    const auto name = graph_kind_name(kind);
    Rng rng(seed.value_or(0));
    std::vector<Edge> edges;
    switch (kind) {
    case GraphKind::Path: {
        expect_params(params, 1, name);
        for (Vertex u = 0; u + 1 < params[0]; ++u)
            edges.emplace_back(u, u + 1);
        return Graph(params[0], std::move(edges));
    }
    case GraphKind::Cycle: {
        expect_params(params, 1, name);
        if (params[0] < 3)
            throw PreconditionError("cycle needs n >= 3");
        for (Vertex u = 0; u < params[0]; ++u)
            edges.emplace_back(u, (u + 1) % params[0]);
        return Graph(params[0], std::move(edges));
    }
    case GraphKind::Complete: {
        expect_params(params, 1, name);
        std::vector<int> ones(static_cast<std::size_t>(params[0]), 1);
        return complete_multipartite(ones);
    }
    case GraphKind::CompleteBipartite:
        expect_params(params, 2, name);
        return complete_multipartite(params);
    case GraphKind::CompleteMultipartite:
        if (params.empty())
            throw PreconditionError("complete_multipartite needs at least one part size");
        expect_params(params, params.size(), name);
        return complete_multipartite(params);
    case GraphKind::Star: {
        expect_params(params, 1, name);
        for (Vertex leaf = 1; leaf <= params[0]; ++leaf)
            edges.emplace_back(0, leaf);
        return Graph(params[0] + 1, std::move(edges));
    }
    case GraphKind::Wheel: {
        expect_params(params, 1, name);
        const int rim = params[0];
        if (rim < 3)
            throw PreconditionError("wheel needs a rim of at least 3 vertices");
        for (Vertex i = 1; i <= rim; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, i % rim + 1);
        }
        return Graph(rim + 1, std::move(edges));
    }
    case GraphKind::RandomGnp: {
        expect_params(params, 2, name);
        if (params[1] > 100)
            throw PreconditionError("random_gnp: percent must be in [0, 100]");
        for (Vertex u = 0; u < params[0]; ++u)
            for (Vertex v = u + 1; v < params[0]; ++v)
                if (rng.percent(params[1]))
                    edges.emplace_back(u, v);
        return Graph(params[0], std::move(edges));
    }
    case GraphKind::RandomCubic:
        expect_params(params, 1, name);
        if (params[0] < 4 || params[0] % 2 != 0)
            throw PreconditionError("cubic graphs need even n >= 4");
        return random_cubic(params[0], rng);
    case GraphKind::RandomSplit:
        expect_params(params, 3, name);
        return generate_random_split(params[0], params[1], params[2], seed.value_or(0)).first;
    case GraphKind::RandomTree: {
        expect_params(params, 1, name);
        for (Vertex v = 1; v < params[0]; ++v)
            edges.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v);
        return Graph(params[0], std::move(edges));
    }
    }
    throw PreconditionError("unknown graph kind");
}

// ---------------------------------------------------------------------------

namespace {

void check_partition(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
    for (auto part : {a, b})
        for (Vertex v : part) {
            if (v < 0 || v >= g.order())
                throw PreconditionError("witness vertex out of range");
            ++hits[static_cast<std::size_t>(v)];
        }
    for (int h : hits)
        if (h != 1)
            throw PreconditionError("witness does not partition the vertex set");
}

}  // namespace

bool is_split(const Graph& g, const SplitPartition& witness) {
    check_partition(g, witness.clique, witness.independent);
    const auto& k = witness.clique;
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (!g.adjacent(k[i], k[j]))
                return false;
    const auto& ind = witness.independent;
    for (std::size_t i = 0; i < ind.size(); ++i)
        for (std::size_t j = i + 1; j < ind.size(); ++j)
            if (g.adjacent(ind[i], ind[j]))
                return false;
    return true;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (colour[static_cast<std::size_t>(s)] != -1)
            continue;
        colour[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbours(u)) {
                auto& cv = colour[static_cast<std::size_t>(v)];
                const int cu = colour[static_cast<std::size_t>(u)];
                if (cv == -1) {
                    cv = 1 - cu;
                    q.push(v);
                } else if (cv == cu) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < g.order(); ++v)
        (colour[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
    return parts;
}

bool validates_bipartition(const Graph& g, const Bipartition& parts) {
    check_partition(g, parts.left, parts.right);
    std::vector<char> left(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : parts.left)
        left[static_cast<std::size_t>(v)] = 1;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return left[static_cast<std::size_t>(e.first)] != left[static_cast<std::size_t>(e.second)];
    });
}

bool is_regular(const Graph& g, int r) {
    for (Vertex u = 0; u < g.order(); ++u)
        if (g.degree(u) != r)
            return false;
    return true;
}

bool is_forest_after_removal(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed)
        gone.at(static_cast<std::size_t>(v)) = 1;
    // Union-find: an edge joining two vertices already connected closes a cycle.
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [u, v] : g.edges()) {
        if (gone[static_cast<std::size_t>(u)] || gone[static_cast<std::size_t>(v)])
            continue;
        Vertex ru = find(u), rv = find(v);
        if (ru == rv)
            return false;
        parent[static_cast<std::size_t>(ru)] = rv;
    }
    return true;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : cover)
        in.at(static_cast<std::size_t>(v)) = 1;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return in[static_cast<std::size_t>(e.first)] || in[static_cast<std::size_t>(e.second)];
    });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (Vertex v : g.neighbours(u))
                if (comp[static_cast<std::size_t>(v)] == -1) {
                    comp[static_cast<std::size_t>(v)] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index.at(static_cast<std::size_t>(vertices[i])) = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0)
            edges.emplace_back(a, b);
    }
    return Graph(static_cast<Vertex>(vertices.size()), std::move(edges));
}

}  // namespace srd
