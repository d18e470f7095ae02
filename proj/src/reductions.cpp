#include "srd/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "srd/solvers.hpp"

namespace srd {

namespace {

class Builder {
  public:
    Vertex add(std::string tag, std::vector<int> index = {}) {
        roles_.push_back(Role{std::move(tag), std::move(index)});
        return static_cast<Vertex>(roles_.size() - 1);
    }

    void join(Vertex u, Vertex v) { edges_.emplace_back(u, v); }

    Vertex order() const { return static_cast<Vertex>(roles_.size()); }

    ReductionOutput finish(ReductionKind kind, long long k_prime) {
        ReductionOutput out;
        out.kind = kind;
        out.graph = Graph(order(), std::move(edges_));
        out.k_prime = k_prime;
        out.roles = std::move(roles_);
        return out;
    }

  private:
    VertexRoleMap roles_;
    std::vector<Edge> edges_;
};

bool dominates(const Graph& g, const std::vector<Vertex>& S) {
    std::vector<char> hit(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s : S) {
        if (s < 0 || s >= g.order())
            return false;
        hit[s] = 1;
        for (Vertex v : g.neighbours(s))
            hit[v] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<char> membership(int n, const std::vector<int>& S, const char* what) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int s : S) {
        if (s < 0 || s >= n)
            throw PreconditionError(std::string(what) + " index " + std::to_string(s) + " out of range");
        if (in[s])
            throw PreconditionError(std::string(what) + " index " + std::to_string(s) + " repeated");
        in[s] = 1;
    }
    return in;
}

template <class T>
const T& source_as(const ReductionOutput& out, ReductionKind kind) {
    if (out.kind != kind)
        throw PreconditionError("reduction output is a " + std::string(reduction_name(out.kind)) + " instance");
    return std::get<T>(out.source);
}

/// Calls visit(subset) for every subset of {0..n-1} of size <= limit, by
/// size then lexicographically. Stops when visit returns true.
template <class Visit>
void for_each_subset(int n, int limit, Visit&& visit) {
    std::vector<int> pick;
    for (int size = 0; size <= std::min(limit, n); ++size) {
        pick.resize(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            if (visit(pick))
                return;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
}

constexpr int kOracleCap = 20;

}  // namespace

std::string_view reduction_name(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::DsToSplit: return "ds-split";
    case ReductionKind::DsToGadget: return "ds-gadget";
    case ReductionKind::MrssToFvs: return "mrss-fvs";
    case ReductionKind::RbdsToVc: return "rbds-vc";
    }
    return "unknown";
}

std::vector<Vertex> ReductionOutput::with_tag(std::string_view tag) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < roles.size(); ++v)
        if (roles[v].tag == tag)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

bool witness_validates(const ReductionOutput& out) {
    const Graph& g = out.graph;
    if (const auto* split = std::get_if<SplitPartition>(&out.witness))
        return is_split(g, *split);
    if (const auto* bp = std::get_if<Bipartition>(&out.witness))
        return validates_bipartition(g, *bp);
    if (const auto* fvs = std::get_if<FeedbackVertexSet>(&out.witness))
        return is_forest_after_removal(g, fvs->vertices);
    if (const auto* vc = std::get_if<VertexCover>(&out.witness))
        return is_vertex_cover(g, vc->vertices);
    return false;
}

void validate(const MrssInstance& inst) {
    if (inst.k < 0 || inst.m < 0)
        throw PreconditionError("mrss: k and m must be nonnegative");
    if (static_cast<int>(inst.target.size()) != inst.k)
        throw PreconditionError("mrss: target has length " + std::to_string(inst.target.size()) + ", expected " +
                                std::to_string(inst.k));
    for (std::size_t i = 0; i < inst.vectors.size(); ++i)
        if (static_cast<int>(inst.vectors[i].size()) != inst.k)
            throw PreconditionError("mrss: vector " + std::to_string(i) + " has the wrong length");
    auto negative = [](const std::vector<int>& v) { return std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }); };
    if (negative(inst.target) || std::any_of(inst.vectors.begin(), inst.vectors.end(), negative))
        throw PreconditionError("mrss: entries must be nonnegative");
}

void validate(const RbdsInstance& inst) {
    if (inst.x_count < 0 || inst.y_count < 0)
        throw PreconditionError("rbds: side sizes must be nonnegative");
    std::vector<std::pair<int, int>> sorted = inst.edges;
    for (auto [x, y] : sorted)
        if (x < 0 || x >= inst.x_count || y < 0 || y >= inst.y_count)
            throw PreconditionError("rbds: edge (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range");
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("rbds: repeated edge");
}

// --- ds -> split --------------------------------------------------------------

ReductionOutput reduce_ds_cubic_to_split(const Graph& g, long long k) {
    const Vertex n = g.order();
    if (n == 0 || !is_regular(g, 3))
        throw PreconditionError("ds-split: source graph must be cubic");
    if (k < 1 || k > n)
        throw PreconditionError("ds-split: k must lie in [1, n]");
    const long long s = (2LL * n - k + 4 + 1) / 2;

    Builder b;
    std::vector<Vertex> A, B, C, D, X, E, Y, Z;
    for (const auto& [tag, set] : {std::pair<const char*, std::vector<Vertex>*>{"A", &A},
                                   {"B", &B}, {"C", &C}, {"D", &D}, {"X", &X}})
        for (Vertex i = 0; i < n; ++i)
            set->push_back(b.add(tag, {i}));
    for (const auto& [tag, set] : {std::pair<const char*, std::vector<Vertex>*>{"E", &E}, {"Y", &Y}, {"Z", &Z}})
        for (long long i = 0; i < s; ++i)
            set->push_back(b.add(tag, {static_cast<int>(i)}));

    for (Vertex j = 0; j < n; ++j)
        for (Vertex i : g.neighbours(j))
            b.join(A[i], X[j]);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex* copy : {&A[i], &B[i], &C[i], &D[i]})
            b.join(X[i], *copy);
    for (long long i = 0; i < s; ++i) {
        b.join(E[i], Y[i]);
        b.join(E[i], Z[i]);
    }
    std::vector<Vertex> clique;
    for (const auto* set : {&A, &B, &C, &D, &E})
        clique.insert(clique.end(), set->begin(), set->end());
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            b.join(clique[i], clique[j]);

    ReductionOutput out = b.finish(ReductionKind::DsToSplit, k - 3LL * n);
    SplitPartition witness;
    witness.clique = clique;
    for (const auto* set : {&X, &Y, &Z})
        witness.independent.insert(witness.independent.end(), set->begin(), set->end());
    std::sort(witness.clique.begin(), witness.clique.end());
    std::sort(witness.independent.begin(), witness.independent.end());
    out.witness = std::move(witness);
    out.source = DsSource{g, k};
    return out;
}

Labeling forward_label_split(const ReductionOutput& out, const std::vector<Vertex>& S) {
    const auto& src = source_as<DsSource>(out, ReductionKind::DsToSplit);
    if (!dominates(src.graph, S))
        throw PreconditionError("ds-split: S is not a dominating set of the source graph");
    if (static_cast<long long>(S.size()) > src.k)
        throw PreconditionError("ds-split: |S| exceeds k");
    Labeling f(static_cast<std::size_t>(out.graph.order()), Label::Minus);
    for (Vertex v = 0; v < out.graph.order(); ++v) {
        const Role& r = out.roles[v];
        if (r.tag == "E")
            f[v] = Label::Two;
        else if (r.tag == "A")
            f[v] = std::find(S.begin(), S.end(), r.index[0]) != S.end() ? Label::Two : Label::One;
    }
    return f;
}

// --- ds -> gadget -------------------------------------------------------------

ReductionOutput reduce_ds_gadget(const Graph& g, long long k) {
    const Vertex n = g.order();
    if (k < 1 || k > n)
        throw PreconditionError("ds-gadget: k must lie in [1, n]");
    if (n == 0 || g.min_degree() < 1)
        throw PreconditionError("ds-gadget: source graph must not have isolated vertices");
    const auto colouring = is_bipartite(g);
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    if (colouring)
        for (Vertex v : colouring->right)
            side[v] = 1;

    Builder b;
    std::vector<int> colour;
    auto add = [&](std::string tag, std::vector<int> index, int c) {
        colour.push_back(c);
        return b.add(std::move(tag), std::move(index));
    };
    for (Vertex v = 0; v < n; ++v)
        add("V", {v}, side[v]);
    for (const auto& [u, v] : g.edges())
        b.join(u, v);
    for (Vertex v = 0; v < n; ++v) {
        const int same = side[v];
        const int other = 1 - same;
        const int paths = g.degree(v) + 1;
        for (int i = 0; i < paths; ++i) {
            const Vertex x = add("x", {v, i}, other);
            const Vertex y = add("y", {v, i}, same);
            const Vertex z = add("z", {v, i}, other);
            b.join(v, x);
            b.join(x, y);
            b.join(y, z);
            for (int q = 0; q < 2; ++q)
                b.join(z, add("Q", {v, i, q}, same));
            if (i == 0) {
                for (int q = 0; q < 2; ++q)
                    b.join(y, add("R", {v, q}, other));
            } else {
                b.join(y, add("r", {v, i}, other));
            }
        }
    }

    ReductionOutput out = b.finish(ReductionKind::DsToGadget, k);
    if (colouring) {
        Bipartition parts;
        for (Vertex v = 0; v < out.graph.order(); ++v)
            (colour[v] == 0 ? parts.left : parts.right).push_back(v);
        out.witness = std::move(parts);
    }
    out.source = DsSource{g, k};
    return out;
}

Labeling forward_label_gadget(const ReductionOutput& out, const std::vector<Vertex>& S) {
    const auto& src = source_as<DsSource>(out, ReductionKind::DsToGadget);
    if (!dominates(src.graph, S))
        throw PreconditionError("ds-gadget: S is not a dominating set of the source graph");
    if (static_cast<long long>(S.size()) > src.k)
        throw PreconditionError("ds-gadget: |S| exceeds k");
    Labeling f(static_cast<std::size_t>(out.graph.order()), Label::Minus);
    for (Vertex v = 0; v < out.graph.order(); ++v) {
        const Role& r = out.roles[v];
        if (r.tag == "y" || r.tag == "z")
            f[v] = Label::Two;
        else if (r.tag == "V")
            f[v] = std::find(S.begin(), S.end(), r.index[0]) != S.end() ? Label::Two : Label::One;
    }
    return f;
}

// --- mrss -> fvs --------------------------------------------------------------

ReductionOutput reduce_mrss_to_fvs(const MrssInstance& inst) {
    validate(inst);
    const int n = static_cast<int>(inst.vectors.size());
    for (int j = 0; j < inst.k; ++j)
        if (inst.target[j] < 1)
            throw PreconditionError("mrss-fvs: every target entry must be at least 1");
    std::vector<int> top(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        top[i] = *std::max_element(inst.vectors[i].begin(), inst.vectors[i].end());
        if (top[i] == 0)
            throw PreconditionError("mrss-fvs: vector " + std::to_string(i) + " is zero");
    }
    if (inst.k == 0)
        throw PreconditionError("mrss-fvs: dimension must be at least 1");

    Builder b;
    std::vector<Vertex> u(static_cast<std::size_t>(inst.k)), v(static_cast<std::size_t>(inst.k));
    long long total_d = 0;
    for (int j = 0; j < inst.k; ++j) {
        int d_size = inst.target[j];
        for (const auto& s : inst.vectors)
            d_size += s[j];
        total_d += d_size;
        const int f_size = (d_size + 1) / 2;
        u[j] = b.add("u", {j});
        v[j] = b.add("v", {j});
        b.join(u[j], b.add("r1", {j}));
        b.join(v[j], b.add("r2", {j}));
        for (int d = 0; d < d_size; ++d) {
            const Vertex dv = b.add("D", {j, d});
            b.join(u[j], dv);
            b.join(v[j], dv);
        }
        for (int f = 0; f < f_size; ++f) {
            const Vertex fv = b.add("F", {j, f});
            b.join(v[j], fv);
            for (int p = 0; p < 2; ++p)
                b.join(fv, b.add("P", {j, f, p}));
        }
    }
    long long vector_weight = 0;
    for (int i = 0; i < n; ++i) {
        vector_weight += 3LL * top[i] + 1;
        const Vertex a = b.add("a", {i});
        std::vector<Vertex> c_vertices;
        for (int l = 0; l < top[i]; ++l) {
            const Vertex bv = b.add("b", {i, l});
            const Vertex cv = b.add("c", {i, l});
            c_vertices.push_back(cv);
            b.join(a, bv);
            b.join(bv, cv);
            for (int z = 0; z < 4; ++z)
                b.join(bv, b.add("Zp", {i, l, z}));
            const Vertex w = b.add("w", {i, l});
            const Vertex x = b.add("x", {i, l});
            const Vertex y = b.add("y", {i, l});
            b.join(bv, w);
            b.join(w, x);
            b.join(x, y);
            const Vertex gv = b.add("g", {i, l});
            const Vertex hv = b.add("h", {i, l});
            const Vertex pv = b.add("p", {i, l});
            const Vertex qv = b.add("q", {i, l});
            b.join(cv, gv);
            b.join(gv, hv);
            b.join(cv, pv);
            b.join(pv, qv);
        }
        for (int j = 0; j < inst.k; ++j)
            for (int l = 0; l < inst.vectors[i][j]; ++l)
                b.join(u[j], c_vertices[l]);
    }

    const long long k_prime = vector_weight - total_d + 2LL * inst.k + inst.m;
    ReductionOutput out = b.finish(ReductionKind::MrssToFvs, k_prime);
    FeedbackVertexSet fvs;
    for (int j = 0; j < inst.k; ++j) {
        fvs.vertices.push_back(u[j]);
        fvs.vertices.push_back(v[j]);
    }
    std::sort(fvs.vertices.begin(), fvs.vertices.end());
    out.witness = std::move(fvs);
    out.source = inst;
    return out;
}

Labeling forward_label_mrss_table(const ReductionOutput& out, const std::vector<int>& S_prime) {
    const auto& inst = source_as<MrssInstance>(out, ReductionKind::MrssToFvs);
    const auto chosen = membership(static_cast<int>(inst.vectors.size()), S_prime, "mrss: S'");
    Labeling f(static_cast<std::size_t>(out.graph.order()), Label::Minus);
    for (Vertex vtx = 0; vtx < out.graph.order(); ++vtx) {
        const Role& r = out.roles[vtx];
        const std::string& t = r.tag;
        if (t == "F" || t == "u" || t == "v" || t == "b" || t == "g" || t == "p") {
            f[vtx] = Label::Two;
            continue;
        }
        if (t == "P" || t == "D" || t == "r1" || t == "r2" || t == "h" || t == "q" || t == "Zp")
            continue;
        const bool in = chosen[r.index[0]] != 0;
        if (t == "c" || t == "a")
            f[vtx] = in ? Label::Two : Label::One;
        else if (t == "w")
            f[vtx] = in ? Label::Minus : Label::One;
        else if (t == "x")
            f[vtx] = in ? Label::One : Label::Two;
        else if (t == "y")
            f[vtx] = in ? Label::One : Label::Minus;
    }
    return f;
}

Labeling forward_label_mrss(const ReductionOutput& out, const std::vector<int>& S_prime) {
    const auto& inst = source_as<MrssInstance>(out, ReductionKind::MrssToFvs);
    if (!is_mrss_solution(inst, S_prime))
        throw PreconditionError("mrss: S' is not a solution of the source instance");
    return forward_label_mrss_table(out, S_prime);
}

// --- rbds -> vc ---------------------------------------------------------------

ReductionOutput reduce_rbds_to_vc(const RbdsInstance& inst) {
    validate(inst);
    if (inst.k < 1 || inst.k > inst.x_count)
        throw PreconditionError("rbds-vc: k must lie in [1, |X|]");
    std::vector<int> x_deg(static_cast<std::size_t>(inst.x_count), 0), y_deg(static_cast<std::size_t>(inst.y_count), 0);
    for (auto [x, y] : inst.edges) {
        ++x_deg[x];
        ++y_deg[y];
    }
    for (int x = 0; x < inst.x_count; ++x)
        if (x_deg[x] == 0)
            throw PreconditionError("rbds-vc: X vertex " + std::to_string(x) + " has no neighbour");
    for (int y = 0; y < inst.y_count; ++y)
        if (y_deg[y] == 0)
            throw PreconditionError("rbds-vc: Y vertex " + std::to_string(y) + " has no neighbour");

    Builder b;
    std::vector<std::vector<Vertex>> X(3), Y(2);
    for (int c = 0; c < 3; ++c)
        for (int x = 0; x < inst.x_count; ++x)
            X[c].push_back(b.add("X" + std::to_string(c + 1), {x}));
    for (int c = 0; c < 2; ++c)
        for (int y = 0; y < inst.y_count; ++y)
            Y[c].push_back(b.add("Y" + std::to_string(c + 1), {y}));
    for (int c = 0; c < 2; ++c)
        for (int y = 0; y < inst.y_count; ++y)
            for (int p = 0; p < 3; ++p)
                b.join(Y[c][y], b.add("P" + std::to_string(c + 1), {y, p}));
    for (auto [x, y] : inst.edges) {
        b.join(Y[0][y], X[0][x]);
        b.join(Y[0][y], X[1][x]);
        b.join(Y[1][y], X[1][x]);
        b.join(Y[1][y], X[2][x]);
    }

    const long long k_prime = -2LL * inst.y_count - inst.x_count + 4LL * inst.k;
    ReductionOutput out = b.finish(ReductionKind::RbdsToVc, k_prime);
    VertexCover vc;
    vc.vertices = Y[0];
    vc.vertices.insert(vc.vertices.end(), Y[1].begin(), Y[1].end());
    out.witness = std::move(vc);
    out.source = inst;
    return out;
}

Labeling forward_label_rbds(const ReductionOutput& out, const std::vector<int>& S) {
    const auto& inst = source_as<RbdsInstance>(out, ReductionKind::RbdsToVc);
    if (!is_rbds_solution(inst, S))
        throw PreconditionError("rbds: S does not dominate Y within budget");
    const auto chosen = membership(inst.x_count, S, "rbds: S");
    Labeling f(static_cast<std::size_t>(out.graph.order()), Label::Minus);
    for (Vertex v = 0; v < out.graph.order(); ++v) {
        const Role& r = out.roles[v];
        if (r.tag == "Y1" || r.tag == "Y2")
            f[v] = Label::Two;
        else if (r.tag == "X2")
            f[v] = Label::One;
        else if (r.tag == "X1" || r.tag == "X3")
            f[v] = chosen[r.index[0]] ? Label::One : Label::Minus;
    }
    return f;
}

// --- oracles ------------------------------------------------------------------

std::vector<std::vector<Vertex>> all_dominating_sets(const Graph& g, long long k) {
    if (g.order() > kOracleCap)
        throw CapExceeded("dominating set oracle is capped at " + std::to_string(kOracleCap) + " vertices");
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        closed[u] = 1U << u;
        for (Vertex v : g.neighbours(u))
            closed[u] |= 1U << v;
    }
    const std::uint32_t all = g.order() == 0 ? 0 : (std::uint32_t{1} << g.order()) - 1;
    std::vector<std::vector<Vertex>> out;
    const int limit = static_cast<int>(std::clamp<long long>(k, -1, g.order()));
    for_each_subset(g.order(), limit, [&](const std::vector<int>& pick) {
        std::uint32_t hit = 0;
        for (int v : pick)
            hit |= closed[v];
        if (hit == all)
            out.emplace_back(pick.begin(), pick.end());
        return false;
    });
    return out;
}

std::optional<std::vector<Vertex>> oracle_ds(const Graph& g, long long k) {
    if (g.order() > kOracleCap)
        throw CapExceeded("dominating set oracle is capped at " + std::to_string(kOracleCap) + " vertices");
    std::optional<std::vector<Vertex>> found;
    const int limit = static_cast<int>(std::clamp<long long>(k, -1, g.order()));
    for_each_subset(g.order(), limit, [&](const std::vector<int>& pick) {
        if (!dominates(g, pick))
            return false;
        found = std::vector<Vertex>(pick.begin(), pick.end());
        return true;
    });
    return found;
}

bool is_mrss_solution(const MrssInstance& inst, const std::vector<int>& S_prime) {
    const int n = static_cast<int>(inst.vectors.size());
    if (static_cast<int>(S_prime.size()) > inst.m)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<long long> sum(static_cast<std::size_t>(inst.k), 0);
    for (int i : S_prime) {
        if (i < 0 || i >= n || seen[i])
            return false;
        seen[i] = 1;
        for (int j = 0; j < inst.k; ++j)
            sum[j] += inst.vectors[i][j];
    }
    for (int j = 0; j < inst.k; ++j)
        if (sum[j] < inst.target[j])
            return false;
    return true;
}

std::optional<std::vector<int>> oracle_mrss(const MrssInstance& inst) {
    validate(inst);
    const int n = static_cast<int>(inst.vectors.size());
    if (n > kOracleCap)
        throw CapExceeded("subset sum oracle is capped at " + std::to_string(kOracleCap) + " vectors");
    std::optional<std::vector<int>> found;
    for_each_subset(n, inst.m, [&](const std::vector<int>& pick) {
        if (!is_mrss_solution(inst, pick))
            return false;
        found = pick;
        return true;
    });
    return found;
}

bool is_rbds_solution(const RbdsInstance& inst, const std::vector<int>& S) {
    if (static_cast<int>(S.size()) > inst.k)
        return false;
    std::vector<char> in(static_cast<std::size_t>(inst.x_count), 0);
    for (int x : S) {
        if (x < 0 || x >= inst.x_count || in[x])
            return false;
        in[x] = 1;
    }
    std::vector<char> hit(static_cast<std::size_t>(inst.y_count), 0);
    for (auto [x, y] : inst.edges)
        if (in[x])
            hit[y] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<std::vector<int>> all_rbds_solutions(const RbdsInstance& inst) {
    validate(inst);
    if (inst.x_count > kOracleCap)
        throw CapExceeded("red-blue oracle is capped at " + std::to_string(kOracleCap) + " X vertices");
    std::vector<std::vector<int>> out;
    for_each_subset(inst.x_count, inst.k, [&](const std::vector<int>& pick) {
        if (is_rbds_solution(inst, pick))
            out.push_back(pick);
        return false;
    });
    return out;
}

std::optional<std::vector<int>> oracle_rbds(const RbdsInstance& inst) {
    validate(inst);
    if (inst.x_count > kOracleCap)
        throw CapExceeded("red-blue oracle is capped at " + std::to_string(kOracleCap) + " X vertices");
    std::optional<std::vector<int>> found;
    for_each_subset(inst.x_count, inst.k, [&](const std::vector<int>& pick) {
        if (!is_rbds_solution(inst, pick))
            return false;
        found = pick;
        return true;
    });
    return found;
}

}  // namespace srd
