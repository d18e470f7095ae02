#include "srd/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "srd/kernels.hpp"
#include "srd/nd_fpt.hpp"

namespace srd {

std::string_view algo_name(Algo a) {
    switch (a) {
    case Algo::Brute: return "brute";
    case Algo::BranchAndBound: return "bb";
    case Algo::NdIlp: return "nd-ilp";
    }
    return "unknown";
}

std::optional<Algo> algo_from_name(std::string_view name) {
    if (name == "brute")
        return Algo::Brute;
    if (name == "bb")
        return Algo::BranchAndBound;
    if (name == "nd-ilp" || name == "nd_ilp" || name == "nd")
        return Algo::NdIlp;
    return std::nullopt;
}

// --- exhaustive --------------------------------------------------------------

SolveResult solve_brute(const Graph& g, const BruteOptions& options) {
    const Vertex n = g.order();
    if (n > options.cap || n > kernels::kMaxMaskVertices)
        throw CapExceeded("brute force is capped at " + std::to_string(options.cap) + " vertices (graph has " +
                          std::to_string(n) + ")");
    const auto closed = kernels::closed_masks(g);
    const auto& kernel = kernels::active_kernels();

    // Odometer in lexicographic order: vertex n-1 is the fastest digit,
    // digit 0/1/2 stands for label -1/1/2.
    std::vector<std::uint8_t> digit(static_cast<std::size_t>(n), 0);
    kernels::MaskLabeling f;
    f.minus = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    long long w = -n;

    SolveResult result;
    result.algo = Algo::Brute;
    long long best = std::numeric_limits<long long>::max();
    kernels::MaskLabeling best_masks;
    for (;;) {
        ++result.explored;
        if (w < best && kernel.is_srdf(closed, f)) {
            best = w;
            best_masks = f;
        }
        Vertex i = n - 1;
        while (i >= 0 && digit[i] == 2) {
            digit[i] = 0;
            const std::uint64_t bit = std::uint64_t{1} << i;
            f.two &= ~bit;
            f.minus |= bit;
            w -= 3;
            --i;
        }
        if (i < 0)
            break;
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (digit[i]++ == 0) {
            f.minus &= ~bit;
            f.one |= bit;
            w += 2;
        } else {
            f.one &= ~bit;
            f.two |= bit;
            w += 1;
        }
    }
    result.optimum = best;
    result.witness = kernels::from_masks(best_masks, n);
    return result;
}

// --- branch and bound ------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

class BranchAndBound {
  public:
    BranchAndBound(const Graph& g, const BranchAndBoundOptions& options, Clock::time_point deadline)
        : g_(g), n_(g.order()), options_(options), deadline_(deadline) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        label_.assign(static_cast<std::size_t>(n_), 0);
        closed_sum_.assign(static_cast<std::size_t>(n_), 0);
        closed_free_.resize(static_cast<std::size_t>(n_));
        open_free_.resize(static_cast<std::size_t>(n_));
        open_twos_.assign(static_cast<std::size_t>(n_), 0);
        for (Vertex u = 0; u < n_; ++u) {
            open_free_[u] = g.degree(u);
            closed_free_[u] = g.degree(u) + 1;
        }
        if (options.packing_bound)
            build_packing();
        else
            packing_owner_.assign(static_cast<std::size_t>(n_), -1);
        bound_ = -n_;
        if (options.packing_bound) {
            bound_ = 0;
            for (Vertex v = 0; v < n_; ++v)
                if (packing_owner_[v] < 0)
                    bound_ -= 1;
            for (Vertex p : packing_)
                bound_ += packing_term(p);
        }
    }

    void seed(const Labeling& labeling, long long w) {
        best_ = w;
        best_labeling_ = labeling;
    }

    void run() { dfs(0); }

    long long best() const noexcept { return best_; }
    const Labeling& best_labeling() const noexcept { return best_labeling_; }
    std::uint64_t explored() const noexcept { return nodes_; }
    bool timed_out() const noexcept { return timed_out_; }

  private:
    // Greedy vertex packing with pairwise disjoint closed neighbourhoods. Each
    // packed closed neighbourhood sums to at least 1; every other vertex is -1 or more.
    void build_packing() {
        packing_owner_.assign(static_cast<std::size_t>(n_), -1);
        std::vector<Vertex> by_size(static_cast<std::size_t>(n_));
        std::iota(by_size.begin(), by_size.end(), 0);
        std::stable_sort(by_size.begin(), by_size.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
        for (Vertex u : by_size) {
            bool free = packing_owner_[u] < 0;
            for (Vertex v : g_.neighbours(u))
                free = free && packing_owner_[v] < 0;
            if (!free)
                continue;
            packing_.push_back(u);
            packing_owner_[u] = u;
            for (Vertex v : g_.neighbours(u))
                packing_owner_[v] = u;
        }
    }

    long long packing_term(Vertex p) const {
        return std::max<long long>(1, closed_sum_[p] - closed_free_[p]);
    }

    void apply(Vertex v, int l, int sign) {
        // sign = +1 assigns label l to v, -1 removes it.
        const Vertex owner = packing_owner_[v];
        long long before = 0;
        if (owner >= 0)
            before = packing_term(owner);
        label_[v] = sign > 0 ? l : 0;
        partial_ += sign * l;
        closed_sum_[v] += sign * l;
        closed_free_[v] -= sign;
        for (Vertex u : g_.neighbours(v)) {
            closed_sum_[u] += sign * l;
            closed_free_[u] -= sign;
            open_free_[u] -= sign;
            if (l == 2)
                open_twos_[u] += sign;
        }
        if (owner >= 0)
            bound_ += packing_term(owner) - before;
        else if (options_.packing_bound)
            bound_ += sign * (l + 1);
    }

    bool locally_consistent(Vertex u) const {
        // (a)/(b): even all-2 completions cannot lift the labelsum to 1.
        if (closed_sum_[u] + 2 * closed_free_[u] < 1)
            return false;
        // (c): a -1 vertex whose neighbours are all fixed without a 2.
        if (label_[u] == -1 && open_free_[u] == 0 && open_twos_[u] == 0)
            return false;
        return true;
    }

    bool consistent_around(Vertex v) const {
        if (!locally_consistent(v))
            return false;
        for (Vertex u : g_.neighbours(v))
            if (!locally_consistent(u))
                return false;
        return true;
    }

    bool out_of_time() {
        if (timed_out_)
            return true;
        if ((nodes_ & 0xfff) == 0 && Clock::now() >= deadline_)
            timed_out_ = true;
        return timed_out_;
    }

    bool stop_requested() const { return options_.stop_at && best_ <= *options_.stop_at; }

    void dfs(std::size_t depth) {
        ++nodes_;
        if (out_of_time() || stop_requested())
            return;
        if (depth == order_.size()) {
            if (partial_ < best_) {
                best_ = partial_;
                best_labeling_.resize(static_cast<std::size_t>(n_));
                for (Vertex u = 0; u < n_; ++u)
                    best_labeling_[u] = label_from_int(label_[u]);
            }
            return;
        }
        const auto remaining = static_cast<long long>(order_.size() - depth);
        // (d): every remaining vertex contributes at least -1.
        if (partial_ - remaining >= best_)
            return;
        if (options_.packing_bound && bound_ >= best_)
            return;

        const Vertex v = order_[depth];
        for (int l : {2, 1, -1}) {
            apply(v, l, +1);
            if (consistent_around(v))
                dfs(depth + 1);
            apply(v, l, -1);
            if (timed_out_ || stop_requested())
                return;
        }
    }

    const Graph& g_;
    Vertex n_;
    const BranchAndBoundOptions& options_;
    Clock::time_point deadline_;

    std::vector<Vertex> order_;
    std::vector<int> label_;
    std::vector<int> closed_sum_;
    std::vector<int> closed_free_;
    std::vector<int> open_free_;
    std::vector<int> open_twos_;
    std::vector<Vertex> packing_;
    std::vector<Vertex> packing_owner_;
    long long partial_ = 0;
    long long bound_ = 0;

    long long best_ = std::numeric_limits<long long>::max();
    Labeling best_labeling_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

SolveResult solve_bb_connected(const Graph& g, const BranchAndBoundOptions& options, const Incumbent& start,
                               Clock::time_point deadline) {
    BranchAndBound search(g, options, deadline);
    search.seed(start.labeling, start.weight);
    search.run();
    SolveResult r;
    r.algo = Algo::BranchAndBound;
    r.optimum = search.best();
    r.witness = search.best_labeling();
    r.explored = search.explored();
    r.certified = !search.timed_out();
    return r;
}

}  // namespace

SolveResult solve_bb(const Graph& g, const BranchAndBoundOptions& options) {
    const auto deadline = Clock::now() + options.budget;
    Incumbent start{uniform_labeling(g.order(), Label::One), g.order()};
    if (options.initial) {
        if (static_cast<Vertex>(options.initial->labeling.size()) != g.order() ||
            !is_valid_srdf(g, options.initial->labeling).valid() ||
            weight(options.initial->labeling) != options.initial->weight)
            throw PreconditionError("initial incumbent is not a valid labeling of the stated weight");
        if (options.initial->weight < start.weight)
            start = *options.initial;
    }

    auto components = connected_components(g);
    if (!options.split_components || options.stop_at || components.size() <= 1)
        return solve_bb_connected(g, options, start, deadline);

    SolveResult total;
    total.algo = Algo::BranchAndBound;
    total.witness.assign(static_cast<std::size_t>(g.order()), Label::One);
    for (const auto& comp : components) {
        Graph sub = induced_subgraph(g, comp);
        Incumbent local;
        for (Vertex v : comp)
            local.labeling.push_back(start.labeling[v]);
        local.weight = weight(local.labeling);
        SolveResult part = solve_bb_connected(sub, options, local, deadline);
        total.optimum += part.optimum;
        total.explored += part.explored;
        total.certified = total.certified && part.certified;
        for (std::size_t i = 0; i < comp.size(); ++i)
            total.witness[comp[i]] = part.witness[i];
    }
    return total;
}

// ---------------------------------------------------------------------------

bool decide(const Graph& g, long long k, Algo algo, const DecideOptions& options) {
    if (k >= g.order())
        return true;
    switch (algo) {
    case Algo::Brute:
        return solve_brute(g, options.brute).optimum <= k;
    case Algo::NdIlp: {
        NdOptions nd;
        nd.budget = options.budget;
        const auto r = solve_nd(g, nd);
        if (!r.certified && r.optimum > k)
            throw SolverTimeout("nd-ilp search ran out of budget");
        return r.optimum <= k;
    }
    case Algo::BranchAndBound: {
        BranchAndBoundOptions bb;
        bb.budget = options.budget;
        bb.initial = options.incumbent;
        bb.stop_at = k;
        const auto r = solve_bb(g, bb);
        if (r.optimum <= k)
            return true;
        if (!r.certified)
            throw SolverTimeout("branch-and-bound ran out of budget");
        return false;
    }
    }
    throw PreconditionError("unknown algorithm");
}

}  // namespace srd
