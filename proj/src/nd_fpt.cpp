#include "srd/nd_fpt.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace srd {

bool same_type(const Graph& g, Vertex u, Vertex v) {
    auto a = g.neighbours(u);
    auto b = g.neighbours(v);
    std::size_t i = 0, j = 0;
    for (;;) {
        while (i < a.size() && a[i] == v)
            ++i;
        while (j < b.size() && b[j] == u)
            ++j;
        if (i == a.size() || j == b.size())
            return i == a.size() && j == b.size();
        if (a[i] != b[j])
            return false;
        ++i;
        ++j;
    }
}

NdPartition nd_partition(const Graph& g) {
    // Having the same type is an equivalence relation, so comparing against
    // one representative per class yields the coarsest partition.
    NdPartition p;
    p.class_of.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (std::size_t c = 0; c < p.classes.size(); ++c) {
            if (same_type(g, p.classes[c].front(), v)) {
                p.classes[c].push_back(v);
                p.class_of[v] = static_cast<int>(c);
                break;
            }
        }
        if (p.class_of[v] < 0) {
            p.class_of[v] = static_cast<int>(p.classes.size());
            p.classes.push_back({v});
        }
    }
    const std::size_t t = p.classes.size();
    p.kind.resize(t);
    p.adjacent.assign(t, std::vector<char>(t, 0));
    for (std::size_t i = 0; i < t; ++i) {
        const auto& cls = p.classes[i];
        p.kind[i] = cls.size() >= 2 && g.adjacent(cls[0], cls[1]) ? ClassKind::Clique : ClassKind::Independent;
        for (std::size_t j = 0; j < t; ++j)
            if (i != j)
                p.adjacent[i][j] = g.adjacent(cls.front(), p.classes[j].front()) ? 1 : 0;
    }
    return p;
}

std::vector<int> achievable_weights(int size, LabelPresence flags) {
    if (flags.count() == 0 || flags.count() > size)
        throw PreconditionError("label presence must be nonempty and fit the class size");
    std::vector<int> out;
    for (int minus = flags.minus ? 1 : 0; minus <= (flags.minus ? size : 0); ++minus)
        for (int two = flags.two ? 1 : 0; two <= (flags.two ? size - minus : 0); ++two) {
            const int one = size - minus - two;
            if (flags.one ? one >= 1 : one == 0)
                out.push_back(-minus + one + 2 * two);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> codes_for_size(int size) {
    std::vector<int> codes;
    for (int code = 1; code <= 7; ++code)
        if (LabelPresence::from_code(code).count() <= size)
            codes.push_back(code);
    return codes;
}

}  // namespace

GuessStream::GuessStream(const NdPartition& p) {
    for (int i = 0; i < p.type_count(); ++i)
        codes_.push_back(codes_for_size(p.class_size(i)));
    cursor_.assign(codes_.size(), 0);
}

std::optional<GuessVector> GuessStream::next() {
    if (done_)
        return std::nullopt;
    GuessVector gv;
    for (std::size_t i = 0; i < codes_.size(); ++i)
        gv.push_back(LabelPresence::from_code(codes_[i][cursor_[i]]));
    std::size_t i = codes_.size();
    for (;;) {
        if (i == 0) {
            done_ = true;
            break;
        }
        --i;
        if (++cursor_[i] < codes_[i].size())
            break;
        cursor_[i] = 0;
    }
    return gv;
}

std::vector<GuessVector> enumerate_guesses(const NdPartition& p) {
    std::vector<GuessVector> out;
    GuessStream stream(p);
    while (auto gv = stream.next())
        out.push_back(std::move(*gv));
    return out;
}

bool check_guess_feasible(const NdPartition& p, const GuessVector& gv) {
    const int t = p.type_count();
    for (int i = 0; i < t; ++i) {
        if (!gv[i].minus)
            continue;
        bool sees_two = p.kind[i] == ClassKind::Clique && gv[i].two;
        for (int j = 0; j < t && !sees_two; ++j)
            sees_two = p.adjacent[i][j] && gv[j].two;
        if (!sees_two)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

/// Smallest label present in a class: what its worst-off vertex contributes.
int smallest_label(LabelPresence f) { return f.minus ? -1 : f.one ? 1 : 2; }

/// One labelsum constraint per class:  constant + sum of member totals >= 1.
/// Clique classes see their own total, independent classes their smallest label.
struct ClassConstraints {
    std::vector<std::vector<int>> members;
    std::vector<std::vector<int>> member_of;

    explicit ClassConstraints(const NdPartition& p) {
        const int t = p.type_count();
        members.resize(static_cast<std::size_t>(t));
        member_of.resize(static_cast<std::size_t>(t));
        for (int c = 0; c < t; ++c) {
            if (p.kind[c] == ClassKind::Clique)
                members[c].push_back(c);
            for (int j = 0; j < t; ++j)
                if (p.adjacent[c][j])
                    members[c].push_back(j);
            for (int j : members[c])
                member_of[j].push_back(c);
        }
    }
};

class GuessIlp {
  public:
    GuessIlp(const NdPartition& p, const GuessVector& gv, std::optional<long long> cutoff)
        : cons_(p), t_(p.type_count()) {
        domain_.resize(static_cast<std::size_t>(t_));
        for (int i = 0; i < t_; ++i)
            domain_[i] = achievable_weights(p.class_size(i), gv[i]);
        constant_.assign(static_cast<std::size_t>(t_), 0);
        for (int c = 0; c < t_; ++c)
            if (p.kind[c] == ClassKind::Independent)
                constant_[c] = smallest_label(gv[c]);
        decided_.assign(static_cast<std::size_t>(t_), 0);
        open_max_.assign(static_cast<std::size_t>(t_), 0);
        for (int c = 0; c < t_; ++c)
            for (int j : cons_.members[c])
                open_max_[c] += domain_[j].back();
        for (int i = 0; i < t_; ++i)
            open_min_ += domain_[i].front();

        // Most constrained (smallest domain) first.
        order_.resize(static_cast<std::size_t>(t_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return domain_[a].size() < domain_[b].size(); });
        chosen_.assign(static_cast<std::size_t>(t_), 0);
        best_ = cutoff.value_or(std::numeric_limits<long long>::max());
    }

    std::optional<GuessSolution> solve() {
        for (int c = 0; c < t_; ++c)
            if (constant_[c] + open_max_[c] < 1)
                return std::nullopt;
        dfs(0, 0);
        return found_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

  private:
    void dfs(std::size_t pos, long long current) {
        ++nodes_;
        if (pos == order_.size()) {
            if (current < best_) {
                best_ = current;
                found_ = GuessSolution{chosen_, current};
            }
            return;
        }
        const int x = order_[pos];
        const auto& dom = domain_[x];
        open_min_ -= dom.front();
        for (int w : dom) {
            if (current + w + open_min_ >= best_)
                break;
            bool ok = true;
            for (int c : cons_.member_of[x]) {
                decided_[c] += w;
                open_max_[c] -= dom.back();
                ok = ok && constant_[c] + decided_[c] + open_max_[c] >= 1;
            }
            if (ok) {
                chosen_[x] = w;
                dfs(pos + 1, current + w);
            }
            for (int c : cons_.member_of[x]) {
                decided_[c] -= w;
                open_max_[c] += dom.back();
            }
        }
        open_min_ += dom.front();
    }

    ClassConstraints cons_;
    int t_;
    std::vector<std::vector<int>> domain_;
    std::vector<long long> constant_;
    std::vector<long long> decided_;
    std::vector<long long> open_max_;
    long long open_min_ = 0;
    std::vector<int> order_;
    std::vector<int> chosen_;
    long long best_;
    std::optional<GuessSolution> found_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<GuessSolution> solve_guess_ilp(const NdPartition& p, const GuessVector& gv,
                                             std::optional<long long> cutoff, std::uint64_t* nodes) {
    if (static_cast<int>(gv.size()) != p.type_count())
        throw PreconditionError("guess vector does not match the partition");
    GuessIlp ilp(p, gv, cutoff);
    auto out = ilp.solve();
    if (nodes)
        *nodes += ilp.nodes();
    return out;
}

std::optional<LabelCounts> realize_counts(int size, LabelPresence flags, int weight) {
    for (int minus = flags.minus ? 1 : 0; minus <= (flags.minus ? size : 0); ++minus)
        for (int two = flags.two ? 1 : 0; two <= (flags.two ? size - minus : 0); ++two) {
            const int one = size - minus - two;
            if ((flags.one ? one >= 1 : one == 0) && -minus + one + 2 * two == weight)
                return LabelCounts{minus, one, two};
        }
    return std::nullopt;
}

Labeling realize_labeling(const NdPartition& p, const GuessVector& gv, const std::vector<int>& weights) {
    std::size_t n = 0;
    for (const auto& cls : p.classes)
        n += cls.size();
    Labeling f(n, Label::One);
    for (int i = 0; i < p.type_count(); ++i) {
        auto counts = realize_counts(p.class_size(i), gv[i], weights[i]);
        if (!counts)
            throw PreconditionError("class weight " + std::to_string(weights[i]) + " is not achievable for class " +
                                    std::to_string(i));
        const auto& cls = p.classes[i];
        std::size_t k = 0;
        for (int c = 0; c < counts->minus; ++c)
            f[cls[k++]] = Label::Minus;
        for (int c = 0; c < counts->one; ++c)
            f[cls[k++]] = Label::One;
        for (int c = 0; c < counts->two; ++c)
            f[cls[k++]] = Label::Two;
    }
    return f;
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

/// Guess enumeration with early rejection: a partial guess is dropped when the
/// cheapest completion cannot beat the incumbent, when some class constraint
/// cannot reach 1 even with the largest totals, or when a fully surrounded
/// class with a -1 sees no 2.
class GuessSearch {
  public:
    GuessSearch(const NdPartition& p, Clock::time_point deadline) : p_(p), cons_(p), t_(p.type_count()), deadline_(deadline) {
        codes_.resize(static_cast<std::size_t>(t_));
        lo_.resize(static_cast<std::size_t>(t_));
        hi_.resize(static_cast<std::size_t>(t_));
        for (int i = 0; i < t_; ++i) {
            for (int code : codes_for_size(p.class_size(i))) {
                const auto dom = achievable_weights(p.class_size(i), LabelPresence::from_code(code));
                codes_[i].push_back(code);
                lo_[i].push_back(dom.front());
                hi_[i].push_back(dom.back());
            }
            open_min_ -= p.class_size(i);
        }
        upper_.assign(static_cast<std::size_t>(t_), 0);
        for (int c = 0; c < t_; ++c) {
            // Undecided independent classes are assumed to contribute a 2.
            upper_[c] = p.kind[c] == ClassKind::Independent ? 2 : 0;
            for (int j : cons_.members[c])
                upper_[c] += 2 * p.class_size(j);
        }
        open_neighbours_.assign(static_cast<std::size_t>(t_), 0);
        for (int c = 0; c < t_; ++c)
            for (int j = 0; j < t_; ++j)
                open_neighbours_[c] += p.adjacent[c][j];

        order_.resize(static_cast<std::size_t>(t_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return closed_volume(a) > closed_volume(b);
        });
        decided_.assign(static_cast<std::size_t>(t_), 0);
        guess_.assign(static_cast<std::size_t>(t_), LabelPresence{});

        // Seed with the all-1 labeling.
        best_gv_.assign(static_cast<std::size_t>(t_), LabelPresence{false, true, false});
        for (int i = 0; i < t_; ++i) {
            best_weights_.push_back(p.class_size(i));
            best_ += p.class_size(i);
        }
    }

    void run() { dfs(0, 0); }

    long long best() const noexcept { return best_; }
    const GuessVector& best_guess() const noexcept { return best_gv_; }
    const std::vector<int>& best_weights() const noexcept { return best_weights_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    bool timed_out() const noexcept { return timed_out_; }

  private:
    int closed_volume(int c) const {
        int v = p_.class_size(c);
        for (int j = 0; j < t_; ++j)
            if (p_.adjacent[c][j])
                v += p_.class_size(j);
        return v;
    }

    bool sees_two(int c) const {
        if (p_.kind[c] == ClassKind::Clique && guess_[c].two)
            return true;
        for (int j = 0; j < t_; ++j)
            if (p_.adjacent[c][j] && decided_[j] && guess_[j].two)
                return true;
        return false;
    }

    bool minus_rule_holds(int x) const {
        auto settled = [&](int c) { return decided_[c] && open_neighbours_[c] == 0; };
        if (settled(x) && guess_[x].minus && !sees_two(x))
            return false;
        for (int c = 0; c < t_; ++c)
            if (p_.adjacent[x][c] && settled(c) && guess_[c].minus && !sees_two(c))
                return false;
        return true;
    }

    void set_class(int x, std::size_t k, int sign) {
        const int size = p_.class_size(x);
        const int delta = sign * (hi_[x][k] - 2 * size);
        for (int c : cons_.member_of[x])
            upper_[c] += delta;
        if (p_.kind[x] == ClassKind::Independent)
            upper_[x] += sign * (smallest_label(LabelPresence::from_code(codes_[x][k])) - 2);
        for (int c = 0; c < t_; ++c)
            if (p_.adjacent[x][c])
                open_neighbours_[c] -= sign;
        decided_[x] = sign > 0 ? 1 : 0;
        guess_[x] = sign > 0 ? LabelPresence::from_code(codes_[x][k]) : LabelPresence{};
        open_min_ += sign * (p_.class_size(x));
    }

    bool constraints_reachable(int x) const {
        if (upper_[x] < 1)
            return false;
        for (int c : cons_.member_of[x])
            if (upper_[c] < 1)
                return false;
        return true;
    }

    void dfs(std::size_t pos, long long lower) {
        ++nodes_;
        if (timed_out_ || ((nodes_ & 0x3ff) == 0 && Clock::now() >= deadline_)) {
            timed_out_ = true;
            return;
        }
        if (pos == order_.size()) {
            auto sol = solve_guess_ilp(p_, guess_, best_, &nodes_);
            if (sol) {
                best_ = sol->total;
                best_gv_ = guess_;
                best_weights_ = sol->weights;
            }
            return;
        }
        const int x = order_[pos];
        for (std::size_t k = 0; k < codes_[x].size(); ++k) {
            // open_min_ still counts x at its floor of -|V_x|.
            if (lower + lo_[x][k] + open_min_ + p_.class_size(x) >= best_)
                continue;
            set_class(x, k, +1);
            if (constraints_reachable(x) && minus_rule_holds(x))
                dfs(pos + 1, lower + lo_[x][k]);
            set_class(x, k, -1);
            if (timed_out_)
                return;
        }
    }

    const NdPartition& p_;
    ClassConstraints cons_;
    int t_;
    Clock::time_point deadline_;
    std::vector<std::vector<int>> codes_;
    std::vector<std::vector<int>> lo_, hi_;
    std::vector<long long> upper_;
    std::vector<int> open_neighbours_;
    std::vector<int> order_;
    std::vector<char> decided_;
    GuessVector guess_;
    long long open_min_ = 0;

    long long best_ = 0;
    GuessVector best_gv_;
    std::vector<int> best_weights_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

SolveResult solve_nd(const Graph& g, const NdOptions& options) {
    const auto deadline = Clock::now() + options.budget;
    const NdPartition p = nd_partition(g);

    SolveResult r;
    r.algo = Algo::NdIlp;
    GuessVector best_gv;
    std::vector<int> best_weights;

    if (options.exhaustive_guesses) {
        best_gv.assign(static_cast<std::size_t>(p.type_count()), LabelPresence{false, true, false});
        for (int i = 0; i < p.type_count(); ++i)
            best_weights.push_back(p.class_size(i));
        r.optimum = g.order();
        GuessStream stream(p);
        while (auto gv = stream.next()) {
            ++r.explored;
            if ((r.explored & 0x3ff) == 0 && Clock::now() >= deadline) {
                r.certified = false;
                break;
            }
            if (!check_guess_feasible(p, *gv))
                continue;
            if (auto sol = solve_guess_ilp(p, *gv, r.optimum, &r.explored)) {
                r.optimum = sol->total;
                best_gv = *gv;
                best_weights = sol->weights;
            }
        }
    } else {
        GuessSearch search(p, deadline);
        search.run();
        r.optimum = search.best();
        r.explored = search.nodes();
        r.certified = !search.timed_out();
        best_gv = search.best_guess();
        best_weights = search.best_weights();
    }

    r.witness = realize_labeling(p, best_gv, best_weights);
    if (!is_valid_srdf(g, r.witness).valid() || weight(r.witness) != r.optimum)
        throw Error("nd-ilp produced an inconsistent witness");
    return r;
}

}  // namespace srd
