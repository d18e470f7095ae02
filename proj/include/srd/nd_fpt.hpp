#pragma once

// Exact solver parameterized by neighbourhood diversity.
//
// Vertices of one type class are interchangeable, so an optimal labeling is
// described by (i) which labels occur in each class and (ii) each class's
// label total. The solver enumerates (i), checks the -1-needs-a-2 condition
// at class level, then minimizes the class totals subject to the labelsum
// constraints, which only see class totals.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "srd/graph.hpp"
#include "srd/solvers.hpp"
#include "srd/srdf.hpp"

namespace srd {

enum class ClassKind { Clique, Independent };

struct NdPartition {
    std::vector<std::vector<Vertex>> classes;
    std::vector<ClassKind> kind;
    /// adjacent[i][j] (i != j): every cross pair is an edge; otherwise none is.
    std::vector<std::vector<char>> adjacent;
    /// class index of each vertex
    std::vector<int> class_of;

    int type_count() const noexcept { return static_cast<int>(classes.size()); }
    int class_size(int i) const { return static_cast<int>(classes[static_cast<std::size_t>(i)].size()); }
};

/// u and v have the same type: N(u) \ {v} == N(v) \ {u}.
bool same_type(const Graph& g, Vertex u, Vertex v);

/// Coarsest type partition; classes ordered by smallest vertex. Singleton
/// classes are reported as Independent.
NdPartition nd_partition(const Graph& g);

/// Which labels occur in a class.
struct LabelPresence {
    bool minus = false;
    bool one = false;
    bool two = false;

    int count() const noexcept { return int{minus} + int{one} + int{two}; }
    /// 3-bit code minus*4 + one*2 + two.
    int code() const noexcept { return (minus ? 4 : 0) | (one ? 2 : 0) | (two ? 1 : 0); }
    static LabelPresence from_code(int code) { return {(code & 4) != 0, (code & 2) != 0, (code & 1) != 0}; }

    friend bool operator==(const LabelPresence&, const LabelPresence&) = default;
};

using GuessVector = std::vector<LabelPresence>;

/// All class totals -p + q + 2r with p + q + r == size where exactly the
/// labels flagged present occur. Sorted ascending.
std::vector<int> achievable_weights(int size, LabelPresence flags);

/// Streams every guess with no empty class and no class flagging more labels
/// than it has vertices. Order: class 0 varies slowest, codes ascending.
class GuessStream {
  public:
    explicit GuessStream(const NdPartition& p);
    std::optional<GuessVector> next();

  private:
    std::vector<std::vector<int>> codes_;
    std::vector<std::size_t> cursor_;
    bool done_ = false;
};

std::vector<GuessVector> enumerate_guesses(const NdPartition& p);

/// Every class containing a -1 sees a 2: in an adjacent class, or inside
/// the class itself when it is a clique.
bool check_guess_feasible(const NdPartition& p, const GuessVector& gv);

struct GuessSolution {
    std::vector<int> weights;
    long long total = 0;
};

/// Minimizes the sum of class totals under the guess. With `cutoff`, only
/// solutions strictly below it are reported. Absent when infeasible.
std::optional<GuessSolution> solve_guess_ilp(const NdPartition& p, const GuessVector& gv,
                                             std::optional<long long> cutoff = {},
                                             std::uint64_t* nodes = nullptr);

/// Counts (p, q, r) for one class: smallest p first, then smallest r.
struct LabelCounts {
    int minus = 0;
    int one = 0;
    int two = 0;
};
std::optional<LabelCounts> realize_counts(int size, LabelPresence flags, int weight);

/// Labels each class with its chosen total: -1s on its lowest vertices,
/// then 1s, then 2s.
Labeling realize_labeling(const NdPartition& p, const GuessVector& gv, const std::vector<int>& weights);

struct NdOptions {
    std::chrono::milliseconds budget{60'000};
    /// Solve every guess from GuessStream instead of the pruned guess search.
    bool exhaustive_guesses = false;
};

SolveResult solve_nd(const Graph& g, const NdOptions& options = {});

}  // namespace srd
