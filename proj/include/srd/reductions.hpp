#pragma once

// Hardness constructions: each maps a source instance to a graph G' and a
// target weight k' such that the source is a yes-instance iff G' has an SRDF
// of weight at most k'. Every reduced vertex carries a role (set tag plus
// indices) so labelings can be described and inspected per set.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "srd/graph.hpp"
#include "srd/srdf.hpp"

namespace srd {

struct Role {
    std::string tag;
    std::vector<int> index;

    friend bool operator==(const Role&, const Role&) = default;
};

/// One role per vertex of the reduced graph.
using VertexRoleMap = std::vector<Role>;

struct FeedbackVertexSet {
    std::vector<Vertex> vertices;
};

struct VertexCover {
    std::vector<Vertex> vertices;
};

using ClassWitness = std::variant<std::monostate, SplitPartition, Bipartition, FeedbackVertexSet, VertexCover>;

/// Minimum relevant subset sum: pick at most m of the vectors so that their
/// coordinatewise sum reaches target.
struct MrssInstance {
    int k = 0;
    int m = 0;
    std::vector<std::vector<int>> vectors;
    std::vector<int> target;
};

/// Red-blue dominating set: pick at most k vertices of X dominating all of Y.
struct RbdsInstance {
    int x_count = 0;
    int y_count = 0;
    /// (x, y) pairs, 0-based per side
    std::vector<std::pair<int, int>> edges;
    int k = 0;
};

/// Throws PreconditionError on length mismatches or negative entries.
void validate(const MrssInstance& inst);
/// Throws PreconditionError on out-of-range or repeated edges.
void validate(const RbdsInstance& inst);

struct DsSource {
    Graph graph;
    long long k = 0;
};

using ReductionSource = std::variant<DsSource, MrssInstance, RbdsInstance>;

enum class ReductionKind { DsToSplit, DsToGadget, MrssToFvs, RbdsToVc };

std::string_view reduction_name(ReductionKind kind);

struct ReductionOutput {
    ReductionKind kind = ReductionKind::DsToSplit;
    Graph graph;
    long long k_prime = 0;
    VertexRoleMap roles;
    ClassWitness witness;
    ReductionSource source;

    /// Vertices whose role tag equals `tag`, ascending.
    std::vector<Vertex> with_tag(std::string_view tag) const;
};

/// Checks the structure witness against the graph. False when absent.
bool witness_validates(const ReductionOutput& out);

// --- dominating set on cubic graphs -> split graphs -----------------------

/// Copies A, B, C, D, X of V(g) plus E, Y, Z of size ceil((2n-k+4)/2).
/// Requires g cubic and 1 <= k <= n. k' = k - 3n.
ReductionOutput reduce_ds_cubic_to_split(const Graph& g, long long k);

/// E and a_i for u_i in S get 2, other a_i get 1, everything else -1.
/// Requires S dominating with |S| <= k.
Labeling forward_label_split(const ReductionOutput& out, const std::vector<Vertex>& S);

// --- dominating set -> gadget graph ---------------------------------------

/// Per vertex v: d(v)+1 paths x-y-z hanging off v, two pendants on each z,
/// two pendants on y_1 and one on every other y. k' = k.
/// Requires 1 <= k <= n and no isolated vertex.
ReductionOutput reduce_ds_gadget(const Graph& g, long long k);

/// x and pendants -1, y and z 2, S 2, V \ S 1.
Labeling forward_label_gadget(const ReductionOutput& out, const std::vector<Vertex>& S);

// --- minimum relevant subset sum -> bounded feedback vertex set ----------

/// Requires every target entry >= 1 and every vector nonzero. u_j is joined
/// to the first s_i(j) vertices of C_i.
ReductionOutput reduce_mrss_to_fvs(const MrssInstance& inst);

/// Requires S' (vector indices) to be a solution of the source instance.
Labeling forward_label_mrss(const ReductionOutput& out, const std::vector<int>& S_prime);

/// The same case table for any index set, without checking it.
Labeling forward_label_mrss_table(const ReductionOutput& out, const std::vector<int>& S_prime);

// --- red-blue dominating set -> bounded vertex cover ---------------------

/// X1, X2, X3 copies of X, Y1, Y2 copies of Y, three pendants per Y copy.
/// k' = -2|Y| - |X| + 4k. Requires no isolated X or Y and 1 <= k <= |X|.
ReductionOutput reduce_rbds_to_vc(const RbdsInstance& inst);

/// Y copies 2, X2 1, X1/X3 copies 1 for S and -1 otherwise, pendants -1.
Labeling forward_label_rbds(const ReductionOutput& out, const std::vector<int>& S);

// --- source oracles --------------------------------------------------------

/// Smallest dominating set (lexicographically first among the smallest) when
/// its size is at most k. n <= 20.
std::optional<std::vector<Vertex>> oracle_ds(const Graph& g, long long k);

/// Every dominating set of size at most k, by size then lexicographically.
std::vector<std::vector<Vertex>> all_dominating_sets(const Graph& g, long long k);

/// Smallest S' (by size, then lexicographically) with |S'| <= m. n <= 20.
std::optional<std::vector<int>> oracle_mrss(const MrssInstance& inst);

bool is_mrss_solution(const MrssInstance& inst, const std::vector<int>& S_prime);

/// Smallest X-subset dominating Y when its size is at most k. |X| <= 20.
std::optional<std::vector<int>> oracle_rbds(const RbdsInstance& inst);

/// Every X-subset of size at most k dominating Y.
std::vector<std::vector<int>> all_rbds_solutions(const RbdsInstance& inst);

bool is_rbds_solution(const RbdsInstance& inst, const std::vector<int>& S);

}  // namespace srd
