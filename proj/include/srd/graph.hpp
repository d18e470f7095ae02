#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace srd {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a caller violates an operation's documented precondition.
class PreconditionError : public Error {
  public:
    using Error::Error;
};

enum class ParseErrorKind {
    MalformedHeader,
    MalformedLine,
    EdgeCountMismatch,
    EndpointOutOfRange,
    SelfLoop,
    DuplicateEdge,
};

class ParseError : public Error {
  public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

  private:
    ParseErrorKind kind_;
    std::size_t line_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are stored normalized (smaller endpoint first) and sorted; adjacency
/// lists are sorted ascending.
class Graph {
  public:
    Graph() = default;

    /// Throws PreconditionError on self-loops, duplicates or out-of-range endpoints.
    Graph(Vertex n, std::vector<Edge> edges);

    Vertex order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbours(Vertex u) const { return adj_[static_cast<std::size_t>(u)]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    int max_degree() const noexcept;
    int min_degree() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// --- text format -----------------------------------------------------------

/// Reads the "p n m" / "e u v" edge-list format (1-indexed, '#' comments).
Graph parse_graph(std::string_view text);

/// Canonical writer; parse_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g);

// --- generators ------------------------------------------------------------

enum class GraphKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Star,
    Wheel,
    RandomGnp,
    RandomCubic,
    RandomSplit,
    RandomTree,
};

std::optional<GraphKind> graph_kind_from_name(std::string_view name);
std::string_view graph_kind_name(GraphKind kind);

/// Partition used as a split-graph certificate.
struct SplitPartition {
    std::vector<Vertex> clique;
    std::vector<Vertex> independent;
};

/// Builds a graph of the requested family.
///
/// Parameters per kind:
///   path [n], cycle [n>=3], complete [n], complete_bipartite [a, b],
///   complete_multipartite [s1, s2, ...], star [leaves], wheel [rim>=3],
///   random_gnp [n, percent], random_cubic [even n>=4],
///   random_split [clique, independent, percent], random_tree [n].
/// Random kinds are deterministic for a given seed.
Graph generate(GraphKind kind, std::span<const int> params, std::optional<std::uint64_t> seed = {});

/// random_split together with the witness it was built from.
std::pair<Graph, SplitPartition> generate_random_split(int clique, int independent, int percent,
                                                       std::uint64_t seed);

// --- class validators ------------------------------------------------------

/// Throws PreconditionError when the witness does not partition V(g).
bool is_split(const Graph& g, const SplitPartition& witness);

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// Two-colouring by BFS, each component's smallest vertex on the left.
std::optional<Bipartition> is_bipartite(const Graph& g);
bool validates_bipartition(const Graph& g, const Bipartition& parts);

bool is_regular(const Graph& g, int r);

/// True when g minus `removed` has no cycle.
bool is_forest_after_removal(const Graph& g, std::span<const Vertex> removed);

/// True when every edge of g touches `cover`.
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace srd
