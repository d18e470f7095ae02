#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "srd/graph.hpp"
#include "srd/srdf.hpp"

namespace srd {

enum class Algo { Brute, BranchAndBound, NdIlp };

std::string_view algo_name(Algo a);
std::optional<Algo> algo_from_name(std::string_view name);

/// Outcome of an exact solve. When `certified` is false the search ran out of
/// budget and `optimum` is only an upper bound (the best labeling found).
struct SolveResult {
    long long optimum = 0;
    Labeling witness;
    std::uint64_t explored = 0;
    Algo algo = Algo::Brute;
    bool certified = true;
};

class CapExceeded : public Error {
  public:
    using Error::Error;
};

class SolverTimeout : public Error {
  public:
    using Error::Error;
};

struct BruteOptions {
    Vertex cap = 14;
};

/// Exhaustive search over all 3^n labelings. Returns the lexicographically
/// smallest optimal labeling under -1 < 1 < 2 (vertex 0 most significant).
/// Throws CapExceeded when n > cap (and never accepts more than 64 vertices).
SolveResult solve_brute(const Graph& g, const BruteOptions& options = {});

struct Incumbent {
    Labeling labeling;
    long long weight = 0;
};

struct BranchAndBoundOptions {
    /// Must be a valid SRDF of the stated weight; defaults to all-1.
    std::optional<Incumbent> initial;
    std::chrono::milliseconds budget{60'000};
    /// Stop as soon as a labeling of weight <= stop_at is known.
    std::optional<long long> stop_at;
    /// Solve connected components separately.
    bool split_components = true;
    /// Add the closed-neighbourhood packing bound to the trivial -1 bound.
    bool packing_bound = true;
};

/// Depth-first branch-and-bound over vertices in decreasing-degree order,
/// trying labels 2, 1, -1 at each vertex.
SolveResult solve_bb(const Graph& g, const BranchAndBoundOptions& options = {});

struct DecideOptions {
    BruteOptions brute;
    std::chrono::milliseconds budget{60'000};
    std::optional<Incumbent> incumbent;
};

/// gamma_sR(g) <= k. Throws SolverTimeout when the chosen solver cannot
/// settle the question within budget.
bool decide(const Graph& g, long long k, Algo algo, const DecideOptions& options = {});

}  // namespace srd
