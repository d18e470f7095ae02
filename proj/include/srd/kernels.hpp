#pragma once

// Bit-parallel evaluation of a labeling on graphs with at most 64 vertices.
//
// A labeling is carried as three disjoint vertex masks. Closed neighbourhoods
// are one mask per vertex (bit u set in closed[u]). Every variant computes
// exactly the same results; the scalar one is the reference.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "srd/graph.hpp"
#include "srd/srdf.hpp"

namespace srd::kernels {

inline constexpr Vertex kMaxMaskVertices = 64;

struct MaskLabeling {
    std::uint64_t minus = 0;
    std::uint64_t one = 0;
    std::uint64_t two = 0;
};

struct KernelTable {
    std::string_view name;
    /// True iff every vertex has labelsum >= 1 and every -1 vertex has a 2 neighbour.
    bool (*is_srdf)(std::span<const std::uint64_t> closed, MaskLabeling f);
    /// Writes labelsum(u) for every u into out (out.size() >= closed.size()).
    void (*labelsums)(std::span<const std::uint64_t> closed, MaskLabeling f, std::span<std::int32_t> out);
};

const KernelTable& scalar_kernels();

/// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

/// Best variant the running CPU supports. SRD_FORCE_SCALAR=1 pins the scalar one.
const KernelTable& active_kernels();

/// Closed-neighbourhood masks; requires g.order() <= 64.
std::vector<std::uint64_t> closed_masks(const Graph& g);

MaskLabeling to_masks(const Labeling& f);
Labeling from_masks(MaskLabeling f, Vertex n);

}  // namespace srd::kernels
