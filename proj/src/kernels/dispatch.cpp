#include <cstdlib>
#include <string_view>

#include "srd/kernels.hpp"

namespace srd::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& select() {
    if (const char* env = std::getenv("SRD_FORCE_SCALAR"); env && std::string_view(env) == "1")
        return scalar_kernels();
    if (const KernelTable* simd = avx2_kernels(); simd && cpu_has_avx2())
        return *simd;
    return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
    static const KernelTable& table = select();
    return table;
}

std::vector<std::uint64_t> closed_masks(const Graph& g) {
    if (g.order() > kMaxMaskVertices)
        throw PreconditionError("mask kernels support at most 64 vertices");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(g.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        std::uint64_t m = std::uint64_t{1} << u;
        for (Vertex v : g.neighbours(u))
            m |= std::uint64_t{1} << v;
        out[u] = m;
    }
    return out;
}

MaskLabeling to_masks(const Labeling& f) {
    if (f.size() > static_cast<std::size_t>(kMaxMaskVertices))
        throw PreconditionError("mask kernels support at most 64 vertices");
    MaskLabeling m;
    for (std::size_t u = 0; u < f.size(); ++u) {
        const std::uint64_t bit = std::uint64_t{1} << u;
        switch (f[u]) {
        case Label::Minus: m.minus |= bit; break;
        case Label::One: m.one |= bit; break;
        case Label::Two: m.two |= bit; break;
        }
    }
    return m;
}

Labeling from_masks(MaskLabeling f, Vertex n) {
    Labeling out(static_cast<std::size_t>(n), Label::One);
    for (Vertex u = 0; u < n; ++u) {
        if (f.minus >> u & 1U)
            out[u] = Label::Minus;
        else if (f.two >> u & 1U)
            out[u] = Label::Two;
    }
    return out;
}

}  // namespace srd::kernels
