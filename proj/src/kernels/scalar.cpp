#include <bit>

#include "srd/kernels.hpp"

namespace srd::kernels {
namespace {

bool is_srdf_scalar(std::span<const std::uint64_t> closed, MaskLabeling f) {
    for (std::size_t u = 0; u < closed.size(); ++u) {
        const std::uint64_t nb = closed[u];
        const int sum = std::popcount(nb & f.one) + 2 * std::popcount(nb & f.two) - std::popcount(nb & f.minus);
        if (sum < 1)
            return false;
        // u itself is not labelled 2 when it is -1, so the closed mask suffices.
        if ((f.minus >> u & 1U) && (nb & f.two) == 0)
            return false;
    }
    return true;
}

void labelsums_scalar(std::span<const std::uint64_t> closed, MaskLabeling f, std::span<std::int32_t> out) {
    for (std::size_t u = 0; u < closed.size(); ++u) {
        const std::uint64_t nb = closed[u];
        out[u] = std::popcount(nb & f.one) + 2 * std::popcount(nb & f.two) - std::popcount(nb & f.minus);
    }
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", &is_srdf_scalar, &labelsums_scalar};
    return table;
}

}  // namespace srd::kernels
