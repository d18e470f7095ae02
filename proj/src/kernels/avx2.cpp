#include "srd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <algorithm>

namespace srd::kernels {
namespace {

// Per-lane popcount of four 64-bit words: nibble lookup, then byte sums.
inline __m256i popcount_epi64(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

struct Block {
    __m256i sum;
    __m256i twos;
    __m256i self;
    int lanes;
};

inline Block evaluate_block(std::span<const std::uint64_t> closed, std::size_t base, __m256i minus, __m256i one,
                            __m256i two) {
    alignas(32) std::uint64_t nb[4] = {0, 0, 0, 0};
    alignas(32) std::uint64_t self[4] = {0, 0, 0, 0};
    const int lanes = static_cast<int>(std::min<std::size_t>(4, closed.size() - base));
    for (int i = 0; i < lanes; ++i) {
        nb[i] = closed[base + static_cast<std::size_t>(i)];
        self[i] = std::uint64_t{1} << (base + static_cast<std::size_t>(i));
    }
    const __m256i vnb = _mm256_load_si256(reinterpret_cast<const __m256i*>(nb));
    const __m256i c1 = popcount_epi64(_mm256_and_si256(vnb, one));
    const __m256i c2 = popcount_epi64(_mm256_and_si256(vnb, two));
    const __m256i cm = popcount_epi64(_mm256_and_si256(vnb, minus));
    const __m256i sum = _mm256_sub_epi64(_mm256_add_epi64(c1, _mm256_slli_epi64(c2, 1)), cm);
    return {sum, c2, _mm256_load_si256(reinterpret_cast<const __m256i*>(self)), lanes};
}

bool is_srdf_avx2(std::span<const std::uint64_t> closed, MaskLabeling f) {
    const __m256i minus = _mm256_set1_epi64x(static_cast<long long>(f.minus));
    const __m256i one = _mm256_set1_epi64x(static_cast<long long>(f.one));
    const __m256i two = _mm256_set1_epi64x(static_cast<long long>(f.two));
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi64x(1);
    for (std::size_t base = 0; base < closed.size(); base += 4) {
        const Block b = evaluate_block(closed, base, minus, one, two);
        const __m256i low_sum = _mm256_cmpgt_epi64(ones, b.sum);
        const __m256i not_minus = _mm256_cmpeq_epi64(_mm256_and_si256(b.self, minus), zero);
        const __m256i no_two = _mm256_cmpeq_epi64(b.twos, zero);
        const __m256i bad = _mm256_or_si256(low_sum, _mm256_andnot_si256(not_minus, no_two));
        const int lane_mask = (1 << b.lanes) - 1;
        if (_mm256_movemask_pd(_mm256_castsi256_pd(bad)) & lane_mask)
            return false;
    }
    return true;
}

void labelsums_avx2(std::span<const std::uint64_t> closed, MaskLabeling f, std::span<std::int32_t> out) {
    const __m256i minus = _mm256_set1_epi64x(static_cast<long long>(f.minus));
    const __m256i one = _mm256_set1_epi64x(static_cast<long long>(f.one));
    const __m256i two = _mm256_set1_epi64x(static_cast<long long>(f.two));
    for (std::size_t base = 0; base < closed.size(); base += 4) {
        const Block b = evaluate_block(closed, base, minus, one, two);
        alignas(32) std::int64_t sums[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(sums), b.sum);
        for (int i = 0; i < b.lanes; ++i)
            out[base + static_cast<std::size_t>(i)] = static_cast<std::int32_t>(sums[i]);
    }
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", &is_srdf_avx2, &labelsums_avx2};
    return &table;
}

}  // namespace srd::kernels

#else

namespace srd::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace srd::kernels

#endif
