// AVX2 variants of the byte-scan kernels. Compiled with -mavx2 and selected
// at runtime only when the CPU reports AVX2.

#include "testscan/kernels.hpp"

#include "scan_common.hpp"

#include <immintrin.h>

namespace testscan::kernels {

namespace {

using namespace detail;

inline __m256i lower32(__m256i v) { return _mm256_or_si256(v, _mm256_set1_epi8(0x20)); }

std::size_t avx2_count_test_words(const char* data, std::size_t size) {
    if (size < 4) return 0;
    std::size_t count = 0;
    std::size_t i = 0;

    const __m256i t = _mm256_set1_epi8('t');
    const __m256i e = _mm256_set1_epi8('e');
    const __m256i s = _mm256_set1_epi8('s');

    // A block tests candidate starts i..i+31 and reads up to i+34.
    while (i + 35 <= size) {
        const __m256i v0 = lower32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i)));
        const __m256i v1 = lower32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 1)));
        const __m256i v2 = lower32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 2)));
        const __m256i v3 = lower32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i + 3)));

        __m256i hit = _mm256_and_si256(_mm256_cmpeq_epi8(v0, t), _mm256_cmpeq_epi8(v1, e));
        hit = _mm256_and_si256(hit, _mm256_cmpeq_epi8(v2, s));
        hit = _mm256_and_si256(hit, _mm256_cmpeq_epi8(v3, t));

        auto mask = static_cast<unsigned>(_mm256_movemask_epi8(hit));
        while (mask != 0) {
            const unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
            const std::size_t pos = i + bit;
            if (candidate_at(data, pos) && verify_candidate(data, size, pos)) ++count;
            mask &= mask - 1;
        }
        i += 32;
    }

    for (; i + 4 <= size; ++i) {
        if (candidate_at(data, i) && verify_candidate(data, size, i)) ++count;
    }
    return count;
}

std::size_t avx2_count_nonblank_lines(const char* data, std::size_t size) {
    std::size_t count = 0;
    bool has_content = false;
    std::size_t i = 0;

    const __m256i nl = _mm256_set1_epi8('\n');
    const __m256i sp = _mm256_set1_epi8(' ');
    const __m256i tab = _mm256_set1_epi8('\t');
    const __m256i cr = _mm256_set1_epi8('\r');
    const __m256i vt = _mm256_set1_epi8('\v');
    const __m256i ff = _mm256_set1_epi8('\f');

    for (; i + 32 <= size; i += 32) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
        const __m256i is_nl = _mm256_cmpeq_epi8(v, nl);
        __m256i blank = _mm256_or_si256(_mm256_cmpeq_epi8(v, sp), _mm256_cmpeq_epi8(v, tab));
        blank = _mm256_or_si256(blank, _mm256_cmpeq_epi8(v, cr));
        blank = _mm256_or_si256(blank, _mm256_cmpeq_epi8(v, vt));
        blank = _mm256_or_si256(blank, _mm256_cmpeq_epi8(v, ff));
        blank = _mm256_or_si256(blank, is_nl);

        auto nl_mask = static_cast<unsigned>(_mm256_movemask_epi8(is_nl));
        auto content = static_cast<unsigned>(_mm256_movemask_epi8(blank)) ^ 0xFFFFFFFFu;

        if (nl_mask == 0) {
            has_content = has_content || content != 0;
            continue;
        }
        while (nl_mask != 0) {
            const unsigned p = static_cast<unsigned>(__builtin_ctz(nl_mask));
            const unsigned below = (p == 0) ? 0u : (content & ((1u << p) - 1u));
            if (has_content || below != 0) ++count;
            has_content = false;
            content &= (p == 31) ? 0u : ~((1u << (p + 1)) - 1u);
            nl_mask &= nl_mask - 1;
        }
        has_content = content != 0;
    }

    for (; i < size; ++i) {
        const auto c = static_cast<unsigned char>(data[i]);
        if (c == '\n') {
            if (has_content) ++count;
            has_content = false;
        } else if (!is_blank_byte(c)) {
            has_content = true;
        }
    }
    if (has_content) ++count;
    return count;
}

} // namespace

const Variant& avx2_variant() {
    static const Variant v{"avx2", &avx2_count_test_words, &avx2_count_nonblank_lines};
    return v;
}

} // namespace testscan::kernels
