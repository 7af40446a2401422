// NEON variants of the byte-scan kernels (aarch64 baseline).

#include "testscan/kernels.hpp"

#include "scan_common.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

namespace testscan::kernels {

namespace {

using namespace detail;

// Narrow a byte-wise compare result to a 64-bit mask with one nibble per
// lane (0x0 or 0xF).
inline uint64_t nibble_mask(uint8x16_t eq) {
    const uint8x8_t narrowed = vshrn_n_u16(vreinterpretq_u16_u8(eq), 4);
    return vget_lane_u64(vreinterpret_u64_u8(narrowed), 0);
}

inline uint8x16_t lower16(uint8x16_t v) { return vorrq_u8(v, vdupq_n_u8(0x20)); }

std::size_t neon_count_test_words(const char* data, std::size_t size) {
    if (size < 4) return 0;
    std::size_t count = 0;
    std::size_t i = 0;

    const uint8x16_t t = vdupq_n_u8('t');
    const uint8x16_t e = vdupq_n_u8('e');
    const uint8x16_t s = vdupq_n_u8('s');

    // A block tests candidate starts i..i+15 and reads up to i+18.
    while (i + 19 <= size) {
        const auto* p = reinterpret_cast<const uint8_t*>(data + i);
        const uint8x16_t v0 = lower16(vld1q_u8(p));
        const uint8x16_t v1 = lower16(vld1q_u8(p + 1));
        const uint8x16_t v2 = lower16(vld1q_u8(p + 2));
        const uint8x16_t v3 = lower16(vld1q_u8(p + 3));

        uint8x16_t hit = vandq_u8(vceqq_u8(v0, t), vceqq_u8(v1, e));
        hit = vandq_u8(hit, vceqq_u8(v2, s));
        hit = vandq_u8(hit, vceqq_u8(v3, t));

        uint64_t mask = nibble_mask(hit);
        while (mask != 0) {
            const unsigned lane = static_cast<unsigned>(__builtin_ctzll(mask)) / 4;
            const std::size_t pos = i + lane;
            if (candidate_at(data, pos) && verify_candidate(data, size, pos)) ++count;
            mask &= ~(0xFull << (lane * 4));
        }
        i += 16;
    }

    for (; i + 4 <= size; ++i) {
        if (candidate_at(data, i) && verify_candidate(data, size, i)) ++count;
    }
    return count;
}

std::size_t neon_count_nonblank_lines(const char* data, std::size_t size) {
    std::size_t count = 0;
    bool has_content = false;
    std::size_t i = 0;

    const uint8x16_t nl = vdupq_n_u8('\n');
    const uint8x16_t sp = vdupq_n_u8(' ');
    const uint8x16_t tab = vdupq_n_u8('\t');
    const uint8x16_t cr = vdupq_n_u8('\r');
    const uint8x16_t vt = vdupq_n_u8('\v');
    const uint8x16_t ff = vdupq_n_u8('\f');

    for (; i + 16 <= size; i += 16) {
        const uint8x16_t v = vld1q_u8(reinterpret_cast<const uint8_t*>(data + i));
        const uint8x16_t is_nl = vceqq_u8(v, nl);
        uint8x16_t blank = vorrq_u8(vceqq_u8(v, sp), vceqq_u8(v, tab));
        blank = vorrq_u8(blank, vceqq_u8(v, cr));
        blank = vorrq_u8(blank, vceqq_u8(v, vt));
        blank = vorrq_u8(blank, vceqq_u8(v, ff));
        blank = vorrq_u8(blank, is_nl);

        uint64_t nl_mask = nibble_mask(is_nl);
        uint64_t content = ~nibble_mask(blank);

        if (nl_mask == 0) {
            has_content = has_content || content != 0;
            continue;
        }
        while (nl_mask != 0) {
            const unsigned lane = static_cast<unsigned>(__builtin_ctzll(nl_mask)) / 4;
            const uint64_t below_bits =
                (lane == 0) ? 0 : (content & ((1ull << (lane * 4)) - 1));
            if (has_content || below_bits != 0) ++count;
            has_content = false;
            content &= (lane == 15) ? 0 : ~((1ull << ((lane + 1) * 4)) - 1);
            nl_mask &= ~(0xFull << (lane * 4));
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

const Variant& neon_variant() {
    static const Variant v{"neon", &neon_count_test_words, &neon_count_nonblank_lines};
    return v;
}

} // namespace testscan::kernels

#endif
