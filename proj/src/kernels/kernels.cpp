#include "testscan/kernels.hpp"

#include "scan_common.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

namespace testscan::kernels {

namespace {

using namespace detail;

std::size_t scalar_count_test_words(const char* data, std::size_t size) {
    if (size < 4) return 0;
    std::size_t count = 0;
    for (std::size_t i = 0; i + 4 <= size; ++i) {
        if (candidate_at(data, i) && verify_candidate(data, size, i)) ++count;
    }
    return count;
}

std::size_t scalar_count_nonblank_lines(const char* data, std::size_t size) {
    std::size_t count = 0;
    bool has_content = false;
    for (std::size_t i = 0; i < size; ++i) {
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

constexpr Variant kScalar{"scalar", &scalar_count_test_words, &scalar_count_nonblank_lines};

} // namespace

#if defined(TESTSCAN_HAVE_AVX2)
const Variant& avx2_variant(); // kernels_avx2.cpp
#endif
#if defined(TESTSCAN_HAVE_NEON)
const Variant& neon_variant(); // kernels_neon.cpp
#endif

const std::vector<Variant>& available_variants() {
    static const std::vector<Variant> variants = [] {
        std::vector<Variant> v;
#if defined(TESTSCAN_HAVE_AVX2)
        if (__builtin_cpu_supports("avx2")) v.push_back(avx2_variant());
#endif
#if defined(TESTSCAN_HAVE_NEON)
        v.push_back(neon_variant());
#endif
        v.push_back(kScalar);
        return v;
    }();
    return variants;
}

const Variant& active_variant() {
    static const Variant* selected = [] {
        const auto& all = available_variants();
        if (const char* wanted = std::getenv("TESTSCAN_KERNEL")) {
            for (const auto& v : all) {
                if (std::strcmp(v.name, wanted) == 0) return &v;
            }
        }
        return &all.front();
    }();
    return *selected;
}

std::size_t count_test_words(std::string_view text) {
    return active_variant().count_test_words(text.data(), text.size());
}

std::size_t count_nonblank_lines(std::string_view text) {
    return active_variant().count_nonblank_lines(text.data(), text.size());
}

std::size_t count_lines(std::string_view text) {
    if (text.empty()) return 0;
    std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    if (text.back() != '\n') ++n;
    return n;
}

} // namespace testscan::kernels
