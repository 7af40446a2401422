#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace testscan::kernels {

/// One selectable implementation of the byte-scan kernels. The scalar entry
/// is always present; SIMD entries appear only when both the build and the
/// running CPU support them.
struct Variant {
    const char* name;
    std::size_t (*count_test_words)(const char* data, std::size_t size);
    std::size_t (*count_nonblank_lines)(const char* data, std::size_t size);
};

/// Variants usable on this machine, best first. front() is what the
/// dispatching wrappers below call.
const std::vector<Variant>& available_variants();

/// The variant the wrappers dispatch to. Honors TESTSCAN_KERNEL=<name> from
/// the environment (evaluated once) so a run can be pinned to `scalar`.
const Variant& active_variant();

/// Number of standalone word-boundary-delimited occurrences of "test"
/// (case-insensitive) in `text`. Boundaries follow camel/snake conventions:
/// `myTest`, `my_test`, `@Test` count; `fastest`, `testing`, `test123` do not.
std::size_t count_test_words(std::string_view text);

/// Number of lines containing at least one non-whitespace character.
std::size_t count_nonblank_lines(std::string_view text);

/// Number of newline-delimited lines (a non-empty tail without '\n' counts).
std::size_t count_lines(std::string_view text);

} // namespace testscan::kernels
