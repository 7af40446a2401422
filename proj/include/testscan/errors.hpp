#pragma once

#include <stdexcept>
#include <string>

namespace testscan {

/// Caller misuse: bad arguments, mismatched lengths, malformed flags.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Bad input data: malformed registry rows, unreadable roots, broken row files.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// A measure whose denominator vanished (constant vector, zero KLOC, empty
/// confusion cell).
class undefined_measure_error : public std::domain_error {
public:
    explicit undefined_measure_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace testscan
