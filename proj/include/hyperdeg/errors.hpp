#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperdeg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* sum of degrees not divisible by the edge size */
struct divisibility_error : error {
    using error::error;
};

/* instance larger than the configured enumeration cap */
struct cap_exceeded_error : error {
    using error::error;
};

/* malformed argument or structurally invalid input */
struct precondition_error : error {
    using error::error;
};

/* a summation-problem invariant failed; index is the offending term (1-based, 0 = global) */
struct invariant_error : error {
    int index;
    invariant_error(const std::string& msg, int idx) : error(msg), index(idx) {}
};

/* rejection sampling gave up; tries records how many draws were made */
struct rejection_exhausted_error : error {
    std::uint64_t tries;
    rejection_exhausted_error(const std::string& msg, std::uint64_t t) : error(msg), tries(t) {}
};

}  // namespace hyperdeg
