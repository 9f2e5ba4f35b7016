#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hyperdeg {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bigint factorial(std::uint64_t n) {
    bigint out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) out *= i;
    return out;
}

inline bigint int_pow(const bigint& base, std::uint64_t e) {
    bigint out = 1, b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline double to_double(const bigint& v) { return v.convert_to<double>(); }
inline double to_double(const bigrat& v) { return v.convert_to<double>(); }

inline std::string to_string(const bigint& v) { return v.str(); }
inline std::string to_string(const bigrat& v) { return v.str(); }

}  // namespace hyperdeg
