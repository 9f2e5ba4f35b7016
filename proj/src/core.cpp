#include "hyperdeg/core.hpp"

#include <algorithm>
#include <cmath>

#include "hyperdeg/errors.hpp"

namespace hyperdeg {

DegreeSequence::DegreeSequence(std::uint32_t r, std::vector<std::uint32_t> degrees)
    : r_(r), degrees_(std::move(degrees)) {
    if (r_ < 2) throw precondition_error("edge size r must be at least 2");
    M_ = 0;
    k_max_ = 0;
    for (auto d : degrees_) {
        M_ += d;
        k_max_ = std::max(k_max_, d);
    }
}

bigint DegreeSequence::moment(std::uint32_t t) const {
    bigint out = 0;
    for (auto d : degrees_) out += falling_factorial(bigint(d), t);
    return out;
}

std::uint64_t DegreeSequence::part_count() const {
    if (!divisible())
        throw divisibility_error("degree sum " + std::to_string(M_) +
                                 " is not divisible by r=" + std::to_string(r_));
    return M_ / r_;
}

DegreeSequence regular_sequence(std::size_t n, std::uint32_t degree, std::uint32_t r) {
    return DegreeSequence(r, std::vector<std::uint32_t>(n, degree));
}

bigint falling_factorial(const bigint& x, std::uint64_t t) {
    bigint out = 1;
    for (std::uint64_t i = 0; i < t; ++i) out *= x - bigint(i);
    return out;
}

bigint partition_space_size(const DegreeSequence& k) {
    const std::uint64_t m = k.part_count();
    return factorial(k.M()) / (factorial(m) * int_pow(factorial(k.r()), m));
}

bigint configuration_multiplicity(const DegreeSequence& k) {
    bigint out = 1;
    for (auto d : k.degrees()) out *= factorial(d);
    return out;
}

static CountResult finish_count(bigrat leading, double log_correction) {
    CountResult out;
    out.leading_term = std::move(leading);
    out.log_correction = log_correction;
    out.estimate = to_double(out.leading_term) * std::exp(log_correction);
    return out;
}

CountResult asymptotic_count(const DegreeSequence& k) {
    if (k.M() == 0) return finish_count(bigrat(1), 0.0);
    if (k.r() < 3) throw precondition_error("asymptotic count needs r >= 3");
    const bigrat leading(partition_space_size(k), configuration_multiplicity(k));
    const double m2 = to_double(k.moment(2));
    const double corr = -double(k.r() - 1) * m2 / (2.0 * double(k.M()));
    return finish_count(leading, corr);
}

CountResult asymptotic_count_regular(std::size_t n, std::uint32_t degree, std::uint32_t r) {
    const DegreeSequence k = regular_sequence(n, degree, r);
    if (k.M() == 0) return finish_count(bigrat(1), 0.0);
    if (r < 3) throw precondition_error("asymptotic count needs r >= 3");
    const bigrat leading(partition_space_size(k), configuration_multiplicity(k));
    const double corr = degree ? -0.5 * double(degree - 1) * double(r - 1) : 0.0;
    return finish_count(leading, corr);
}

std::uint64_t loop_cap_N(const DegreeSequence& k) {
    const std::uint64_t M = k.M();
    if (M == 0) throw precondition_error("loop cap needs M >= 1");
    const auto log_term = std::uint64_t(std::ceil(std::log(double(M))));
    const bigint num = bigint(9) * (k.r() - 1) * k.moment(2);
    const bigint ratio_term = (num + M - 1) / M;
    return std::max<std::uint64_t>(log_term, ratio_term.convert_to<std::uint64_t>());
}

bigrat part_containment_probability(const DegreeSequence& k, std::uint64_t c) {
    if (c < 1) throw precondition_error("part count c must be positive");
    const std::uint64_t m = k.part_count();
    if (c > m)
        throw precondition_error("cannot fix " + std::to_string(c) + " parts in a partition of " +
                                 std::to_string(m) + " parts");
    const bigint num = int_pow(factorial(k.r()), c) * falling_factorial(bigint(m), c);
    const bigint den = falling_factorial(bigint(k.M()), c * k.r());
    return bigrat(num, den);
}

}  // namespace hyperdeg
