#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperdeg/bigint.hpp"

namespace hyperdeg {

/* Degree sequence k_1..k_n together with the edge size r.  Vertices are
   1-based in serialized form; degrees may be zero.  M is the number of
   configuration points, M_t the t-th falling-factorial moment. */
class DegreeSequence {
public:
    DegreeSequence(std::uint32_t r, std::vector<std::uint32_t> degrees);

    std::uint32_t r() const { return r_; }
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }
    std::size_t n() const { return degrees_.size(); }
    std::uint64_t M() const { return M_; }
    std::uint32_t k_max() const { return k_max_; }

    bigint moment(std::uint32_t t) const;

    bool divisible() const { return r_ != 0 && M_ % r_ == 0; }
    std::uint64_t part_count() const;  // M/r, throws divisibility_error otherwise

private:
    std::uint32_t r_;
    std::vector<std::uint32_t> degrees_;
    std::uint64_t M_;
    std::uint32_t k_max_;
};

DegreeSequence regular_sequence(std::size_t n, std::uint32_t degree, std::uint32_t r);

/* Counting result split into the exact combinatorial prefactor and the
   floating-point exponential correction.  estimate = leading_term * exp(log_correction).
   leading_term is kept as an exact rational: dividing the ordered-point count
   by prod k_i! need not give an integer. */
struct CountResult {
    bigrat leading_term;
    double log_correction = 0.0;
    double estimate = 0.0;
    std::optional<bigint> exact_value;  // filled only when an exhaustive count ran
};

bigint falling_factorial(const bigint& x, std::uint64_t t);

/* |Lambda_r(k)| = M! / ((M/r)! (r!)^(M/r)) */
bigint partition_space_size(const DegreeSequence& k);

/* number of point partitions representing one fixed simple hypergraph: prod k_i! */
bigint configuration_multiplicity(const DegreeSequence& k);

/* leading term M!/((M/r)!(r!)^(M/r) prod k_i!) with correction -(r-1)M_2/(2M); r >= 3 */
CountResult asymptotic_count(const DegreeSequence& k);

/* same quantity for the n-vertex degree-k sequence, correction -(k-1)(r-1)/2 */
CountResult asymptotic_count_regular(std::size_t n, std::uint32_t degree, std::uint32_t r);

/* N = max(ceil(log M), ceil(9 (r-1) M_2 / M)), natural log */
std::uint64_t loop_cap_N(const DegreeSequence& k);

/* probability that a uniform partition contains c fixed disjoint parts:
   (r!)^c (M/r)_c / (M)_{rc} */
bigrat part_containment_probability(const DegreeSequence& k, std::uint64_t c);

}  // namespace hyperdeg
