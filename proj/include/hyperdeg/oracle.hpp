#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "hyperdeg/configuration.hpp"

namespace hyperdeg {

inline constexpr std::uint64_t kDefaultCapM = 12;
inline constexpr std::uint64_t kDefaultCapVertices = 8;

/* Exhaustive description of the partition space of one instance. */
struct ExactCensus {
    bigint lambda_size = 0;                // all partitions
    bigint lambda_plus_size = 0;           // those satisfying (i)-(iv)
    std::map<std::uint64_t, bigint> class_sizes;  // by loop-part count, Lambda+ only
    bigint simple_count = 0;               // loop-free, repeat-free partitions
    bigrat p_simple = 0;                   // simple_count / lambda_size
    bigint hypergraph_count = 0;           // simple_count / prod k_i!
    std::uint64_t cap_n = 0;               // the N used for (iv)
};

/* Visit every partition exactly once, in canonical order (the parts are
   discovered with increasing minima).  The same Partition object is reused
   between calls.  Throws cap_exceeded_error when M > cap_m. */
void enumerate_partitions(const DegreeSequence& k,
                          const std::function<void(const Partition&)>& visit,
                          std::uint64_t cap_m = kDefaultCapM);

ExactCensus census(const DegreeSequence& k, std::uint64_t cap_m = kDefaultCapM,
                   std::uint32_t workers = 1);

/* Independent count of simple hypergraphs by backtracking over edge sets
   (never through partitions).  Caps bound the positive-degree vertex count
   and M. */
bigint enumerate_simple_hypergraphs(const DegreeSequence& k,
                                    std::uint64_t cap_vertices = kDefaultCapVertices,
                                    std::uint64_t cap_m = kDefaultCapM);

/* |C_ell| / |C_{ell-1}|; throws precondition_error when the denominator
   class is empty */
bigrat exact_ratio(const ExactCensus& c, std::uint64_t ell);
bigrat exact_ratio(const DegreeSequence& k, std::uint64_t ell,
                   std::uint64_t cap_m = kDefaultCapM);

/* Lambda+ members grouped by loop-part count; the workhorse behind the
   switching verifications. */
std::map<std::uint64_t, std::vector<Partition>> collect_classes(
    const DegreeSequence& k, std::uint64_t cap_m = kDefaultCapM);

}  // namespace hyperdeg
