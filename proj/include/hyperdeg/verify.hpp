#pragma once

#include <cstdint>
#include <vector>

#include "hyperdeg/oracle.hpp"
#include "hyperdeg/summation.hpp"
#include "hyperdeg/switching.hpp"

namespace hyperdeg {

/* Exhaustive cross-checks behind `hyperdeg verify` and the acceptance suite.
   All of them work at enumeration scale and honor cap_m. */

struct RatioRow {
    std::uint64_t ell;
    bigrat exact;
    double exact_value;
    double predicted;
    double rel_dev;  // |exact/predicted - 1|
};

struct RatiosReport {
    std::vector<RatioRow> rows;
    bool pass = true;  // informational table; pass means it was computable
};

RatiosReport verify_ratios(const DegreeSequence& k, std::uint64_t cap_m = kDefaultCapM);

struct DoubleCountRow {
    std::uint64_t ell;
    std::uint64_t class_size;        // |C_ell|
    std::uint64_t forward_legal;     // over C_ell, all structural moves
    std::uint64_t reverse_legal;     // over C_{ell-1}, all structural moves
    bool equal;
};

struct DoubleCountReport {
    std::vector<DoubleCountRow> rows;
    bool pass = true;
};

DoubleCountReport verify_double_count(const DegreeSequence& k,
                                      std::uint64_t cap_m = kDefaultCapM);

/* One illegal move whose obstruction set came back empty. */
struct NecessityCounterexample {
    Partition q;
    SwitchingTuple t;
    bool reverse;
};

struct NecessityReport {
    std::uint64_t tuples = 0;
    std::uint64_t illegal = 0;
    std::uint64_t missing = 0;  // illegal with empty obstruction set
    std::vector<NecessityCounterexample> counterexamples;  // at most 8 retained
    bool pass = true;
};

NecessityReport verify_forward_necessity(const DegreeSequence& k,
                                         std::uint64_t cap_m = kDefaultCapM);
NecessityReport verify_reverse_necessity(const DegreeSequence& k,
                                         std::uint64_t cap_m = kDefaultCapM);

struct SummationVerifyReport {
    double sigma1 = 0.0;
    double total = 0.0;
    double sigma2 = 0.0;
    bool model_ok = false;
    std::uint64_t random_trials = 0;
    std::uint64_t violations = 0;
    bool pass = false;
};

/* sandwich check on the instance model plus seeded random admissible problems */
SummationVerifyReport verify_summation(const DegreeSequence& k, std::uint64_t trials = 1000,
                                       std::uint64_t seed = 0);

/* draw a random admissible problem; shared with the acceptance suite */
SummationProblem random_admissible_problem(RandomStream& rng);

struct IdentityReport {
    bigint simple_partitions = 0;
    bigint hypergraph_count = 0;   // independent backtracking count
    bigint product = 0;            // hypergraph_count * prod k_i!
    bool pass = false;
};

/* simple partitions == simple hypergraphs * prod k_i!, via two independent counters */
IdentityReport verify_identity(const DegreeSequence& k, std::uint64_t cap_m = kDefaultCapM,
                               std::uint64_t cap_vertices = kDefaultCapVertices);

}  // namespace hyperdeg
