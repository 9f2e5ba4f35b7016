#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hyperdeg/configuration.hpp"

namespace hyperdeg {

struct EstimateReport {
    std::uint64_t samples = 0;
    std::uint64_t successes = 0;
    double p_hat = 0.0;
    double std_err = 0.0;
    double ci_low = 0.0;   // p_hat -/+ z * std_err, clamped to [0,1]
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t workers = 1;
};

/* Monte Carlo estimate of P(simple).  The sample budget is split across
   workers; worker w draws from stream_seed(seed, w), so the report is a
   function of (k, samples, seed, workers) only. */
EstimateReport estimate_p_simple(const DegreeSequence& k, std::uint64_t samples,
                                 std::uint64_t seed, std::uint32_t workers = 1,
                                 double z = 3.0);

/* Failure rates of the structural properties over random partitions; keys
   prop_i..prop_iv plus non_simple. */
std::map<std::string, EstimateReport> estimate_event_rates(const DegreeSequence& k,
                                                           std::uint64_t samples,
                                                           std::uint64_t seed,
                                                           std::uint32_t workers = 1,
                                                           double z = 3.0);

/* Rejection sampler: draw partitions until one is simple, return its edges.
   Throws rejection_exhausted_error after max_tries draws.  A fresh stream is
   derived from seed; the rng overload continues an existing stream. */
HypergraphView sample_simple_hypergraph(const DegreeSequence& k, std::uint64_t seed,
                                        std::uint64_t max_tries = 1000);
HypergraphView sample_simple_hypergraph(const DegreeSequence& k, RandomStream& rng,
                                        std::uint64_t max_tries, std::uint64_t* tries_out = nullptr);

}  // namespace hyperdeg
