#include "hyperdeg/mc.hpp"

#include <array>
#include <cmath>
#include <thread>

#include "hyperdeg/errors.hpp"

namespace hyperdeg {

namespace {

EstimateReport make_report(std::uint64_t samples, std::uint64_t successes, std::uint64_t seed,
                           std::uint32_t workers, double z) {
    EstimateReport rep;
    rep.samples = samples;
    rep.successes = successes;
    rep.seed = seed;
    rep.workers = workers;
    if (samples == 0) return rep;
    rep.p_hat = double(successes) / double(samples);
    rep.std_err = std::sqrt(rep.p_hat * (1.0 - rep.p_hat) / double(samples));
    rep.ci_low = std::max(0.0, rep.p_hat - z * rep.std_err);
    rep.ci_high = std::min(1.0, rep.p_hat + z * rep.std_err);
    return rep;
}

/* give the first (samples % workers) workers one extra draw */
std::uint64_t share_of(std::uint64_t samples, std::uint32_t workers, std::uint32_t w) {
    return samples / workers + (w < samples % workers ? 1 : 0);
}

/* Event tally per draw; index 0..3 = property failures, 4 = not simple. */
using EventCounts = std::array<std::uint64_t, 5>;

EventCounts run_worker(const DegreeSequence& k, const CellLayout& layout, std::uint64_t cap_n,
                       std::uint64_t draws, std::uint64_t seed) {
    EventCounts counts{};
    RandomStream rng(seed);
    std::vector<point_t> points(k.M());
    for (std::uint64_t i = 0; i < k.M(); ++i) points[i] = point_t(i);
    detail::ClassifyScratch scratch;
    for (std::uint64_t s = 0; s < draws; ++s) {
        rng.shuffle(points);  // chunking into r-blocks is classification-invariant
        const auto sum = detail::classify_span(points, k.r(), layout, cap_n, scratch);
        counts[0] += !sum.prop_i;
        counts[1] += !sum.prop_ii;
        counts[2] += !sum.prop_iii;
        counts[3] += !sum.prop_iv;
        counts[4] += !sum.simple;
    }
    return counts;
}

std::vector<EventCounts> run_all(const DegreeSequence& k, std::uint64_t samples,
                                 std::uint64_t seed, std::uint32_t workers) {
    const CellLayout layout(k);
    const std::uint64_t cap_n = k.M() ? loop_cap_N(k) : 0;
    std::vector<EventCounts> per_worker(workers);
    if (workers <= 1) {
        per_worker[0] = run_worker(k, layout, cap_n, samples, stream_seed(seed, 0));
        return per_worker;
    }
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            per_worker[w] =
                run_worker(k, layout, cap_n, share_of(samples, workers, w), stream_seed(seed, w));
        });
    for (auto& t : pool) t.join();
    return per_worker;
}

}  // namespace

EstimateReport estimate_p_simple(const DegreeSequence& k, std::uint64_t samples,
                                 std::uint64_t seed, std::uint32_t workers, double z) {
    if (workers == 0) throw precondition_error("need at least one worker");
    const auto counts = run_all(k, samples, seed, workers);
    std::uint64_t non_simple = 0;
    for (const auto& c : counts) non_simple += c[4];
    return make_report(samples, samples - non_simple, seed, workers, z);
}

std::map<std::string, EstimateReport> estimate_event_rates(const DegreeSequence& k,
                                                           std::uint64_t samples,
                                                           std::uint64_t seed,
                                                           std::uint32_t workers, double z) {
    if (workers == 0) throw precondition_error("need at least one worker");
    const auto counts = run_all(k, samples, seed, workers);
    EventCounts total{};
    for (const auto& c : counts)
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += c[i];
    const std::array<const char*, 5> names{"prop_i", "prop_ii", "prop_iii", "prop_iv",
                                           "non_simple"};
    std::map<std::string, EstimateReport> out;
    for (std::size_t i = 0; i < names.size(); ++i)
        out[names[i]] = make_report(samples, total[i], seed, workers, z);
    return out;
}

HypergraphView sample_simple_hypergraph(const DegreeSequence& k, std::uint64_t seed,
                                        std::uint64_t max_tries) {
    RandomStream rng(stream_seed(seed, 0));
    return sample_simple_hypergraph(k, rng, max_tries, nullptr);
}

HypergraphView sample_simple_hypergraph(const DegreeSequence& k, RandomStream& rng,
                                        std::uint64_t max_tries, std::uint64_t* tries_out) {
    const CellLayout layout(k);
    std::vector<point_t> points(k.M());
    for (std::uint64_t i = 0; i < k.M(); ++i) points[i] = point_t(i);
    detail::ClassifyScratch scratch;
    for (std::uint64_t tries = 1; tries <= max_tries; ++tries) {
        rng.shuffle(points);
        const auto sum = detail::classify_span(points, k.r(), layout, /*cap_n=*/0, scratch);
        if (sum.simple) {
            if (tries_out) *tries_out = tries;
            return edges_of(Partition(k.r(), points), layout);
        }
    }
    throw rejection_exhausted_error(
        "no simple draw within " + std::to_string(max_tries) + " tries", max_tries);
}

}  // namespace hyperdeg
