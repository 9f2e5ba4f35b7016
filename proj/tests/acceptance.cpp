// Acceptance checks for the whole pipeline, one criterion per run.
// Usage: acceptance [N]   (N=1..10; no argument runs all of them)
// Each criterion prints a single [PASS]/[FAIL] line; the exit code is the
// number of failing criteria.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "hyperdeg/configuration.hpp"
#include "hyperdeg/core.hpp"
#include "hyperdeg/mc.hpp"
#include "hyperdeg/oracle.hpp"
#include "hyperdeg/rng.hpp"
#include "hyperdeg/summation.hpp"
#include "hyperdeg/verify.hpp"

using namespace hyperdeg;

namespace {

constexpr std::uint64_t kCapM = 12;
constexpr std::uint64_t kCapVertices = 12;  // the all-ones M=12 instance has 12 vertices

/* all positive degree multisets (nonincreasing) with the given sum and max entry */
void multisets_into(std::uint32_t remaining, std::uint32_t max_part,
                    std::vector<std::uint32_t>& prefix,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::uint32_t d = std::min(remaining, max_part); d >= 1; --d) {
        prefix.push_back(d);
        multisets_into(remaining - d, d, prefix, out);
        prefix.pop_back();
    }
}

std::vector<DegreeSequence> instance_set() {
    std::vector<DegreeSequence> out;
    const auto add_all = [&](std::uint32_t r, std::uint32_t m_sum) {
        std::vector<std::vector<std::uint32_t>> multisets;
        std::vector<std::uint32_t> prefix;
        multisets_into(m_sum, 4, prefix, multisets);
        for (auto& degrees : multisets) out.emplace_back(r, degrees);
    };
    for (std::uint32_t m_sum : {3u, 6u, 9u, 12u}) add_all(3, m_sum);
    for (std::uint32_t m_sum : {4u, 8u}) add_all(4, m_sum);
    return out;
}

std::string describe(const DegreeSequence& k) {
    std::string s = "r=" + std::to_string(k.r()) + " (";
    for (std::size_t i = 0; i < k.n(); ++i)
        s += (i ? "," : "") + std::to_string(k.degrees()[i]);
    return s + ")";
}

bool criterion_identity() {
    const auto instances = instance_set();
    for (const DegreeSequence& k : instances) {
        IdentityReport rep = verify_identity(k, kCapM, kCapVertices);
        if (!rep.pass) {
            std::printf("  identity mismatch on %s\n", describe(k).c_str());
            return false;
        }
    }
    return instances.size() == 3 + 9 + 18 + 34 + 5 + 15;
}

bool criterion_enumeration_count() {
    bool saw_15400 = false;
    for (const DegreeSequence& k : instance_set()) {
        const ExactCensus c = census(k, kCapM);
        if (c.lambda_size != partition_space_size(k)) {
            std::printf("  enumeration count mismatch on %s\n", describe(k).c_str());
            return false;
        }
        if (c.lambda_size == 15400) saw_15400 = true;
    }
    return saw_15400;
}

bool criterion_all_ones_exact() {
    for (std::uint32_t m : {3u, 6u, 9u, 12u}) {
        DegreeSequence k(3, std::vector<std::uint32_t>(m, 1));
        const CountResult asym = asymptotic_count(k);
        const ExactCensus c = census(k, kCapM);
        const double exact = to_double(c.hypergraph_count);
        if (std::fabs(asym.estimate / exact - 1.0) > 1e-12) {
            std::printf("  all-ones M=%u: estimate %.17g vs exact %.17g\n", m, asym.estimate,
                        exact);
            return false;
        }
    }
    return true;
}

bool criterion_double_count() {
    for (const DegreeSequence& k : instance_set()) {
        DoubleCountReport rep = verify_double_count(k, kCapM);
        if (!rep.pass) {
            std::printf("  forward/reverse legal-move totals differ on %s\n",
                        describe(k).c_str());
            return false;
        }
    }
    return true;
}

bool criterion_necessity() {
    for (const DegreeSequence& k : instance_set()) {
        NecessityReport fwd = verify_forward_necessity(k, kCapM);
        NecessityReport rev = verify_reverse_necessity(k, kCapM);
        if (!fwd.pass || !rev.pass) {
            std::printf("  illegal move without obstruction on %s (forward missing %llu, "
                        "reverse missing %llu)\n",
                        describe(k).c_str(), (unsigned long long)fwd.missing,
                        (unsigned long long)rev.missing);
            return false;
        }
    }
    return true;
}

bool criterion_ratio_trend() {
    // growing instances of the same shape: the class-ratio deviation shrinks
    const DegreeSequence small(3, {2, 2, 2, 1, 1, 1});   // M = 9
    const DegreeSequence large(3, {2, 2, 2, 2, 2, 2});   // M = 12
    const auto first_dev = [](const DegreeSequence& k) {
        RatiosReport rep = verify_ratios(k, kCapM);
        if (rep.rows.empty()) return 2.0;
        return rep.rows.front().rel_dev;
    };
    const double dev_small = first_dev(small);
    const double dev_large = first_dev(large);
    std::printf("  leading-ratio deviation: M=9 %.6f, M=12 %.6f\n", dev_small, dev_large);
    return dev_large < dev_small && dev_large < 0.5;
}

bool criterion_summation() {
    // closed form: constant coefficients give the truncated exponential series
    for (double x : {0.1, 0.5, 1.0}) {
        const std::uint32_t n = 18 * std::uint32_t(std::ceil(x)) + 18;
        SummationProblem p;
        p.N = n;
        p.a.assign(n, x);
        p.c.assign(n, 0.0);
        p.c_hat = 1.0 / 16.0;
        const SummationResult s = evaluate_summation(p);
        double term = 1.0, sum = 1.0;
        for (std::uint32_t i = 1; i <= n; ++i) {
            term *= x / i;
            sum += term;
        }
        if (std::fabs(s.total / sum - 1.0) > 1e-12 || !sandwich_holds(s)) {
            std::printf("  constant-coefficient series mismatch at x=%g\n", x);
            return false;
        }
    }
    // random admissible problems stay inside the bounds
    RandomStream rng(2026);
    for (int trial = 0; trial < 1000; ++trial) {
        const SummationProblem p = random_admissible_problem(rng);
        const SummationResult s = evaluate_summation(p);
        if (!sandwich_holds(s)) {
            std::printf("  sandwich violated on random trial %d (N=%u)\n", trial, p.N);
            return false;
        }
    }
    return true;
}

bool criterion_monte_carlo() {
    const DegreeSequence k(3, {2, 2, 1, 1});
    const EstimateReport rep = estimate_p_simple(k, 100000, 1, 1, 3.0);
    std::printf("  p_hat %.5f, interval [%.5f, %.5f], exact 0.4\n", rep.p_hat, rep.ci_low,
                rep.ci_high);
    if (!(rep.ci_low <= 0.4 && 0.4 <= rep.ci_high)) return false;

    // uniformity over the ten partitions of the same instance
    RandomStream rng(2024);
    std::map<std::vector<point_t>, std::uint64_t> counts;
    const std::uint64_t draws = 100000;
    for (std::uint64_t i = 0; i < draws; ++i) counts[random_partition(k, rng).flat()]++;
    if (counts.size() != 10) {
        std::printf("  expected 10 distinct partitions, saw %zu\n", counts.size());
        return false;
    }
    const double expected = double(draws) / 10.0;
    double chi2 = 0.0;
    for (const auto& [flat, n] : counts) {
        const double d = double(n) - expected;
        chi2 += d * d / expected;
    }
    std::printf("  chi-square over 10 cells: %.4f (9 dof, threshold 27.877164871)\n", chi2);
    return chi2 <= 27.877164871;
}

bool criterion_model_consistency() {
    RandomStream rng(99);
    int done = 0;
    while (done < 100) {
        const std::uint32_t r = 3 + std::uint32_t(rng.uniform_below(3));
        const std::size_t n = r + std::size_t(rng.uniform_below(6));
        std::vector<std::uint32_t> degrees(n);
        for (auto& d : degrees) d = 1 + std::uint32_t(rng.uniform_below(4));
        DegreeSequence k(r, degrees);
        if (k.M() % r != 0) continue;
        ++done;
        const CountResult c = asymptotic_count(k);
        const PSimpleModel m = p_simple_from_switching_model(k);
        if (m.degraded || std::fabs(m.estimate * std::exp(-c.log_correction) - 1.0) > 1e-12) {
            std::printf("  model/count mismatch on %s\n", describe(k).c_str());
            return false;
        }
    }
    return true;
}

bool criterion_regular_consistency() {
    RandomStream rng(7);
    int done = 0;
    while (done < 50) {
        const std::uint32_t r = 3 + std::uint32_t(rng.uniform_below(3));
        const std::uint32_t deg = 1 + std::uint32_t(rng.uniform_below(4));
        const std::size_t n = 2 + std::size_t(rng.uniform_below(10));
        if ((std::uint64_t(deg) * n) % r != 0) continue;
        ++done;
        const CountResult general = asymptotic_count(regular_sequence(n, deg, r));
        const CountResult regular = asymptotic_count_regular(n, deg, r);
        if (general.leading_term != regular.leading_term) {
            std::printf("  leading term differs at n=%zu deg=%u r=%u\n", n, deg, r);
            return false;
        }
        if (std::fabs(general.log_correction - regular.log_correction) >
            1e-12 * (1.0 + std::fabs(general.log_correction))) {
            std::printf("  correction differs at n=%zu deg=%u r=%u\n", n, deg, r);
            return false;
        }
        if (std::fabs(general.estimate / regular.estimate - 1.0) > 1e-12) {
            std::printf("  estimate differs at n=%zu deg=%u r=%u\n", n, deg, r);
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* text;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "simple partitions factor exactly through simple hypergraph counts", criterion_identity},
    {2, "exhaustive enumeration matches the closed-form partition count",
     criterion_enumeration_count},
    {3, "the asymptotic count is exact on all-ones instances", criterion_all_ones_exact},
    {4, "legal switchings are double-counted consistently in both directions",
     criterion_double_count},
    {5, "every illegal switching carries at least one obstruction", criterion_necessity},
    {6, "class-ratio deviation from the prediction shrinks as instances grow",
     criterion_ratio_trend},
    {7, "recurrence totals stay inside the closed-form bounds", criterion_summation},
    {8, "Monte Carlo covers the exact P(simple) and samples partitions uniformly",
     criterion_monte_carlo},
    {9, "the sampling model inverts the counting correction on random instances",
     criterion_model_consistency},
    {10, "regular-instance counts agree with the general formula", criterion_regular_consistency},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 10) {
            std::fprintf(stderr, "usage: acceptance [1..10]\n");
            return 2;
        }
    }
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (selected && c.id != selected) continue;
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("  unexpected error: %s\n", e.what());
        }
        std::printf("[%s] %d %s\n", ok ? "PASS" : "FAIL", c.id, c.text);
        if (!ok) ++failures;
    }
    return failures;
}
