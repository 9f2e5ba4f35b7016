#include "hyperdeg/verify.hpp"

#include <cmath>
#include <limits>

#include "hyperdeg/errors.hpp"
#include "hyperdeg/rng.hpp"
#include "switching_kernels.hpp"

namespace hyperdeg {

namespace {

/* per-partition state for sweeping every structural move of one side */
struct MoveAuditor {
    const CellLayout& layout;
    std::uint32_t r;
    std::uint64_t cap_n;
    detail::PartsIndex idx;
    detail::EdgeScratch edges;
    detail::ClassifyScratch scratch;
    std::vector<point_t> moved;
    std::vector<Condition> conds;

    MoveAuditor(const CellLayout& l, std::uint32_t rr, std::uint64_t cap)
        : layout(l), r(rr), cap_n(cap) {}

    void load(const Partition& q, bool with_edges) {
        idx.build(q.flat(), r, layout);
        if (with_edges) edges.build(q.flat(), r, layout);
    }

    bool legal(const Partition& q, const SwitchingTuple& t, std::uint64_t target_ell) {
        detail::apply_forward_into(q.flat(), r, t, moved);
        const auto after = detail::classify_span(moved, r, layout, cap_n, scratch);
        return after.in_plus() && after.loop_parts == target_ell;
    }
};

}  // namespace

RatiosReport verify_ratios(const DegreeSequence& k, std::uint64_t cap_m) {
    const ExactCensus c = census(k, cap_m);
    RatiosReport rep;
    if (c.class_sizes.empty()) return rep;
    const std::uint64_t max_ell = c.class_sizes.rbegin()->first;
    for (std::uint64_t ell = 1; ell <= max_ell; ++ell) {
        const auto den = c.class_sizes.find(ell - 1);
        if (den == c.class_sizes.end() || den->second == 0) continue;
        RatioRow row;
        row.ell = ell;
        row.exact = exact_ratio(c, ell);
        row.exact_value = to_double(row.exact);
        row.predicted = ratio_prediction(k, ell);
        row.rel_dev = row.predicted > 0.0
                          ? std::abs(row.exact_value / row.predicted - 1.0)
                          : (row.exact_value == 0.0 ? 0.0
                                                    : std::numeric_limits<double>::infinity());
        rep.rows.push_back(row);
    }
    return rep;
}

DoubleCountReport verify_double_count(const DegreeSequence& k, std::uint64_t cap_m) {
    const auto classes = collect_classes(k, cap_m);
    DoubleCountReport rep;
    if (classes.empty()) return rep;

    const CellLayout layout(k);
    const std::uint64_t cap_n = k.M() ? loop_cap_N(k) : 0;
    MoveAuditor audit(layout, k.r(), cap_n);
    const std::vector<Partition> none;
    const auto members = [&](std::uint64_t ell) -> const std::vector<Partition>& {
        const auto it = classes.find(ell);
        return it == classes.end() ? none : it->second;
    };

    const std::uint64_t max_ell = classes.rbegin()->first;
    for (std::uint64_t ell = 1; ell <= max_ell; ++ell) {
        DoubleCountRow row{};
        row.ell = ell;
        row.class_size = members(ell).size();
        for (const Partition& q : members(ell)) {
            audit.load(q, /*with_edges=*/false);
            detail::for_each_forward(q.flat(), layout, audit.idx, /*candidates_only=*/false,
                                     [&](const SwitchingTuple& t) {
                                         row.forward_legal += audit.legal(q, t, ell - 1);
                                     });
        }
        for (const Partition& q : members(ell - 1)) {
            audit.load(q, /*with_edges=*/false);
            detail::for_each_reverse(q.flat(), layout, audit.idx, /*candidates_only=*/false,
                                     [&](const SwitchingTuple& t) {
                                         row.reverse_legal += audit.legal(q, t, ell);
                                     });
        }
        row.equal = row.forward_legal == row.reverse_legal;
        rep.pass = rep.pass && row.equal;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

NecessityReport necessity_sweep(const DegreeSequence& k, std::uint64_t cap_m, bool reverse) {
    const auto classes = collect_classes(k, cap_m);
    NecessityReport rep;
    if (classes.empty() || k.M() == 0) return rep;

    const CellLayout layout(k);
    const std::uint64_t cap_n = loop_cap_N(k);
    MoveAuditor audit(layout, k.r(), cap_n);

    for (const auto& [ell, members] : classes) {
        const std::uint64_t target = reverse ? ell + 1 : (ell ? ell - 1 : 0);
        if (!reverse && ell == 0) continue;  // no loop pair to move out
        for (const Partition& q : members) {
            audit.load(q, /*with_edges=*/true);
            const auto check = [&](const SwitchingTuple& t) {
                ++rep.tuples;
                if (audit.legal(q, t, target)) return;
                ++rep.illegal;
                const std::uint32_t px1 = audit.idx.part_of[t.x1];
                const std::uint32_t u = reverse ? audit.idx.part_of[t.y1] : px1;
                const std::uint32_t w1 = reverse ? px1 : audit.idx.part_of[t.y1];
                const std::uint32_t w2 =
                    reverse ? audit.idx.part_of[t.x2] : audit.idx.part_of[t.y2];
                detail::obstructions(audit.edges, audit.idx, k.r(), q.part_count(), u, w1, w2,
                                     reverse, audit.conds);
                if (audit.conds.empty()) {
                    ++rep.missing;
                    if (rep.counterexamples.size() < 8)
                        rep.counterexamples.push_back({q, t, reverse});
                }
            };
            if (reverse)
                detail::for_each_reverse(q.flat(), layout, audit.idx, false, check);
            else
                detail::for_each_forward(q.flat(), layout, audit.idx, false, check);
        }
    }
    rep.pass = rep.missing == 0;
    return rep;
}

}  // namespace

NecessityReport verify_forward_necessity(const DegreeSequence& k, std::uint64_t cap_m) {
    return necessity_sweep(k, cap_m, /*reverse=*/false);
}

NecessityReport verify_reverse_necessity(const DegreeSequence& k, std::uint64_t cap_m) {
    return necessity_sweep(k, cap_m, /*reverse=*/true);
}

SummationProblem random_admissible_problem(RandomStream& rng) {
    SummationProblem p;
    p.N = 1 + std::uint32_t(rng.uniform_below(60));
    p.c_hat = 0.33 * (0.05 + 0.95 * rng.uniform01());
    p.a.resize(p.N);
    p.c.resize(p.N);
    /* keep A away from the c_hat*N ceiling so the A_max/N check cannot trip
       on rounding */
    const double a_cap = 0.99 * p.c_hat * double(p.N);
    for (std::uint32_t i = 1; i <= p.N; ++i) {
        const double ci = (2.0 * rng.uniform01() - 1.0) * p.c_hat;
        /* floor A(i) at (i-1) C(i), computed exactly as the recurrence does,
           so A(i) - (i-1) C(i) >= 0 holds in floating point too */
        const double a_floor = std::max(0.0, double(i - 1) * ci);
        const double ai =
            std::min(a_cap, a_floor + rng.uniform01() * (a_cap - std::min(a_floor, a_cap)));
        p.a[i - 1] = std::max(ai, a_floor);
        p.c[i - 1] = ci;
    }
    return p;
}

SummationVerifyReport verify_summation(const DegreeSequence& k, std::uint64_t trials,
                                       std::uint64_t seed) {
    SummationVerifyReport rep;
    if (k.M() == 0) {
        rep.sigma1 = rep.total = rep.sigma2 = 1.0;
        rep.model_ok = true;
    } else {
        SummationProblem p;
        const double x = (k.r() - 1) * to_double(k.moment(2)) / (2.0 * double(k.M()));
        p.N = std::uint32_t(loop_cap_N(k));
        p.a.assign(p.N, x);
        p.c.assign(p.N, 0.0);
        p.c_hat = 1.0 / 16.0;
        const SummationResult s = evaluate_summation(p);
        rep.sigma1 = s.sigma1;
        rep.total = s.total;
        rep.sigma2 = s.sigma2;
        rep.model_ok = sandwich_holds(s);
    }

    rep.random_trials = trials;
    RandomStream rng(stream_seed(seed, 0));
    for (std::uint64_t t = 0; t < trials; ++t) {
        const SummationProblem p = random_admissible_problem(rng);
        if (!sandwich_holds(evaluate_summation(p))) ++rep.violations;
    }
    rep.pass = rep.model_ok && rep.violations == 0;
    return rep;
}

IdentityReport verify_identity(const DegreeSequence& k, std::uint64_t cap_m,
                               std::uint64_t cap_vertices) {
    IdentityReport rep;
    const ExactCensus c = census(k, cap_m);
    rep.simple_partitions = c.simple_count;
    rep.hypergraph_count = enumerate_simple_hypergraphs(k, cap_vertices, cap_m);
    bigint point_perms = 1;
    for (std::uint32_t d : k.degrees()) point_perms *= factorial(d);
    rep.product = rep.hypergraph_count * point_perms;
    rep.pass = rep.product == rep.simple_partitions && rep.hypergraph_count == c.hypergraph_count;
    return rep;
}

}  // namespace hyperdeg
