#include "hyperdeg/oracle.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "hyperdeg/errors.hpp"

namespace hyperdeg {

/* test/oracle backdoor: fill a Partition's buffer in place when the caller
   guarantees canonical order */
struct partition_access {
    static void reset(Partition& q, std::uint32_t r, std::uint64_t m) {
        q.r_ = r;
        q.flat_.assign(m, 0);
    }
    static std::vector<point_t>& flat(Partition& q) { return q.flat_; }
};

namespace {

void check_caps(const DegreeSequence& k, std::uint64_t cap_m) {
    k.part_count();  // surfaces indivisible M first
    if (k.M() > cap_m)
        throw cap_exceeded_error("M=" + std::to_string(k.M()) + " exceeds cap " +
                                 std::to_string(cap_m) +
                                 " for exhaustive enumeration (see HYPERDEG_CAP_M)");
}

/* Lowest-point recursion: each part starts at the smallest unplaced point
   and continues ascending, so the flat buffer is born canonical and every
   partition appears exactly once. */
struct Enumerator {
    std::uint32_t r = 0;
    std::uint64_t M = 0;      // point universe, bounds the ascending scan
    std::uint64_t limit = 0;  // positions to fill before emitting
    std::vector<point_t>* flat = nullptr;
    std::vector<std::uint8_t> used;
    const std::function<void(const std::vector<point_t>&)>* emit = nullptr;

    void step(std::uint64_t pos) {
        if (pos == limit) {
            (*emit)(*flat);
            return;
        }
        auto& f = *flat;
        if (pos % r == 0) {
            point_t p = 0;
            while (used[p]) ++p;
            used[p] = 1;
            f[pos] = p;
            step(pos + 1);
            used[p] = 0;
        } else {
            for (point_t q = f[pos - 1] + 1; q < M; ++q) {
                if (used[q]) continue;
                used[q] = 1;
                f[pos] = q;
                step(pos + 1);
                used[q] = 0;
            }
        }
    }
};

/* the first parts, used to split the enumeration across workers */
std::vector<std::vector<point_t>> first_parts(const DegreeSequence& k) {
    std::vector<std::vector<point_t>> prefixes;
    if (k.M() == 0) return prefixes;
    Partition scratch;
    partition_access::reset(scratch, k.r(), k.M());
    Enumerator e;
    e.r = k.r();
    e.M = k.M();
    e.limit = k.r();  // stop after one part
    e.flat = &partition_access::flat(scratch);
    e.used.assign(k.M(), 0);
    std::function<void(const std::vector<point_t>&)> take =
        [&](const std::vector<point_t>& f) {
            prefixes.emplace_back(f.begin(), f.begin() + k.r());
        };
    e.emit = &take;
    e.step(0);
    return prefixes;
}

struct CensusAccumulator {
    bigint lambda = 0, plus = 0, simple = 0;
    std::map<std::uint64_t, bigint> classes;

    void add(const detail::ClassSummary& s) {
        ++lambda;
        if (s.in_plus()) {
            ++plus;
            ++classes[s.loop_parts];
        }
        if (s.simple) ++simple;
    }

    void merge(const CensusAccumulator& o) {
        lambda += o.lambda;
        plus += o.plus;
        simple += o.simple;
        for (const auto& [ell, c] : o.classes) classes[ell] += c;
    }
};

}  // namespace

void enumerate_partitions(const DegreeSequence& k,
                          const std::function<void(const Partition&)>& visit,
                          std::uint64_t cap_m) {
    check_caps(k, cap_m);
    Partition scratch;
    partition_access::reset(scratch, k.r(), k.M());
    if (k.M() == 0) {
        visit(scratch);
        return;
    }
    Enumerator e;
    e.r = k.r();
    e.M = k.M();
    e.limit = k.M();
    e.flat = &partition_access::flat(scratch);
    e.used.assign(k.M(), 0);
    std::function<void(const std::vector<point_t>&)> take =
        [&](const std::vector<point_t>&) { visit(scratch); };
    e.emit = &take;
    e.step(0);
}

ExactCensus census(const DegreeSequence& k, std::uint64_t cap_m, std::uint32_t workers) {
    check_caps(k, cap_m);
    ExactCensus out;
    if (k.M() == 0) {
        out.lambda_size = out.lambda_plus_size = out.simple_count = 1;
        out.class_sizes[0] = 1;
        out.p_simple = 1;
        out.hypergraph_count = 1;
        return out;
    }

    const CellLayout layout(k);
    out.cap_n = loop_cap_N(k);
    CensusAccumulator acc;

    if (workers <= 1) {
        detail::ClassifyScratch scratch;
        enumerate_partitions(
            k,
            [&](const Partition& q) {
                acc.add(detail::classify_span(q.flat(), k.r(), layout, out.cap_n, scratch));
            },
            cap_m);
    } else {
        const auto prefixes = first_parts(k);
        std::vector<CensusAccumulator> parts(workers);
        std::vector<std::thread> pool;
        for (std::uint32_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                Partition scratch_q;
                partition_access::reset(scratch_q, k.r(), k.M());
                auto& flat = partition_access::flat(scratch_q);
                detail::ClassifyScratch scratch;
                Enumerator e;
                e.r = k.r();
                e.M = k.M();
                e.limit = k.M();
                e.flat = &flat;
                std::function<void(const std::vector<point_t>&)> take =
                    [&](const std::vector<point_t>& f) {
                        parts[w].add(
                            detail::classify_span(f, k.r(), layout, out.cap_n, scratch));
                    };
                e.emit = &take;
                for (std::size_t i = w; i < prefixes.size(); i += workers) {
                    e.used.assign(k.M(), 0);
                    for (std::uint32_t j = 0; j < k.r(); ++j) {
                        flat[j] = prefixes[i][j];
                        e.used[flat[j]] = 1;
                    }
                    e.step(k.r());
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& p : parts) acc.merge(p);
    }

    out.lambda_size = acc.lambda;
    out.lambda_plus_size = acc.plus;
    out.class_sizes = std::move(acc.classes);
    out.simple_count = acc.simple;
    out.p_simple = bigrat(out.simple_count, out.lambda_size);

    bigint point_perms = 1;
    for (std::uint32_t d : k.degrees()) point_perms *= factorial(d);
    if (out.simple_count % point_perms != 0)
        throw invariant_error("simple partition count must be a multiple of the point relabelings",
                              0);
    out.hypergraph_count = out.simple_count / point_perms;
    return out;
}

bigint enumerate_simple_hypergraphs(const DegreeSequence& k, std::uint64_t cap_vertices,
                                    std::uint64_t cap_m) {
    check_caps(k, cap_m);
    std::vector<std::uint32_t> residual;
    for (std::uint32_t d : k.degrees())
        if (d > 0) residual.push_back(d);
    if (residual.size() > cap_vertices)
        throw cap_exceeded_error(std::to_string(residual.size()) +
                                 " active vertices exceed cap " + std::to_string(cap_vertices));
    if (k.M() == 0) return 1;

    const std::uint32_t r = k.r();
    const std::size_t n = residual.size();
    if (n < r) return 0;

    bigint count = 0;

    /* Vertices are consumed in index order: the anchor is the lowest vertex
       with residual degree, and all its edges are chosen at once as a
       lexicographically increasing batch of distinct companion sets, which
       makes every hypergraph appear exactly once. */
    std::function<void(std::size_t)> place_vertex = [&](std::size_t anchor) {
        while (anchor < n && residual[anchor] == 0) ++anchor;
        if (anchor == n) {
            ++count;
            return;
        }

        /* each recursion frame owns the companion set it contributes, and
           hands it down as the lexicographic floor for the next edge */
        std::function<void(std::uint32_t, const std::vector<std::uint32_t>*)> next_edge =
            [&](std::uint32_t remaining, const std::vector<std::uint32_t>* prev) {
                if (remaining == 0) {
                    place_vertex(anchor + 1);
                    return;
                }
                std::vector<std::uint32_t> cur(r - 1);
                std::function<void(std::uint32_t, std::size_t, bool)> grow =
                    [&](std::uint32_t slot, std::size_t from, bool tied) {
                        if (slot == r - 1) {
                            if (tied) return;  // equal to the previous edge
                            next_edge(remaining - 1, &cur);
                            return;
                        }
                        std::size_t start = from;
                        if (tied) start = std::max<std::size_t>(start, (*prev)[slot]);
                        for (std::size_t v = start; v < n; ++v) {
                            if (residual[v] == 0) continue;
                            cur[slot] = std::uint32_t(v);
                            --residual[v];
                            grow(slot + 1, v + 1, tied && v == (*prev)[slot]);
                            ++residual[v];
                        }
                    };
                grow(0, anchor + 1, prev != nullptr);
            };

        next_edge(residual[anchor], nullptr);
    };

    place_vertex(0);
    return count;
}

bigrat exact_ratio(const ExactCensus& c, std::uint64_t ell) {
    if (ell == 0) throw precondition_error("ratio is defined for ell >= 1");
    const auto den = c.class_sizes.find(ell - 1);
    if (den == c.class_sizes.end() || den->second == 0)
        throw precondition_error("class " + std::to_string(ell - 1) + " is empty");
    const auto num = c.class_sizes.find(ell);
    return bigrat(num == c.class_sizes.end() ? bigint(0) : num->second, den->second);
}

bigrat exact_ratio(const DegreeSequence& k, std::uint64_t ell, std::uint64_t cap_m) {
    return exact_ratio(census(k, cap_m), ell);
}

std::map<std::uint64_t, std::vector<Partition>> collect_classes(const DegreeSequence& k,
                                                                std::uint64_t cap_m) {
    check_caps(k, cap_m);
    std::map<std::uint64_t, std::vector<Partition>> out;
    if (k.M() == 0) {
        out[0].push_back(Partition());
        return out;
    }
    const CellLayout layout(k);
    const std::uint64_t cap_n = loop_cap_N(k);
    detail::ClassifyScratch scratch;
    enumerate_partitions(
        k,
        [&](const Partition& q) {
            const auto s = detail::classify_span(q.flat(), k.r(), layout, cap_n, scratch);
            if (s.in_plus()) out[s.loop_parts].push_back(q);
        },
        cap_m);
    return out;
}

}  // namespace hyperdeg
