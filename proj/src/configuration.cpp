#include "hyperdeg/configuration.hpp"

#include <algorithm>
#include <numeric>

#include "hyperdeg/errors.hpp"

namespace hyperdeg {

CellLayout::CellLayout(const DegreeSequence& k) {
    offset_.reserve(k.n() + 1);
    offset_.push_back(0);
    cell_of_.reserve(k.M());
    for (std::size_t i = 0; i < k.n(); ++i) {
        offset_.push_back(offset_.back() + k.degrees()[i]);
        cell_of_.insert(cell_of_.end(), k.degrees()[i], std::uint32_t(i));
    }
}

void canonicalize_parts(std::uint32_t r, std::vector<point_t>& flat) {
    if (r == 0 || flat.size() % r != 0)
        throw precondition_error("point count is not a multiple of r");
    const std::size_t m = flat.size() / r;
    std::vector<std::uint8_t> seen(flat.size(), 0);
    for (point_t p : flat) {
        if (p >= flat.size() || seen[p])
            throw precondition_error("points must cover 0..M-1 exactly once");
        seen[p] = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
        std::sort(flat.begin() + i * r, flat.begin() + (i + 1) * r);
    /* parts are disjoint, so ordering by first element is lexicographic */
    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return flat[a * r] < flat[b * r]; });
    std::vector<point_t> out(flat.size());
    for (std::size_t i = 0; i < m; ++i)
        std::copy_n(flat.begin() + order[i] * r, r, out.begin() + i * r);
    flat = std::move(out);
}

Partition::Partition(std::uint32_t r, std::vector<point_t> flat_points)
    : r_(r), flat_(std::move(flat_points)) {
    canonicalize_parts(r_, flat_);
}

Partition Partition::from_parts(std::uint32_t r, const std::vector<std::vector<point_t>>& parts) {
    std::vector<point_t> flat;
    for (const auto& p : parts) {
        if (p.size() != r) throw precondition_error("every part must have exactly r points");
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return Partition(r, std::move(flat));
}

std::vector<std::vector<point_t>> Partition::parts() const {
    std::vector<std::vector<point_t>> out(part_count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto sp = part(i);
        out[i].assign(sp.begin(), sp.end());
    }
    return out;
}

Partition random_partition(const DegreeSequence& k, RandomStream& rng) {
    if (!k.divisible()) throw divisibility_error("degree sum not divisible by r");
    std::vector<point_t> pts(k.M());
    std::iota(pts.begin(), pts.end(), 0);
    rng.shuffle(pts);
    return Partition(k.r(), std::move(pts));
}

namespace detail {

ClassSummary classify_span(std::span<const point_t> flat, std::uint32_t r,
                           const CellLayout& layout, std::uint64_t cap_n,
                           ClassifyScratch& scratch) {
    const std::size_t m = r ? flat.size() / r : 0;
    scratch.edge_cells.resize(flat.size());
    scratch.loopy.assign(m, 0);

    ClassSummary s{true, true, true, true, true, 0};
    for (std::size_t i = 0; i < m; ++i) {
        auto* cells = scratch.edge_cells.data() + i * r;
        for (std::uint32_t j = 0; j < r; ++j) cells[j] = layout.cell_of(flat[i * r + j]);
        std::sort(cells, cells + r);
        std::uint32_t doubled = 0;
        bool loop = false;
        for (std::uint32_t j = 0; j < r;) {
            std::uint32_t run = 1;
            while (j + run < r && cells[j + run] == cells[j]) ++run;
            if (run >= 2) loop = true;
            if (run >= 3) s.prop_i = false;
            if (run == 2) ++doubled;
            j += run;
        }
        if (doubled >= 2) s.prop_ii = false;
        if (loop) {
            scratch.loopy[i] = 1;
            ++s.loop_parts;
            s.simple = false;
        }
    }
    for (std::size_t a = 0; a + 1 < m; ++a) {
        const auto* ea = scratch.edge_cells.data() + a * r;
        for (std::size_t b = a + 1; b < m; ++b) {
            const auto* eb = scratch.edge_cells.data() + b * r;
            std::uint32_t i = 0, j = 0, common = 0;
            while (i < r && j < r) {
                if (ea[i] < eb[j]) ++i;
                else if (eb[j] < ea[i]) ++j;
                else { ++common; ++i; ++j; }
            }
            if (common >= 3) s.prop_iii = false;
            if (common == r) s.simple = false;  // identical edges
        }
    }
    s.prop_iv = s.loop_parts <= cap_n;
    return s;
}

}  // namespace detail

HypergraphView edges_of(const Partition& q, const CellLayout& layout) {
    HypergraphView h;
    h.n = std::uint32_t(layout.n());
    h.edges.resize(q.part_count());
    for (std::size_t i = 0; i < q.part_count(); ++i) {
        auto sp = q.part(i);
        auto& e = h.edges[i];
        e.reserve(sp.size());
        for (point_t p : sp) e.push_back(layout.cell_of(p) + 1);
        std::sort(e.begin(), e.end());
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::uint64_t loop_part_count(const Partition& q, const CellLayout& layout) {
    detail::ClassifyScratch scratch;
    return detail::classify_span(q.flat(), q.r(), layout, ~std::uint64_t(0), scratch).loop_parts;
}

bool is_simple(const Partition& q, const CellLayout& layout) {
    detail::ClassifyScratch scratch;
    return detail::classify_span(q.flat(), q.r(), layout, ~std::uint64_t(0), scratch).simple;
}

LambdaPlusReport classify_lambda_plus(const Partition& q, const CellLayout& layout,
                                      std::uint64_t cap_n) {
    const std::uint32_t r = q.r();
    const std::size_t m = q.part_count();
    LambdaPlusReport rep;

    std::vector<std::vector<std::uint32_t>> edges(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto sp = q.part(i);
        auto& e = edges[i];
        e.reserve(r);
        for (point_t p : sp) e.push_back(layout.cell_of(p));
        std::sort(e.begin(), e.end());

        std::uint32_t doubled = 0;
        bool loop = false;
        for (std::uint32_t j = 0; j < r;) {
            std::uint32_t run = 1;
            while (j + run < r && e[j + run] == e[j]) ++run;
            if (run >= 2) loop = true;
            if (run >= 3 && rep.prop_i) {
                rep.prop_i = false;
                rep.violations.push_back({'1', int(i), -1});
            }
            if (run == 2) ++doubled;
            j += run;
        }
        if (doubled >= 2) {
            rep.prop_ii = false;
            rep.violations.push_back({'2', int(i), -1});
        }
        if (loop) ++rep.loop_parts;
    }
    for (std::size_t a = 0; a + 1 < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            std::uint32_t i = 0, j = 0, common = 0;
            while (i < r && j < r) {
                if (edges[a][i] < edges[b][j]) ++i;
                else if (edges[b][j] < edges[a][i]) ++j;
                else { ++common; ++i; ++j; }
            }
            if (common >= 3) {
                rep.prop_iii = false;
                rep.violations.push_back({'3', int(a), int(b)});
            }
        }
    if (rep.loop_parts > cap_n) {
        rep.prop_iv = false;
        rep.violations.push_back({'4', -1, -1});
    }
    return rep;
}

}  // namespace hyperdeg
