#pragma once

/* Shared enumeration/application kernels for switching moves.  Used by the
   public switching API and by the exhaustive verifier, so both sides agree
   on the tuple universes by construction. */

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperdeg/configuration.hpp"
#include "hyperdeg/switching.hpp"

namespace hyperdeg::detail {

struct PartsIndex {
    std::uint32_t r = 0;
    std::vector<std::uint32_t> part_of;  // point -> part
    std::vector<std::uint8_t> loopy;     // part -> contains a same-cell pair

    void build(std::span<const point_t> flat, std::uint32_t rr, const CellLayout& layout) {
        r = rr;
        const std::size_t m = r ? flat.size() / r : 0;
        part_of.assign(flat.size(), 0);
        loopy.assign(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::uint32_t a = 0; a < r; ++a) {
                const point_t p = flat[i * r + a];
                part_of[p] = std::uint32_t(i);
                for (std::uint32_t b = a + 1; b < r; ++b)
                    if (layout.cell_of(p) == layout.cell_of(flat[i * r + b])) loopy[i] = 1;
            }
        }
    }
};

/* Forward moves: ordered same-cell pairs (x1,x2) inside one part, y1,y2 from
   two further distinct parts with distinct cells.  candidates_only adds the
   loop-free requirement on both y-parts. */
template <class F>
void for_each_forward(std::span<const point_t> flat, const CellLayout& layout,
                      const PartsIndex& idx, bool candidates_only, F&& fn) {
    const std::uint32_t r = idx.r;
    const std::size_t m = r ? flat.size() / r : 0;
    for (std::size_t u = 0; u < m; ++u) {
        if (!idx.loopy[u]) continue;
        for (std::uint32_t a = 0; a < r; ++a)
            for (std::uint32_t b = 0; b < r; ++b) {
                if (a == b) continue;
                const point_t x1 = flat[u * r + a], x2 = flat[u * r + b];
                if (layout.cell_of(x1) != layout.cell_of(x2)) continue;
                for (point_t y1 : flat) {
                    const std::uint32_t w1 = idx.part_of[y1];
                    if (w1 == u) continue;
                    if (candidates_only && idx.loopy[w1]) continue;
                    for (point_t y2 : flat) {
                        const std::uint32_t w2 = idx.part_of[y2];
                        if (w2 == u || w2 == w1) continue;
                        if (candidates_only && idx.loopy[w2]) continue;
                        if (layout.cell_of(y1) == layout.cell_of(y2)) continue;
                        fn(SwitchingTuple{x1, x2, y1, y2});
                    }
                }
            }
    }
}

/* Reverse moves: ordered same-cell pairs (x1,x2) in two distinct parts,
   ordered distinct-cell pairs (y1,y2) inside a third part.  candidates_only
   restricts the y-part to loop-free ones (where distinct cells is automatic). */
template <class F>
void for_each_reverse(std::span<const point_t> flat, const CellLayout& layout,
                      const PartsIndex& idx, bool candidates_only, F&& fn) {
    const std::uint32_t r = idx.r;
    const std::size_t m = r ? flat.size() / r : 0;
    for (point_t x1 : flat)
        for (point_t x2 : flat) {
            if (x1 == x2 || layout.cell_of(x1) != layout.cell_of(x2)) continue;
            const std::uint32_t w1 = idx.part_of[x1], w2 = idx.part_of[x2];
            if (w1 == w2) continue;
            for (std::size_t u = 0; u < m; ++u) {
                if (u == w1 || u == w2) continue;
                if (candidates_only && idx.loopy[u]) continue;
                for (std::uint32_t a = 0; a < r; ++a)
                    for (std::uint32_t b = 0; b < r; ++b) {
                        if (a == b) continue;
                        const point_t y1 = flat[u * r + a], y2 = flat[u * r + b];
                        if (layout.cell_of(y1) == layout.cell_of(y2))
                            continue;  // vacuous for loop-free parts
                        fn(SwitchingTuple{x1, x2, y1, y2});
                    }
            }
        }
}

inline void sort_block(point_t* first, std::uint32_t r) {
    for (std::uint32_t i = 1; i < r; ++i)
        for (std::uint32_t j = i; j > 0 && first[j] < first[j - 1]; --j)
            std::swap(first[j], first[j - 1]);
}

/* allocation-free canonicalization for the small partitions the verifier
   moves around; assumes a valid point cover */
inline void canonicalize_small(std::uint32_t r, std::vector<point_t>& flat) {
    const std::size_t m = r ? flat.size() / r : 0;
    for (std::size_t i = 0; i < m; ++i) sort_block(flat.data() + i * r, r);
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = i; j > 0 && flat[j * r] < flat[(j - 1) * r]; --j)
            std::swap_ranges(flat.begin() + (j - 1) * r, flat.begin() + j * r,
                             flat.begin() + j * r);
}

/* dst := src with the forward move applied (x-slots take y1,y2; y-slots take
   x1,x2), then canonicalized */
inline void apply_forward_into(std::span<const point_t> src, std::uint32_t r,
                               const SwitchingTuple& t, std::vector<point_t>& dst) {
    dst.assign(src.begin(), src.end());
    for (auto& p : dst) {
        if (p == t.x1) p = t.y1;
        else if (p == t.x2) p = t.y2;
        else if (p == t.y1) p = t.x1;
        else if (p == t.y2) p = t.x2;
    }
    canonicalize_small(r, dst);
}

/* the reverse move swaps the same two point pairs, so the kernel coincides */
inline void apply_reverse_into(std::span<const point_t> src, std::uint32_t r,
                               const SwitchingTuple& t, std::vector<point_t>& dst) {
    apply_forward_into(src, r, t, dst);
}

/* edge material for the obstruction checks: per-part sorted cell lists */
struct EdgeScratch {
    std::vector<std::uint32_t> cells;  // m*r

    void build(std::span<const point_t> flat, std::uint32_t r, const CellLayout& layout) {
        cells.resize(flat.size());
        const std::size_t m = r ? flat.size() / r : 0;
        for (std::size_t i = 0; i < m; ++i) {
            auto* e = cells.data() + i * r;
            for (std::uint32_t j = 0; j < r; ++j) e[j] = layout.cell_of(flat[i * r + j]);
            sort_block(e, r);
        }
    }

    bool meets(std::size_t a, std::size_t b, std::uint32_t r) const {
        const auto* ea = cells.data() + a * r;
        const auto* eb = cells.data() + b * r;
        std::uint32_t i = 0, j = 0;
        while (i < r && j < r) {
            if (ea[i] < eb[j]) ++i;
            else if (eb[j] < ea[i]) ++j;
            else return true;
        }
        return false;
    }
};

/* obstruction sets on the unswitched partition; parts identified by index */
inline void obstructions(const EdgeScratch& edges, const PartsIndex& idx, std::uint32_t r,
                         std::size_t m, std::uint32_t u, std::uint32_t w1, std::uint32_t w2,
                         bool reverse, std::vector<Condition>& out) {
    out.clear();
    /* forward (I): a loop in W_1 or W_2; reverse (I'): a loop in U-hat, W-hat_1 or W-hat_2 */
    if (idx.loopy[w1] || idx.loopy[w2] || (reverse && idx.loopy[u]))
        out.push_back(Condition::one);
    /* forward (II): e, f_1, f_2 not pairwise disjoint; reverse (II'): e-hat meets some f-hat_j */
    const bool e_meets = edges.meets(u, w1, r) || edges.meets(u, w2, r);
    if (reverse ? e_meets : (e_meets || edges.meets(w1, w2, r)))
        out.push_back(Condition::two);
    for (std::size_t t = 0; t < m; ++t) {
        if (t == u || t == w1 || t == w2) continue;
        if (edges.meets(t, u, r) && (edges.meets(t, w1, r) || edges.meets(t, w2, r))) {
            out.push_back(Condition::three);
            break;
        }
    }
}

}  // namespace hyperdeg::detail
