#include "hyperdeg/switching.hpp"

#include <utility>

#include "hyperdeg/errors.hpp"
#include "switching_kernels.hpp"

namespace hyperdeg {

namespace {

using detail::EdgeScratch;
using detail::PartsIndex;

struct MoveGeometry {
    std::uint32_t u;  // loop part (forward) / target part (reverse)
    std::uint32_t w1, w2;
};

PartsIndex index_of(const Partition& q, const CellLayout& layout) {
    PartsIndex idx;
    idx.build(q.flat(), q.r(), layout);
    return idx;
}

void require(bool ok, const char* what) {
    if (!ok) throw precondition_error(what);
}

void check_points(const Partition& q, const SwitchingTuple& t) {
    const std::uint64_t m = q.M();
    require(t.x1 < m && t.x2 < m && t.y1 < m && t.y2 < m, "switching point out of range");
    require(t.x1 != t.x2 && t.y1 != t.y2, "switching points must be distinct");
}

/* {x1,x2} a same-cell pair inside one part, y1,y2 in two further distinct
   parts, cell(y1) != cell(y2) */
MoveGeometry check_forward(const Partition& q, const CellLayout& layout, const PartsIndex& idx,
                           const SwitchingTuple& t) {
    check_points(q, t);
    require(layout.cell_of(t.x1) == layout.cell_of(t.x2), "x1,x2 must share a cell");
    const std::uint32_t u = idx.part_of[t.x1];
    require(idx.part_of[t.x2] == u, "x1,x2 must share a part");
    const std::uint32_t w1 = idx.part_of[t.y1], w2 = idx.part_of[t.y2];
    require(w1 != u && w2 != u && w1 != w2, "y1,y2 must sit in two parts away from the loop");
    require(layout.cell_of(t.y1) != layout.cell_of(t.y2), "y1,y2 must have distinct cells");
    return {u, w1, w2};
}

/* {x1,x2} a same-cell pair across two parts, y1,y2 a distinct-cell pair
   inside a third part */
MoveGeometry check_reverse(const Partition& q, const CellLayout& layout, const PartsIndex& idx,
                           const SwitchingTuple& t) {
    check_points(q, t);
    require(layout.cell_of(t.x1) == layout.cell_of(t.x2), "x1,x2 must share a cell");
    const std::uint32_t w1 = idx.part_of[t.x1], w2 = idx.part_of[t.x2];
    require(w1 != w2, "x1,x2 must sit in distinct parts");
    const std::uint32_t u = idx.part_of[t.y1];
    require(idx.part_of[t.y2] == u, "y1,y2 must share a part");
    require(u != w1 && u != w2, "y1,y2 must sit apart from x1,x2");
    require(layout.cell_of(t.y1) != layout.cell_of(t.y2), "y1,y2 must have distinct cells");
    return {u, w1, w2};
}

std::vector<Condition> conditions_for(const Partition& q, const CellLayout& layout,
                                      const PartsIndex& idx, const MoveGeometry& g,
                                      bool reverse) {
    EdgeScratch edges;
    edges.build(q.flat(), q.r(), layout);
    std::vector<Condition> out;
    detail::obstructions(edges, idx, q.r(), q.part_count(), g.u, g.w1, g.w2, reverse, out);
    return out;
}

LegalityDiagnosis diagnose(const Partition& q, const CellLayout& layout, const SwitchingTuple& t,
                           std::uint64_t cap_n, bool reverse) {
    const PartsIndex idx = index_of(q, layout);
    const MoveGeometry g =
        reverse ? check_reverse(q, layout, idx, t) : check_forward(q, layout, idx, t);

    detail::ClassifyScratch scratch;
    const auto before = detail::classify_span(q.flat(), q.r(), layout, cap_n, scratch);
    std::vector<point_t> moved;
    detail::apply_forward_into(q.flat(), q.r(), t, moved);
    const auto after = detail::classify_span(moved, q.r(), layout, cap_n, scratch);

    const std::uint64_t target =
        reverse ? before.loop_parts + 1 : before.loop_parts - 1;  // forward needs a loop part
    LegalityDiagnosis d;
    d.reverse = reverse;
    d.legal = after.in_plus() && after.loop_parts == target;
    if (!d.legal) d.conditions = conditions_for(q, layout, idx, g, reverse);
    return d;
}

}  // namespace

const char* condition_label(Condition c, bool reverse) {
    switch (c) {
        case Condition::one: return reverse ? "I'" : "I";
        case Condition::two: return reverse ? "II'" : "II";
        case Condition::three: return reverse ? "III'" : "III";
    }
    return "?";
}

Partition apply_forward(const Partition& q, const CellLayout& layout, const SwitchingTuple& t) {
    const PartsIndex idx = index_of(q, layout);
    check_forward(q, layout, idx, t);
    std::vector<point_t> moved;
    detail::apply_forward_into(q.flat(), q.r(), t, moved);
    return Partition(q.r(), std::move(moved));
}

Partition apply_reverse(const Partition& q, const CellLayout& layout, const SwitchingTuple& t) {
    const PartsIndex idx = index_of(q, layout);
    check_reverse(q, layout, idx, t);
    std::vector<point_t> moved;
    detail::apply_reverse_into(q.flat(), q.r(), t, moved);
    return Partition(q.r(), std::move(moved));
}

std::vector<SwitchingTuple> enumerate_forward_candidates(const Partition& q,
                                                         const CellLayout& layout) {
    const PartsIndex idx = index_of(q, layout);
    std::vector<SwitchingTuple> out;
    detail::for_each_forward(q.flat(), layout, idx, /*candidates_only=*/true,
                             [&](const SwitchingTuple& t) { out.push_back(t); });
    return out;
}

std::vector<SwitchingTuple> enumerate_reverse_candidates(const Partition& q,
                                                         const CellLayout& layout) {
    const PartsIndex idx = index_of(q, layout);
    std::vector<SwitchingTuple> out;
    detail::for_each_reverse(q.flat(), layout, idx, /*candidates_only=*/true,
                             [&](const SwitchingTuple& t) { out.push_back(t); });
    return out;
}

std::vector<SwitchingTuple> enumerate_forward_switchings(const Partition& q,
                                                         const CellLayout& layout) {
    const PartsIndex idx = index_of(q, layout);
    std::vector<SwitchingTuple> out;
    detail::for_each_forward(q.flat(), layout, idx, /*candidates_only=*/false,
                             [&](const SwitchingTuple& t) { out.push_back(t); });
    return out;
}

std::vector<SwitchingTuple> enumerate_reverse_switchings(const Partition& q,
                                                         const CellLayout& layout) {
    const PartsIndex idx = index_of(q, layout);
    std::vector<SwitchingTuple> out;
    detail::for_each_reverse(q.flat(), layout, idx, /*candidates_only=*/false,
                             [&](const SwitchingTuple& t) { out.push_back(t); });
    return out;
}

std::vector<Condition> forward_conditions(const Partition& q, const CellLayout& layout,
                                          const SwitchingTuple& t) {
    const PartsIndex idx = index_of(q, layout);
    const MoveGeometry g = check_forward(q, layout, idx, t);
    return conditions_for(q, layout, idx, g, /*reverse=*/false);
}

std::vector<Condition> reverse_conditions(const Partition& q, const CellLayout& layout,
                                          const SwitchingTuple& t) {
    const PartsIndex idx = index_of(q, layout);
    const MoveGeometry g = check_reverse(q, layout, idx, t);
    return conditions_for(q, layout, idx, g, /*reverse=*/true);
}

LegalityDiagnosis diagnose_forward(const Partition& q, const CellLayout& layout,
                                   const SwitchingTuple& t, std::uint64_t cap_n) {
    return diagnose(q, layout, t, cap_n, /*reverse=*/false);
}

LegalityDiagnosis diagnose_reverse(const Partition& q, const CellLayout& layout,
                                   const SwitchingTuple& t, std::uint64_t cap_n) {
    return diagnose(q, layout, t, cap_n, /*reverse=*/true);
}

double ratio_prediction(const DegreeSequence& k, std::uint64_t ell) {
    if (ell == 0) throw precondition_error("ratio is defined for ell >= 1");
    if (k.M() == 0) throw precondition_error("ratio needs a nonempty configuration");
    const double m2 = to_double(k.moment(2));
    return (k.r() - 1) * m2 / (2.0 * double(ell) * double(k.M()));
}

}  // namespace hyperdeg
