#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperdeg/core.hpp"
#include "hyperdeg/rng.hpp"

namespace hyperdeg {

using point_t = std::uint32_t;

/* Maps the M points onto cells: cell i holds k_i consecutive points. */
class CellLayout {
public:
    explicit CellLayout(const DegreeSequence& k);

    std::uint64_t M() const { return cell_of_.size(); }
    std::size_t n() const { return offset_.size() - 1; }
    std::uint32_t cell_of(point_t p) const { return cell_of_[p]; }
    std::uint64_t cell_begin(std::uint32_t cell) const { return offset_[cell]; }
    std::uint64_t cell_size(std::uint32_t cell) const { return offset_[cell + 1] - offset_[cell]; }

private:
    std::vector<std::uint32_t> cell_of_;
    std::vector<std::uint64_t> offset_;
};

/* Partition of the points into parts of size r, kept canonical: each part
   ascending, parts ordered by first element. */
class Partition {
public:
    Partition() : r_(0) {}
    Partition(std::uint32_t r, std::vector<point_t> flat_points);  // canonicalizes
    static Partition from_parts(std::uint32_t r, const std::vector<std::vector<point_t>>& parts);

    std::uint32_t r() const { return r_; }
    std::size_t part_count() const { return r_ ? flat_.size() / r_ : 0; }
    std::uint64_t M() const { return flat_.size(); }
    std::span<const point_t> part(std::size_t i) const { return {flat_.data() + i * r_, r_}; }
    const std::vector<point_t>& flat() const { return flat_; }
    std::vector<std::vector<point_t>> parts() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    friend struct partition_access;
    std::uint32_t r_;
    std::vector<point_t> flat_;
};

/* validate that flat covers 0..M-1 exactly once and canonicalize in place */
void canonicalize_parts(std::uint32_t r, std::vector<point_t>& flat);

/* Multigraph view: edges are sorted multisets of 1-based vertex ids, the
   whole edge list sorted as well. */
struct HypergraphView {
    std::uint32_t n = 0;
    std::vector<std::vector<std::uint32_t>> edges;

    friend bool operator==(const HypergraphView& a, const HypergraphView& b) = default;
};

struct LambdaViolation {
    char property;  // '1'..'4' for properties (i)..(iv)
    int part_a;     // offending part, -1 for (iv)
    int part_b;     // second part for (iii), else -1
};

struct LambdaPlusReport {
    bool prop_i = true;    // no cell appears 3+ times in a part
    bool prop_ii = true;   // at most one doubled cell per part
    bool prop_iii = true;  // pairwise edge multiset intersections <= 2
    bool prop_iv = true;   // loop parts <= N
    std::uint64_t loop_parts = 0;
    std::vector<LambdaViolation> violations;

    bool in_lambda_plus() const { return prop_i && prop_ii && prop_iii && prop_iv; }
};

/* uniform over the partition space: shuffle the points, cut into r-blocks */
Partition random_partition(const DegreeSequence& k, RandomStream& rng);

HypergraphView edges_of(const Partition& q, const CellLayout& layout);

std::uint64_t loop_part_count(const Partition& q, const CellLayout& layout);

/* no loops and no repeated edges */
bool is_simple(const Partition& q, const CellLayout& layout);

LambdaPlusReport classify_lambda_plus(const Partition& q, const CellLayout& layout,
                                      std::uint64_t cap_n);

namespace detail {

/* Non-allocating classification core shared by the oracle and the switching
   verifier.  Works on the flat canonical point buffer. */
struct ClassifyScratch {
    std::vector<std::uint32_t> edge_cells;  // m*r sorted cell ids
    std::vector<std::uint8_t> loopy;        // per part
};

struct ClassSummary {
    bool prop_i, prop_ii, prop_iii, prop_iv;
    bool simple;
    std::uint64_t loop_parts;
    bool in_plus() const { return prop_i && prop_ii && prop_iii && prop_iv; }
};

ClassSummary classify_span(std::span<const point_t> flat, std::uint32_t r,
                           const CellLayout& layout, std::uint64_t cap_n,
                           ClassifyScratch& scratch);

}  // namespace detail

}  // namespace hyperdeg
