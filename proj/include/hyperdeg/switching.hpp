#pragma once

#include <cstdint>
#include <vector>

#include "hyperdeg/configuration.hpp"

namespace hyperdeg {

/* A switching moves a same-cell pair (x1,x2) out of one part in exchange for
   y1,y2 from two other parts.  The same 4 points, read against the switched
   partition, describe the inverse move. */
struct SwitchingTuple {
    point_t x1, x2, y1, y2;

    friend bool operator==(const SwitchingTuple&, const SwitchingTuple&) = default;
};

enum class Condition : std::uint8_t { one, two, three };

/* conditions is empty for legal moves; for illegal moves it lists which of
   the structural obstructions hold (never empty, which the tests assert). */
struct LegalityDiagnosis {
    bool legal = false;
    bool reverse = false;
    std::vector<Condition> conditions;
};

const char* condition_label(Condition c, bool reverse);

/* Apply the forward move: U loses the loop pair and gains y1,y2; each W_j
   trades y_j for x_j.  Throws precondition_error unless t is structurally a
   forward move in q ({x1,x2} a same-cell pair inside one part, y_j in two
   further distinct parts, cell(y1) != cell(y2)). */
Partition apply_forward(const Partition& q, const CellLayout& layout, const SwitchingTuple& t);

/* exact inverse of apply_forward */
Partition apply_reverse(const Partition& q, const CellLayout& layout, const SwitchingTuple& t);

/* Candidate set for forward moves: ordered loop pairs, y_j drawn from
   distinct loop-free parts, cell(y1) != cell(y2).  With q in Lambda+ the size
   is at most 2*ell*M^2. */
std::vector<SwitchingTuple> enumerate_forward_candidates(const Partition& q,
                                                         const CellLayout& layout);

/* Candidate set for reverse moves: ordered same-cell pairs (x1,x2) in
   distinct parts, ordered point pairs (y1,y2) inside a loop-free third part. */
std::vector<SwitchingTuple> enumerate_reverse_candidates(const Partition& q,
                                                         const CellLayout& layout);

/* Every structurally valid move, dropping the loop-free side conditions of
   the candidate sets.  This is the universe on which forward and reverse
   legal moves are in exact bijection, which the double-counting check uses. */
std::vector<SwitchingTuple> enumerate_forward_switchings(const Partition& q,
                                                         const CellLayout& layout);
std::vector<SwitchingTuple> enumerate_reverse_switchings(const Partition& q,
                                                         const CellLayout& layout);

/* Obstructions evaluated on the edges of q, regardless of legality:
   forward: (I) some W_j has a loop, (II) the three edges are not pairwise
   disjoint, (III) an outside edge meets both e(U) and some e(W_j).
   reverse: primed analogues on the hatted parts. */
std::vector<Condition> forward_conditions(const Partition& q, const CellLayout& layout,
                                          const SwitchingTuple& t);
std::vector<Condition> reverse_conditions(const Partition& q, const CellLayout& layout,
                                          const SwitchingTuple& t);

/* legal iff the moved partition lands in the adjacent loop class and stays
   inside Lambda+ (checked operationally by applying the move) */
LegalityDiagnosis diagnose_forward(const Partition& q, const CellLayout& layout,
                                   const SwitchingTuple& t, std::uint64_t cap_n);
LegalityDiagnosis diagnose_reverse(const Partition& q, const CellLayout& layout,
                                   const SwitchingTuple& t, std::uint64_t cap_n);

/* model ratio |C_ell| / |C_{ell-1}| ~ (r-1) M_2 / (2 ell M) */
double ratio_prediction(const DegreeSequence& k, std::uint64_t ell);

}  // namespace hyperdeg
