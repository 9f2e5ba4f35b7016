#pragma once

#include <cstdint>
#include <vector>

#include "hyperdeg/core.hpp"

namespace hyperdeg {

/* Recurrence n_0 = 1, n_i = (A(i) - (i-1) C(i)) n_{i-1} / i for 1 <= i <= N,
   with A(i) stored in a[i-1] and C(i) in c[i-1].  Admissible when every
   A(i) >= 0, every A(i) - (i-1)C(i) >= 0, 0 < c_hat < 1/3 and
   max(A_max/N, |C_min|, |C_max|) <= c_hat. */
struct SummationProblem {
    std::uint32_t N = 0;
    std::vector<double> a;
    std::vector<double> c;
    double c_hat = 0.0;
};

struct SummationResult {
    std::vector<double> n;  // n_0..n_N
    double total = 0.0;
    double sigma1 = 0.0;  // exp(A_min - A_min C_max / 2) - (2 e c_hat)^N
    double sigma2 = 0.0;  // exp(A_max - A_max C_min / 2 + A_max C_min^2 / 2) + (2 e c_hat)^N
};

/* throws invariant_error carrying the 1-based failing index (0 for the
   global c_hat conditions) when the problem is not admissible */
SummationResult evaluate_summation(const SummationProblem& p);

/* sigma1 <= total <= sigma2 up to floating-point rounding; the bounds and
   the total coincide to the last ulp when the tail term vanishes */
bool sandwich_holds(const SummationResult& s, double rel_tol = 1e-12);

/* P bracket from the constant-ratio model A(i) = (r-1) M_2 / (2M), C = 0,
   N = loop_cap_N(k), c_hat = 1/16.  estimate = exp(-(r-1) M_2 / (2M)),
   lower = 1/sigma2, upper = 1/sigma1.  If the model ever failed its own
   admissibility conditions the bracket degrades to [0,1] and the flag is
   set instead of aborting. */
struct PSimpleModel {
    double estimate = 1.0;
    double lower = 0.0;
    double upper = 1.0;
    bool degraded = false;
};

PSimpleModel p_simple_from_switching_model(const DegreeSequence& k);

}  // namespace hyperdeg
