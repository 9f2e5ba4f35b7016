#include "hyperdeg/summation.hpp"

#include <algorithm>
#include <cmath>

#include "hyperdeg/errors.hpp"

namespace hyperdeg {

SummationResult evaluate_summation(const SummationProblem& p) {
    if (p.N == 0) throw precondition_error("summation needs N >= 1");
    if (p.a.size() != p.N || p.c.size() != p.N)
        throw precondition_error("summation needs N coefficients for A and C");

    if (!(p.c_hat > 0.0 && p.c_hat < 1.0 / 3.0))
        throw invariant_error("c_hat must lie in (0, 1/3)", 0);
    const double a_min = *std::min_element(p.a.begin(), p.a.end());
    const double a_max = *std::max_element(p.a.begin(), p.a.end());
    const double c_min = *std::min_element(p.c.begin(), p.c.end());
    const double c_max = *std::max_element(p.c.begin(), p.c.end());
    if (std::max({a_max / p.N, std::abs(c_min), std::abs(c_max)}) > p.c_hat)
        throw invariant_error("A_max/N and the C range must stay within c_hat", 0);

    SummationResult res;
    res.n.resize(p.N + 1);
    res.n[0] = 1.0;
    res.total = 1.0;
    for (std::uint32_t i = 1; i <= p.N; ++i) {
        const double a_i = p.a[i - 1], c_i = p.c[i - 1];
        if (!(a_i >= 0.0))
            throw invariant_error("A(" + std::to_string(i) + ") is negative", int(i));
        const double step = a_i - double(i - 1) * c_i;
        if (!(step >= 0.0))
            throw invariant_error("A(" + std::to_string(i) + ") - (i-1) C(i) is negative",
                                  int(i));
        res.n[i] = step * res.n[i - 1] / double(i);
        res.total += res.n[i];
    }

    const double tail = std::pow(2.0 * std::exp(1.0) * p.c_hat, double(p.N));
    res.sigma1 = std::exp(a_min - 0.5 * a_min * c_max) - tail;
    res.sigma2 = std::exp(a_max - 0.5 * a_max * c_min + 0.5 * a_max * c_min * c_min) + tail;
    return res;
}

bool sandwich_holds(const SummationResult& s, double rel_tol) {
    /* the tail term can underflow past the last ulp of the exponential, so
       bound coincidence is judged with a relative tolerance */
    const double scale =
        std::max({1.0, std::abs(s.total), std::abs(s.sigma1), std::abs(s.sigma2)});
    return s.sigma1 - s.total <= rel_tol * scale && s.total - s.sigma2 <= rel_tol * scale;
}

PSimpleModel p_simple_from_switching_model(const DegreeSequence& k) {
    PSimpleModel model;
    if (k.M() == 0) {
        model.lower = 1.0;
        return model;  // the empty configuration is simple with certainty
    }

    const double x = (k.r() - 1) * to_double(k.moment(2)) / (2.0 * double(k.M()));
    model.estimate = std::exp(-x);

    SummationProblem p;
    const std::uint64_t n = loop_cap_N(k);
    p.N = std::uint32_t(std::min<std::uint64_t>(n, 1u << 20));
    p.a.assign(p.N, x);
    p.c.assign(p.N, 0.0);
    p.c_hat = 1.0 / 16.0;
    try {
        const SummationResult s = evaluate_summation(p);
        if (s.sigma1 > 0.0 && s.sigma2 > 0.0) {
            model.lower = 1.0 / s.sigma2;
            model.upper = 1.0 / s.sigma1;
            return model;
        }
    } catch (const invariant_error&) {
        /* fall through to the degraded bracket */
    }
    model.degraded = true;
    model.lower = 0.0;
    model.upper = 1.0;
    return model;
}

}  // namespace hyperdeg
