#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperdeg/errors.hpp"
#include "hyperdeg/serialize.hpp"

namespace py = pybind11;

namespace {

using hyperdeg::json;

py::object py_bigint(const hyperdeg::bigint& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object py_fraction(const hyperdeg::bigrat& v) {
    return py::module_::import("fractions")
        .attr("Fraction")(py_bigint(numerator(v)), py_bigint(denominator(v)));
}

/* reports cross the boundary as plain dicts/lists mirroring the CLI JSON */
py::object to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = to_py(value);
            return d;
        }
        case json::value_t::array: {
            py::list l;
            for (const json& v : j) l.append(to_py(v));
            return l;
        }
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        default: return py::none();
    }
}

hyperdeg::DegreeSequence seq(const std::vector<std::uint32_t>& degrees, std::uint32_t r) {
    return hyperdeg::DegreeSequence(r, degrees);
}

std::vector<std::vector<hyperdeg::point_t>> parts_of(const hyperdeg::Partition& q) {
    return q.parts();
}

hyperdeg::SwitchingTuple tuple_of(const std::vector<hyperdeg::point_t>& t) {
    if (t.size() != 4) throw hyperdeg::precondition_error("switching tuple needs 4 points");
    return {t[0], t[1], t[2], t[3]};
}

}  // namespace

PYBIND11_MODULE(_hyperdeg, m) {
    m.doc() = "counting, sampling and verification for uniform hypergraphs with given degrees";

    py::register_exception<hyperdeg::divisibility_error>(m, "DivisibilityError",
                                                         PyExc_ValueError);
    py::register_exception<hyperdeg::cap_exceeded_error>(m, "CapExceededError", PyExc_ValueError);
    py::register_exception<hyperdeg::precondition_error>(m, "PreconditionError",
                                                         PyExc_ValueError);
    py::register_exception<hyperdeg::invariant_error>(m, "InvariantError", PyExc_ValueError);
    py::register_exception<hyperdeg::rejection_exhausted_error>(m, "RejectionExhaustedError",
                                                                PyExc_RuntimeError);

    m.def(
        "partition_space_size",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r) {
            return py_bigint(hyperdeg::partition_space_size(seq(k, r)));
        },
        py::arg("degrees"), py::arg("r"), "M! / ((M/r)! (r!)^(M/r))");

    m.def(
        "asymptotic_count",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r) {
            return to_py(hyperdeg::count_result_to_json(hyperdeg::asymptotic_count(seq(k, r))));
        },
        py::arg("degrees"), py::arg("r"));

    m.def(
        "asymptotic_count_regular",
        [](std::size_t n, std::uint32_t degree, std::uint32_t r) {
            return to_py(
                hyperdeg::count_result_to_json(hyperdeg::asymptotic_count_regular(n, degree, r)));
        },
        py::arg("n"), py::arg("degree"), py::arg("r"));

    m.def(
        "loop_cap",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r) {
            return hyperdeg::loop_cap_N(seq(k, r));
        },
        py::arg("degrees"), py::arg("r"));

    m.def(
        "part_containment_probability",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t c) {
            return py_fraction(hyperdeg::part_containment_probability(seq(k, r), c));
        },
        py::arg("degrees"), py::arg("r"), py::arg("parts"));

    m.def(
        "census",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t cap_m,
           std::uint32_t workers) {
            return to_py(hyperdeg::census_to_json(hyperdeg::census(seq(k, r), cap_m, workers)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("cap_m") = hyperdeg::kDefaultCapM,
        py::arg("workers") = 1);

    m.def(
        "simple_hypergraph_count",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t cap_vertices,
           std::uint64_t cap_m) {
            return py_bigint(hyperdeg::enumerate_simple_hypergraphs(seq(k, r), cap_vertices, cap_m));
        },
        py::arg("degrees"), py::arg("r"), py::arg("cap_vertices") = hyperdeg::kDefaultCapVertices,
        py::arg("cap_m") = hyperdeg::kDefaultCapM);

    m.def(
        "exact_ratio",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t ell,
           std::uint64_t cap_m) { return py_fraction(hyperdeg::exact_ratio(seq(k, r), ell, cap_m)); },
        py::arg("degrees"), py::arg("r"), py::arg("ell"),
        py::arg("cap_m") = hyperdeg::kDefaultCapM);

    m.def(
        "ratio_prediction",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t ell) {
            return hyperdeg::ratio_prediction(seq(k, r), ell);
        },
        py::arg("degrees"), py::arg("r"), py::arg("ell"));

    m.def(
        "estimate_p_simple",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t samples,
           std::uint64_t seed, std::uint32_t workers) {
            return to_py(hyperdeg::estimate_report_to_json(
                hyperdeg::estimate_p_simple(seq(k, r), samples, seed, workers)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("workers") = 1);

    m.def(
        "sample_partition",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t seed) {
            const hyperdeg::DegreeSequence ks = seq(k, r);
            hyperdeg::RandomStream rng(hyperdeg::stream_seed(seed, 0));
            return parts_of(hyperdeg::random_partition(ks, rng));
        },
        py::arg("degrees"), py::arg("r"), py::arg("seed") = 0);

    m.def(
        "sample_simple_hypergraph",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t seed,
           std::uint64_t max_tries) {
            return hyperdeg::sample_simple_hypergraph(seq(k, r), seed, max_tries).edges;
        },
        py::arg("degrees"), py::arg("r"), py::arg("seed") = 0, py::arg("max_tries") = 1000);

    m.def(
        "p_simple_model",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r) {
            const hyperdeg::PSimpleModel mod = hyperdeg::p_simple_from_switching_model(seq(k, r));
            return py::dict(py::arg("estimate") = mod.estimate, py::arg("lower") = mod.lower,
                            py::arg("upper") = mod.upper, py::arg("degraded") = mod.degraded);
        },
        py::arg("degrees"), py::arg("r"));

    m.def(
        "evaluate_summation",
        [](std::uint32_t N, const std::vector<double>& a, const std::vector<double>& c,
           double c_hat) {
            const hyperdeg::SummationResult s =
                hyperdeg::evaluate_summation({N, a, c, c_hat});
            return py::dict(py::arg("n") = s.n, py::arg("total") = s.total,
                            py::arg("sigma1") = s.sigma1, py::arg("sigma2") = s.sigma2,
                            py::arg("sandwich") = hyperdeg::sandwich_holds(s));
        },
        py::arg("N"), py::arg("a"), py::arg("c"), py::arg("c_hat"));

    m.def(
        "apply_switching",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r,
           const std::vector<std::vector<hyperdeg::point_t>>& parts,
           const std::vector<hyperdeg::point_t>& t, bool reverse) {
            const hyperdeg::DegreeSequence ks = seq(k, r);
            const hyperdeg::CellLayout layout(ks);
            const hyperdeg::Partition q = hyperdeg::Partition::from_parts(r, parts);
            return parts_of(reverse ? hyperdeg::apply_reverse(q, layout, tuple_of(t))
                                    : hyperdeg::apply_forward(q, layout, tuple_of(t)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("parts"), py::arg("tuple"),
        py::arg("reverse") = false);

    m.def(
        "diagnose_switching",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r,
           const std::vector<std::vector<hyperdeg::point_t>>& parts,
           const std::vector<hyperdeg::point_t>& t, bool reverse) {
            const hyperdeg::DegreeSequence ks = seq(k, r);
            const hyperdeg::CellLayout layout(ks);
            const hyperdeg::Partition q = hyperdeg::Partition::from_parts(r, parts);
            const std::uint64_t cap_n = ks.M() ? hyperdeg::loop_cap_N(ks) : 0;
            const hyperdeg::LegalityDiagnosis d =
                reverse ? hyperdeg::diagnose_reverse(q, layout, tuple_of(t), cap_n)
                        : hyperdeg::diagnose_forward(q, layout, tuple_of(t), cap_n);
            return to_py(hyperdeg::diagnosis_to_json(d));
        },
        py::arg("degrees"), py::arg("r"), py::arg("parts"), py::arg("tuple"),
        py::arg("reverse") = false);

    m.def(
        "classify_partition",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r,
           const std::vector<std::vector<hyperdeg::point_t>>& parts) {
            const hyperdeg::DegreeSequence ks = seq(k, r);
            const hyperdeg::CellLayout layout(ks);
            const hyperdeg::Partition q = hyperdeg::Partition::from_parts(r, parts);
            const std::uint64_t cap_n = ks.M() ? hyperdeg::loop_cap_N(ks) : 0;
            const hyperdeg::LambdaPlusReport rep =
                hyperdeg::classify_lambda_plus(q, layout, cap_n);
            return py::dict(py::arg("in_restricted_space") = rep.in_lambda_plus(),
                            py::arg("loop_parts") = rep.loop_parts,
                            py::arg("simple") = hyperdeg::is_simple(q, layout));
        },
        py::arg("degrees"), py::arg("r"), py::arg("parts"));

    m.def(
        "verify_ratios",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t cap_m) {
            return to_py(hyperdeg::ratios_to_json(hyperdeg::verify_ratios(seq(k, r), cap_m)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("cap_m") = hyperdeg::kDefaultCapM);

    m.def(
        "verify_double_count",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t cap_m) {
            return to_py(
                hyperdeg::double_count_to_json(hyperdeg::verify_double_count(seq(k, r), cap_m)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("cap_m") = hyperdeg::kDefaultCapM);

    m.def(
        "verify_necessity",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, bool reverse,
           std::uint64_t cap_m) {
            const auto rep = reverse ? hyperdeg::verify_reverse_necessity(seq(k, r), cap_m)
                                     : hyperdeg::verify_forward_necessity(seq(k, r), cap_m);
            return to_py(hyperdeg::necessity_to_json(rep));
        },
        py::arg("degrees"), py::arg("r"), py::arg("reverse") = false,
        py::arg("cap_m") = hyperdeg::kDefaultCapM);

    m.def(
        "verify_summation",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t trials,
           std::uint64_t seed) {
            return to_py(hyperdeg::summation_verify_to_json(
                hyperdeg::verify_summation(seq(k, r), trials, seed)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("trials") = 1000, py::arg("seed") = 0);

    m.def(
        "verify_identity",
        [](const std::vector<std::uint32_t>& k, std::uint32_t r, std::uint64_t cap_m,
           std::uint64_t cap_vertices) {
            return to_py(hyperdeg::identity_to_json(
                hyperdeg::verify_identity(seq(k, r), cap_m, cap_vertices)));
        },
        py::arg("degrees"), py::arg("r"), py::arg("cap_m") = hyperdeg::kDefaultCapM,
        py::arg("cap_vertices") = hyperdeg::kDefaultCapVertices);
}
