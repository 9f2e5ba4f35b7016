#include "hyperdeg/serialize.hpp"

#include "hyperdeg/errors.hpp"

namespace hyperdeg {

namespace {

std::string rat_str(const bigrat& x) {
    const bigint den = denominator(x);
    if (den == 1) return numerator(x).str();
    return numerator(x).str() + "/" + den.str();
}

json parts_array(const Partition& q) {
    json arr = json::array();
    for (std::size_t i = 0; i < q.part_count(); ++i) {
        const auto part = q.part(i);
        arr.push_back(std::vector<point_t>(part.begin(), part.end()));
    }
    return arr;
}

}  // namespace

json partition_to_json(const Partition& q) {
    return json{{"r", q.r()}, {"parts", parts_array(q)}};
}

Partition partition_from_json(const json& j, std::uint32_t r) {
    const json& src = j.contains("parts") ? j.at("parts") : j;
    if (!src.is_array()) throw precondition_error("partition json must be an array of parts");
    if (j.contains("r")) r = j.at("r").get<std::uint32_t>();
    std::vector<std::vector<point_t>> parts;
    for (const json& p : src) parts.push_back(p.get<std::vector<point_t>>());
    return Partition::from_parts(r, parts);
}

json hypergraph_to_json(const HypergraphView& h) {
    return json{{"n", h.n}, {"edges", h.edges}};
}

json tuple_to_json(const SwitchingTuple& t) {
    return json{{"x1", t.x1}, {"x2", t.x2}, {"y1", t.y1}, {"y2", t.y2}};
}

SwitchingTuple tuple_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 4) throw precondition_error("switching tuple needs 4 points");
        return {j.at(0).get<point_t>(), j.at(1).get<point_t>(), j.at(2).get<point_t>(),
                j.at(3).get<point_t>()};
    }
    return {j.at("x1").get<point_t>(), j.at("x2").get<point_t>(), j.at("y1").get<point_t>(),
            j.at("y2").get<point_t>()};
}

json diagnosis_to_json(const LegalityDiagnosis& d) {
    json conds = json::array();
    for (Condition c : d.conditions) conds.push_back(condition_label(c, d.reverse));
    return json{{"legal", d.legal},
                {"direction", d.reverse ? "reverse" : "forward"},
                {"conditions", conds}};
}

json census_to_json(const ExactCensus& c) {
    json classes = json::object();
    for (const auto& [ell, size] : c.class_sizes) classes[std::to_string(ell)] = size.str();
    return json{{"lambda_size", c.lambda_size.str()},
                {"lambda_plus_size", c.lambda_plus_size.str()},
                {"class_sizes", classes},
                {"simple_count", c.simple_count.str()},
                {"p_simple", rat_str(c.p_simple)},
                {"p_simple_value", to_double(c.p_simple)},
                {"hypergraph_count", c.hypergraph_count.str()},
                {"loop_cap", c.cap_n}};
}

json estimate_report_to_json(const EstimateReport& r) {
    return json{{"samples", r.samples},   {"successes", r.successes},
                {"p_hat", r.p_hat},       {"std_err", r.std_err},
                {"ci_low", r.ci_low},     {"ci_high", r.ci_high},
                {"seed", r.seed},         {"workers", r.workers}};
}

json count_result_to_json(const CountResult& c) {
    json out{{"leading_term", rat_str(c.leading_term)},
             {"leading_term_value", to_double(c.leading_term)},
             {"log_correction", c.log_correction},
             {"estimate", c.estimate}};
    if (c.exact_value) out["exact"] = c.exact_value->str();
    return out;
}

json ratios_to_json(const RatiosReport& r) {
    json rows = json::array();
    for (const RatioRow& row : r.rows)
        rows.push_back(json{{"ell", row.ell},
                            {"exact", rat_str(row.exact)},
                            {"exact_value", row.exact_value},
                            {"predicted", row.predicted},
                            {"rel_dev", row.rel_dev}});
    return json{{"rows", rows}, {"pass", r.pass}};
}

json double_count_to_json(const DoubleCountReport& r) {
    json rows = json::array();
    for (const DoubleCountRow& row : r.rows)
        rows.push_back(json{{"ell", row.ell},
                            {"class_size", row.class_size},
                            {"forward_legal", row.forward_legal},
                            {"reverse_legal", row.reverse_legal},
                            {"equal", row.equal}});
    return json{{"rows", rows}, {"pass", r.pass}};
}

json necessity_to_json(const NecessityReport& r) {
    json exs = json::array();
    for (const NecessityCounterexample& e : r.counterexamples)
        exs.push_back(json{{"partition", partition_to_json(e.q)},
                           {"tuple", tuple_to_json(e.t)},
                           {"direction", e.reverse ? "reverse" : "forward"}});
    return json{{"tuples", r.tuples},
                {"illegal", r.illegal},
                {"missing_conditions", r.missing},
                {"counterexamples", exs},
                {"pass", r.pass}};
}

json summation_verify_to_json(const SummationVerifyReport& r) {
    return json{{"sigma1", r.sigma1},
                {"total", r.total},
                {"sigma2", r.sigma2},
                {"model_ok", r.model_ok},
                {"random_trials", r.random_trials},
                {"violations", r.violations},
                {"pass", r.pass}};
}

json identity_to_json(const IdentityReport& r) {
    return json{{"simple_partitions", r.simple_partitions.str()},
                {"hypergraph_count", r.hypergraph_count.str()},
                {"product", r.product.str()},
                {"pass", r.pass}};
}

}  // namespace hyperdeg
