#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperdeg/errors.hpp"
#include "hyperdeg/mc.hpp"
#include "hyperdeg/serialize.hpp"
#include "hyperdeg/verify.hpp"

namespace {

using hyperdeg::json;

struct RunConfig {
    std::string degrees_arg;
    std::string regular_arg;
    std::uint32_t r = 0;
    std::uint64_t seed = 0;
    std::uint32_t workers = 1;
    std::string format = "json";
    std::uint64_t cap_m = hyperdeg::kDefaultCapM;
    bool cap_m_set = false;
};

[[noreturn]] void fail(const std::string& type, const std::string& message) {
    json err{{"error", {{"type", type}, {"message", message}}}};
    std::cout << err.dump() << "\n";
    std::exit(1);
}

std::uint64_t env_cap_m() {
    const char* env = std::getenv("HYPERDEG_CAP_M");
    if (!env || !*env) return hyperdeg::kDefaultCapM;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        fail("precondition", "HYPERDEG_CAP_M must be a nonnegative integer");
    }
}

std::vector<std::uint32_t> parse_degree_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(std::uint32_t(v));
        } catch (const std::exception&) {
            throw hyperdeg::precondition_error("bad degree entry '" + token + "'");
        }
    }
    if (out.empty()) throw hyperdeg::precondition_error("empty degree list");
    return out;
}

std::vector<std::uint32_t> read_degree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hyperdeg::precondition_error("cannot open degree file " + path);
    std::vector<std::uint32_t> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(line, &used);
            if (used != line.size()) throw std::invalid_argument(line);
            out.push_back(std::uint32_t(v));
        } catch (const std::exception&) {
            throw hyperdeg::precondition_error("bad degree line '" + line + "' in " + path);
        }
    }
    if (out.empty()) throw hyperdeg::precondition_error("degree file " + path + " is empty");
    return out;
}

hyperdeg::DegreeSequence degrees_of(const RunConfig& cfg) {
    if (cfg.r == 0) throw hyperdeg::precondition_error("-r is required");
    if (!cfg.degrees_arg.empty() && !cfg.regular_arg.empty())
        throw hyperdeg::precondition_error("--degrees and --regular are mutually exclusive");
    if (!cfg.regular_arg.empty()) {
        const auto x = cfg.regular_arg.find('x');
        if (x == std::string::npos)
            throw hyperdeg::precondition_error("--regular expects NxK, e.g. 6x2");
        try {
            const std::size_t n = std::stoull(cfg.regular_arg.substr(0, x));
            const std::uint32_t deg = std::uint32_t(std::stoul(cfg.regular_arg.substr(x + 1)));
            return hyperdeg::regular_sequence(n, deg, cfg.r);
        } catch (const hyperdeg::error&) {
            throw;
        } catch (const std::exception&) {
            throw hyperdeg::precondition_error("--regular expects NxK, e.g. 6x2");
        }
    }
    if (cfg.degrees_arg.empty())
        throw hyperdeg::precondition_error("one of --degrees or --regular is required");
    if (cfg.degrees_arg[0] == '@')
        return hyperdeg::DegreeSequence(cfg.r, read_degree_file(cfg.degrees_arg.substr(1)));
    return hyperdeg::DegreeSequence(cfg.r, parse_degree_list(cfg.degrees_arg));
}

json context_json(const RunConfig& cfg, const hyperdeg::DegreeSequence& k) {
    return json{{"degrees", k.degrees()}, {"r", k.r()}};
}

/* CSV cells via the JSON value printer, which emits shortest round-trip
   doubles; strings used in tables never contain commas */
std::string csv_cell(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void print_csv(const std::vector<std::string>& header, const std::vector<json>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const json& row : rows) {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << csv_cell(row.at(header[i]));
        out << "\n";
    }
    std::cout << out.str();
}

void emit_object(const RunConfig& cfg, json obj, const std::vector<std::string>& csv_header) {
    if (cfg.format == "csv") {
        print_csv(csv_header, {obj});
    } else {
        std::cout << obj.dump() << "\n";
    }
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--degrees", cfg.degrees_arg,
                    "comma-separated degree list, or @file with one degree per line");
    cmd->add_option("--regular", cfg.regular_arg, "regular shorthand NxK (n vertices, degree k)");
    cmd->add_option("-r,--edge-size", cfg.r, "edge size r")->required();
    cmd->add_option("--seed", cfg.seed, "rng seed")->capture_default_str();
    cmd->add_option("--workers", cfg.workers, "worker threads")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cap-M", cfg.cap_m,
                    "exhaustive-enumeration cap on M (overrides HYPERDEG_CAP_M)")
        ->check(CLI::NonNegativeNumber);
}

int run_count(const RunConfig& cfg, const std::string& mode) {
    const hyperdeg::DegreeSequence k = degrees_of(cfg);
    json out = context_json(cfg, k);
    out["command"] = "count";
    out["mode"] = mode;
    std::vector<std::string> header;

    std::optional<hyperdeg::CountResult> asym;
    if (mode != "exact" || k.r() >= 3) {
        asym = hyperdeg::asymptotic_count(k);
        out.update(hyperdeg::count_result_to_json(*asym));
        header = {"leading_term", "leading_term_value", "log_correction", "estimate"};
    }
    if (mode != "asymptotic") {
        const hyperdeg::ExactCensus c = hyperdeg::census(k, cfg.cap_m, cfg.workers);
        out["exact"] = c.hypergraph_count.str();
        out["exact_value"] = hyperdeg::to_double(c.hypergraph_count);
        header.insert(header.end(), {"exact", "exact_value"});
        if (asym && c.hypergraph_count != 0) {
            out["ratio"] = asym->estimate / hyperdeg::to_double(c.hypergraph_count);
            header.push_back("ratio");
        }
    }
    emit_object(cfg, out, header);
    return 0;
}

int run_sample(const RunConfig& cfg, std::uint64_t count, bool simple, std::uint64_t max_tries) {
    const hyperdeg::DegreeSequence k = degrees_of(cfg);
    const hyperdeg::CellLayout layout(k);
    hyperdeg::RandomStream rng(hyperdeg::stream_seed(cfg.seed, 0));
    bool any_error = false;

    std::ostringstream out;
    if (cfg.format == "csv") {
        out << (simple ? "index,tries,edges\n" : "index,parts\n");
    } else {
        json meta = context_json(cfg, k);
        meta["command"] = "sample";
        meta["seed"] = cfg.seed;
        meta["count"] = count;
        meta["simple"] = simple;
        if (simple) meta["max_tries"] = max_tries;
        out << meta.dump() << "\n";
    }

    const auto group_csv = [](const std::vector<std::vector<std::uint32_t>>& groups) {
        std::string s;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (i) s += ';';
            for (std::size_t j = 0; j < groups[i].size(); ++j) {
                if (j) s += '|';
                s += std::to_string(groups[i][j]);
            }
        }
        return s;
    };

    for (std::uint64_t i = 0; i < count; ++i) {
        if (simple) {
            try {
                std::uint64_t tries = 0;
                const hyperdeg::HypergraphView h =
                    hyperdeg::sample_simple_hypergraph(k, rng, max_tries, &tries);
                if (cfg.format == "csv") {
                    out << i << "," << tries << "," << group_csv(h.edges) << "\n";
                } else {
                    json rec = hyperdeg::hypergraph_to_json(h);
                    rec["index"] = i;
                    rec["tries"] = tries;
                    out << rec.dump() << "\n";
                }
            } catch (const hyperdeg::rejection_exhausted_error& e) {
                any_error = true;
                if (cfg.format == "csv") {
                    out << i << ",," << "\n";
                } else {
                    json rec{{"index", i},
                             {"error",
                              {{"type", "rejection_exhausted"},
                               {"message", e.what()},
                               {"tries", e.tries}}}};
                    out << rec.dump() << "\n";
                }
            }
        } else {
            const hyperdeg::Partition q = hyperdeg::random_partition(k, rng);
            if (cfg.format == "csv") {
                std::vector<std::vector<std::uint32_t>> parts;
                for (const auto& p : q.parts()) parts.emplace_back(p.begin(), p.end());
                out << i << "," << group_csv(parts) << "\n";
            } else {
                json rec = hyperdeg::partition_to_json(q);
                rec["index"] = i;
                out << rec.dump() << "\n";
            }
        }
    }
    std::cout << out.str();
    return any_error ? 1 : 0;
}

int run_estimate(const RunConfig& cfg, std::uint64_t samples) {
    const hyperdeg::DegreeSequence k = degrees_of(cfg);
    const hyperdeg::EstimateReport rep =
        hyperdeg::estimate_p_simple(k, samples, cfg.seed, cfg.workers);
    json out = context_json(cfg, k);
    out["command"] = "estimate";
    out.update(hyperdeg::estimate_report_to_json(rep));
    std::vector<std::string> header{"samples", "successes", "p_hat",  "std_err",
                                    "ci_low",  "ci_high",   "seed",   "workers"};

    if (k.M() <= cfg.cap_m) {
        const hyperdeg::ExactCensus c = hyperdeg::census(k, cfg.cap_m, cfg.workers);
        out["exact_p"] = hyperdeg::to_string(c.p_simple);
        out["exact_p_value"] = hyperdeg::to_double(c.p_simple);
        header.insert(header.end(), {"exact_p", "exact_p_value"});
    }
    const hyperdeg::PSimpleModel model = hyperdeg::p_simple_from_switching_model(k);
    out["model_estimate"] = model.estimate;
    out["model_lower"] = model.lower;
    out["model_upper"] = model.upper;
    out["model_degraded"] = model.degraded;
    header.insert(header.end(),
                  {"model_estimate", "model_lower", "model_upper", "model_degraded"});
    emit_object(cfg, out, header);
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& subject) {
    const hyperdeg::DegreeSequence k = degrees_of(cfg);
    json out = context_json(cfg, k);
    out["command"] = "verify";
    out["subject"] = subject;

    if (subject == "ratios") {
        const auto rep = hyperdeg::verify_ratios(k, cfg.cap_m);
        if (cfg.format == "csv") {
            const json table = hyperdeg::ratios_to_json(rep);
            std::vector<json> rows;
            for (const json& row : table.at("rows")) rows.push_back(row);
            print_csv({"ell", "exact", "exact_value", "predicted", "rel_dev"}, rows);
        } else {
            out.update(hyperdeg::ratios_to_json(rep));
            std::cout << out.dump() << "\n";
        }
        return rep.pass ? 0 : 1;
    }
    if (subject == "double-count") {
        const auto rep = hyperdeg::verify_double_count(k, cfg.cap_m);
        if (cfg.format == "csv") {
            const json table = hyperdeg::double_count_to_json(rep);
            std::vector<json> rows;
            for (const json& row : table.at("rows")) rows.push_back(row);
            print_csv({"ell", "class_size", "forward_legal", "reverse_legal", "equal"}, rows);
        } else {
            out.update(hyperdeg::double_count_to_json(rep));
            std::cout << out.dump() << "\n";
        }
        return rep.pass ? 0 : 1;
    }
    if (subject == "necessity-forward" || subject == "necessity-reverse") {
        const auto rep = subject == "necessity-forward"
                             ? hyperdeg::verify_forward_necessity(k, cfg.cap_m)
                             : hyperdeg::verify_reverse_necessity(k, cfg.cap_m);
        out.update(hyperdeg::necessity_to_json(rep));
        if (cfg.format == "csv")
            print_csv({"tuples", "illegal", "missing_conditions", "pass"}, {out});
        else
            std::cout << out.dump() << "\n";
        return rep.pass ? 0 : 1;
    }
    if (subject == "summation") {
        const auto rep = hyperdeg::verify_summation(k, 1000, cfg.seed);
        out["seed"] = cfg.seed;
        out.update(hyperdeg::summation_verify_to_json(rep));
        if (cfg.format == "csv")
            print_csv({"sigma1", "total", "sigma2", "model_ok", "random_trials", "violations",
                       "pass"},
                      {out});
        else
            std::cout << out.dump() << "\n";
        return rep.pass ? 0 : 1;
    }
    if (subject == "identity") {
        const auto rep = hyperdeg::verify_identity(k, cfg.cap_m, /*cap_vertices=*/cfg.cap_m);
        out.update(hyperdeg::identity_to_json(rep));
        if (cfg.format == "csv")
            print_csv({"simple_partitions", "hypergraph_count", "product", "pass"}, {out});
        else
            std::cout << out.dump() << "\n";
        return rep.pass ? 0 : 1;
    }
    throw hyperdeg::precondition_error("unknown verify subject '" + subject + "'");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.cap_m = env_cap_m();

    CLI::App app{"count, sample, estimate and verify uniform hypergraphs with given degrees"};
    app.require_subcommand(1);

    std::string count_mode = "asymptotic";
    CLI::App* cmd_count = app.add_subcommand("count", "degree-sequence hypergraph counts");
    add_common(cmd_count, cfg);
    cmd_count->add_option("--mode", count_mode, "count mode")
        ->capture_default_str()
        ->check(CLI::IsMember({"asymptotic", "exact", "both"}));

    std::uint64_t sample_count = 1;
    std::uint64_t max_tries = 1000;
    bool simple = false;
    CLI::App* cmd_sample = app.add_subcommand("sample", "draw uniform partitions or hypergraphs");
    add_common(cmd_sample, cfg);
    cmd_sample->add_option("-n,--count", sample_count, "number of samples")->capture_default_str();
    cmd_sample->add_flag("--simple", simple, "rejection-sample simple hypergraphs");
    cmd_sample->add_option("--max-tries", max_tries, "rejection budget per sample")
        ->capture_default_str();

    std::uint64_t samples = 10000;
    CLI::App* cmd_estimate = app.add_subcommand("estimate", "Monte Carlo estimate of P(simple)");
    add_common(cmd_estimate, cfg);
    cmd_estimate->add_option("--samples", samples, "Monte Carlo sample count")
        ->capture_default_str();

    std::string subject;
    CLI::App* cmd_verify = app.add_subcommand("verify", "exhaustive invariant checks");
    add_common(cmd_verify, cfg);
    cmd_verify
        ->add_option("subject", subject,
                     "ratios | double-count | necessity-forward | necessity-reverse | "
                     "summation | identity")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail("usage", e.what());
    }

    try {
        if (app.got_subcommand(cmd_count)) return run_count(cfg, count_mode);
        if (app.got_subcommand(cmd_sample)) return run_sample(cfg, sample_count, simple, max_tries);
        if (app.got_subcommand(cmd_estimate)) return run_estimate(cfg, samples);
        return run_verify(cfg, subject);
    } catch (const hyperdeg::divisibility_error& e) {
        fail("divisibility", e.what());
    } catch (const hyperdeg::cap_exceeded_error& e) {
        fail("cap_exceeded", e.what());
    } catch (const hyperdeg::rejection_exhausted_error& e) {
        fail("rejection_exhausted", e.what());
    } catch (const hyperdeg::invariant_error& e) {
        fail("invariant", e.what());
    } catch (const hyperdeg::precondition_error& e) {
        fail("precondition", e.what());
    } catch (const std::exception& e) {
        fail("internal", e.what());
    }
}
