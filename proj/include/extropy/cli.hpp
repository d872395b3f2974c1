#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "extropy/analysis.hpp"
#include "extropy/dynamic.hpp"
#include "extropy/empirical.hpp"
#include "extropy/measures.hpp"
#include "extropy/oracle.hpp"

namespace extropy::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "extropy-kit/1";

enum class Command { measure, dynamic, estimate, order_check, characterize, verify, mc };

inline const char* to_string(Command c) {
    switch (c) {
        case Command::measure: return "measure";
        case Command::dynamic: return "dynamic";
        case Command::estimate: return "estimate";
        case Command::order_check: return "order-check";
        case Command::characterize: return "characterize";
        case Command::verify: return "verify";
        case Command::mc: return "mc";
    }
    return "unknown";
}

enum class OutputFormat { json_fmt, csv_fmt, text_fmt };

struct TGridSpec {
    int count = 33;
    double lo_q = 0.01;
    double hi_q = 0.99;
};

struct RunConfig {
    Command command = Command::measure;
    std::string kind;  // per-command subkind, e.g. residual-min, gpd, hazard
    std::string dist, dist2;
    std::string weight = "const:1", weight2;
    int n = 1;
    int k = 1;
    TGridSpec t_grid;
    std::string input, output;
    OutputFormat format = OutputFormat::json_fmt;
    std::uint64_t seed = 12345;
    double rel_tol = -1.0;  // < 0: command-specific default
    double abs_tol = -1.0;
    int replicates = 100000;
    int bootstrap = 0;  // 0: no bootstrap interval
    double level = 0.95;
    std::vector<int> n_sequence;  // characterize location; default 1..12
};

struct RunOutcome {
    int exit_code = 0;
    std::string output;
};

// ---------------------------------------------------------------------------
// Spec grammars
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_number(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::invalid_config, "cannot parse " + what + ": '" + s + "'");
    }
}

struct KeyValues {
    std::vector<std::pair<std::string, double>> items;

    double get(const std::string& key) const {
        for (const auto& [k, v] : items)
            if (k == key) return v;
        throw Error(ErrorKind::invalid_config, "missing parameter '" + key + "'");
    }
};

inline KeyValues parse_kv(const std::string& s, const std::string& what) {
    KeyValues kv;
    if (s.empty()) return kv;
    for (const std::string& part : split(s, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::invalid_config, "expected key=value in " + what + ": '" + part + "'");
        kv.items.emplace_back(part.substr(0, eq), parse_number(part.substr(eq + 1), what));
    }
    return kv;
}

}  // namespace detail

/// Grammar: family[:k=v,...]; families uniform, finite-range, weibull,
/// folded-cramer, pareto2, power, exponential, and mix:p*spec+p*spec.
inline DistributionSpec parse_distribution_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (name == "mix") {
        FiniteMixture mix;
        for (const std::string& part : detail::split(rest, '+')) {
            const auto star = part.find('*');
            if (star == std::string::npos)
                throw Error(ErrorKind::invalid_config,
                            "mixture component must look like p*family:... got '" + part + "'");
            const double p = detail::parse_number(part.substr(0, star), "mixture weight");
            mix.components.push_back({p, parse_distribution_spec(part.substr(star + 1))});
        }
        return {mix};
    }

    const detail::KeyValues kv = detail::parse_kv(rest, "distribution '" + name + "'");
    if (name == "uniform") return {Uniform{kv.get("a"), kv.get("b")}};
    if (name == "finite-range" || name == "finiterange")
        return {FiniteRange{kv.get("a"), kv.get("b")}};
    if (name == "weibull") return {Weibull{kv.get("k"), kv.get("h")}};
    if (name == "folded-cramer" || name == "foldedcramer") return {FoldedCramer{kv.get("h")}};
    if (name == "pareto2") return {ParetoII{kv.get("k"), kv.get("h")}};
    if (name == "power") return {PowerDist{kv.get("b"), kv.get("c")}};
    if (name == "exponential" || name == "exp") return {Exponential{kv.get("lambda")}};
    throw Error(ErrorKind::invalid_config, "unknown distribution family '" + name + "'");
}

/// Grammar: const:W0 | identity | pow:m=M | log | shifted:base=B,c=C,d=D
/// with B one of identity, log, const, powM (e.g. pow2).
inline WeightFunction parse_weight_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

    if (name == "identity") return WeightFunction::identity();
    if (name == "log") return WeightFunction::log();
    if (name == "const") {
        if (rest.empty()) return WeightFunction::constant(1.0);
        return WeightFunction::constant(detail::parse_number(rest, "constant weight"));
    }
    if (name == "pow") {
        const detail::KeyValues kv = detail::parse_kv(rest, "power weight");
        return WeightFunction::power(static_cast<int>(kv.get("m")));
    }
    if (name == "shifted") {
        std::optional<WeightFunction> base;
        double c = 1.0, d = 0.0;
        for (const std::string& part : detail::split(rest, ',')) {
            const auto eq = part.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::invalid_config, "expected key=value in shifted weight");
            const std::string key = part.substr(0, eq);
            const std::string val = part.substr(eq + 1);
            if (key == "base") {
                if (val == "identity")
                    base = WeightFunction::identity();
                else if (val == "log")
                    base = WeightFunction::log();
                else if (val == "const")
                    base = WeightFunction::constant(1.0);
                else if (val.rfind("pow", 0) == 0)
                    base = WeightFunction::power(
                        static_cast<int>(detail::parse_number(val.substr(3), "power degree")));
                else
                    throw Error(ErrorKind::invalid_config, "unknown shifted base '" + val + "'");
            } else if (key == "c") {
                c = detail::parse_number(val, "shifted c");
            } else if (key == "d") {
                d = detail::parse_number(val, "shifted d");
            } else {
                throw Error(ErrorKind::invalid_config, "unknown shifted key '" + key + "'");
            }
        }
        if (!base) throw Error(ErrorKind::invalid_config, "shifted weight requires base=");
        return transform_weight(*base, c, d);
    }
    throw Error(ErrorKind::invalid_config, "unknown weight '" + text + "'");
}

/// Grammar: count:lo:hi, e.g. 33:0.01:0.99.
inline TGridSpec parse_t_grid(const std::string& text) {
    const auto parts = detail::split(text, ':');
    if (parts.size() != 3)
        throw Error(ErrorKind::invalid_config, "t-grid must look like count:lo:hi");
    TGridSpec g;
    g.count = static_cast<int>(detail::parse_number(parts[0], "t-grid count"));
    g.lo_q = detail::parse_number(parts[1], "t-grid lo");
    g.hi_q = detail::parse_number(parts[2], "t-grid hi");
    if (g.count < 1 || !(g.lo_q > 0.0 && g.lo_q < g.hi_q && g.hi_q < 1.0))
        throw Error(ErrorKind::invalid_config, "t-grid requires count >= 1 and 0 < lo < hi < 1");
    return g;
}

// ---------------------------------------------------------------------------
// Command handlers
// ---------------------------------------------------------------------------

namespace detail {

inline QuadratureSettings quad_settings(const RunConfig& cfg) {
    QuadratureSettings s;
    if (cfg.rel_tol > 0.0) s.rel_tol = cfg.rel_tol;
    if (cfg.abs_tol > 0.0) s.abs_tol = cfg.abs_tol;
    return s;
}

inline json measure_json(const MeasureResult& r) {
    json j;
    j["signed_value"] = r.signed_value;
    j["magnitude"] = r.magnitude;
    j["method"] = to_string(r.method);
    j["error_bound"] = r.error_bound;
    return j;
}

inline json warnings_json(const MeasureResult& r) {
    json arr = json::array();
    for (Warning w : r.warnings) arr.push_back(to_string(w));
    return arr;
}

inline json verdict_json(const Verdict& v) {
    json j;
    j["holds"] = v.holds;
    j["max_violation"] = v.max_violation;
    j["tolerance"] = v.tolerance;
    if (v.witness) j["witness"] = *v.witness;
    j["grid_size"] = v.grid.size();
    return j;
}

inline std::vector<int> n_sequence_or_default(const RunConfig& cfg) {
    return cfg.n_sequence.empty() ? default_n_sequence() : cfg.n_sequence;
}

inline void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::io_error, "cannot write " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error(ErrorKind::io_error, "cannot move " + tmp + " into place");
}

inline json run_measure(const RunConfig& cfg, json& warnings) {
    const Distribution dist(parse_distribution_spec(cfg.dist));
    const WeightFunction w = parse_weight_spec(cfg.weight);
    const QuadratureSettings qs = quad_settings(cfg);
    json results;
    if (cfg.kind == "residual-min" || cfg.kind.empty()) {
        const MeasureResult r = gwcrex_min(dist, w, cfg.n, qs);
        results = measure_json(r);
        warnings = warnings_json(r);
    } else if (cfg.kind == "past-max") {
        const MeasureResult r = gwcpex_max(dist, w, cfg.n, qs);
        results = measure_json(r);
        warnings = warnings_json(r);
    } else if (cfg.kind == "mu-w") {
        results["value"] = mu_w(dist, w, qs);
    } else if (cfg.kind == "cpe-entropy") {
        results["value"] = weighted_cpe_entropy(dist, w, qs);
    } else if (cfg.kind == "gmd") {
        results["value"] = gmd_weighted(dist, w, qs);
    } else {
        throw Error(ErrorKind::invalid_config, "unknown measure kind '" + cfg.kind + "'");
    }
    return results;
}

inline json curve_json(const DynamicCurve& curve) {
    json arr = json::array();
    for (std::size_t i = 0; i < curve.t_grid.size(); ++i) {
        json pt;
        pt["t"] = curve.t_grid[i];
        if (curve.point_errors[i].empty()) {
            pt.update(measure_json(curve.values[i]));
        } else {
            pt["error"] = curve.point_errors[i];
        }
        arr.push_back(pt);
    }
    return arr;
}

inline std::pair<json, std::optional<std::string>> run_dynamic(const RunConfig& cfg) {
    const Distribution dist(parse_distribution_spec(cfg.dist));
    const WeightFunction w = parse_weight_spec(cfg.weight);
    const QuadratureSettings qs = quad_settings(cfg);
    CurveKind kind;
    if (cfg.kind == "residual-min" || cfg.kind.empty())
        kind = CurveKind::gwdcrex_min;
    else if (cfg.kind == "past-max")
        kind = CurveKind::gwdcpex_max;
    else if (cfg.kind == "residual-kn")
        kind = CurveKind::gwdcrex_kn;
    else
        throw Error(ErrorKind::invalid_config, "unknown dynamic kind '" + cfg.kind + "'");

    const auto grid = quantile_grid(dist, cfg.t_grid.count, cfg.t_grid.lo_q, cfg.t_grid.hi_q);
    const DynamicCurve curve = dynamic_curve(kind, dist, w, cfg.n, cfg.k, grid, qs);
    json results;
    results["curve"] = curve_json(curve);
    results["failed_points"] = curve.failed_points();
    std::optional<std::string> csv;
    if (cfg.format == OutputFormat::csv_fmt) csv = curve_to_csv(curve);
    return {results, csv};
}

inline json run_estimate(const RunConfig& cfg, json& warnings) {
    if (cfg.input.empty())
        throw Error(ErrorKind::invalid_config, "estimate requires --input");
    const Sample sample = load_sample_csv(cfg.input);
    const WeightFunction w = parse_weight_spec(cfg.weight);
    EstimatorKind kind;
    if (cfg.kind == "residual-min" || cfg.kind.empty())
        kind = EstimatorKind::gwcrex_min;
    else if (cfg.kind == "past-max")
        kind = EstimatorKind::gwcpex_max;
    else
        throw Error(ErrorKind::invalid_config, "unknown estimate kind '" + cfg.kind + "'");

    const MeasureResult r = empirical_measure(sample, kind, w, cfg.n);
    json results = measure_json(r);
    warnings = warnings_json(r);
    results["observations"] = sample.size();
    if (cfg.bootstrap > 0) {
        const auto [lo, hi] = bootstrap_ci(sample, kind, w, cfg.n, cfg.bootstrap, cfg.level, cfg.seed);
        results["bootstrap"] = {{"replicates", cfg.bootstrap},
                                {"level", cfg.level},
                                {"lo", lo},
                                {"hi", hi},
                                {"seed", cfg.seed}};
    }
    return results;
}

inline json run_order_check(const RunConfig& cfg) {
    const Distribution X(parse_distribution_spec(cfg.dist));
    const Distribution Y(parse_distribution_spec(cfg.dist2));
    const WeightFunction w = parse_weight_spec(cfg.weight);
    const QuadratureSettings qs = quad_settings(cfg);
    OrderKind kind;
    if (cfg.kind == "hazard")
        kind = OrderKind::hazard;
    else if (cfg.kind == "reversed-hazard")
        kind = OrderKind::reversed_hazard;
    else if (cfg.kind == "wdcrex")
        kind = OrderKind::wdcrex;
    else if (cfg.kind == "dcpwex")
        kind = OrderKind::dcpwex;
    else
        throw Error(ErrorKind::invalid_config, "unknown order kind '" + cfg.kind + "'");

    // Points must be interior for both distributions.
    std::vector<double> grid;
    for (double t : quantile_grid(X, cfg.t_grid.count, cfg.t_grid.lo_q, cfg.t_grid.hi_q))
        if (t > Y.lower() && t < Y.upper()) grid.push_back(t);
    if (grid.empty())
        throw Error(ErrorKind::empty_grid, "supports of the two distributions do not overlap");

    const double tol = cfg.rel_tol > 0.0 ? cfg.rel_tol : 1e-9;
    const Verdict v = check_order(kind, X, Y, w, cfg.n, grid, tol, qs);
    json results;
    results["verdict"] = verdict_json(v);
    results["kind"] = cfg.kind;
    return results;
}

inline json run_characterize(const RunConfig& cfg) {
    const QuadratureSettings qs = quad_settings(cfg);
    json results;
    if (cfg.kind == "gpd" || cfg.kind == "power") {
        const Distribution dist(parse_distribution_spec(cfg.dist));
        const WeightFunction w = parse_weight_spec(cfg.weight);
        const auto grid = quantile_grid(dist, std::max(8, cfg.t_grid.count), cfg.t_grid.lo_q,
                                        cfg.t_grid.hi_q);
        double rel_tol = cfg.rel_tol;
        if (rel_tol <= 0.0) {
            // Tighter default when the backing curve is closed-form.
            const double mid = grid[grid.size() / 2];
            const Method backing = cfg.kind == "gpd"
                                       ? gwdcrex_min(dist, w, cfg.n, mid, qs).method
                                       : gwdcpex_max(dist, w, cfg.n, mid, qs).method;
            rel_tol = backing == Method::closed_form ? 1e-6 : 1e-3;
        }
        const CharacterizationResult res =
            cfg.kind == "gpd" ? gpd_test(dist, w, cfg.n, grid, rel_tol, qs)
                              : power_test(dist, w, cfg.n, grid, rel_tol, qs);
        results["verdict"] = verdict_json(res.verdict);
        results["constant"] = res.stat.mean;
        results["spread"] = res.stat.spread;
        results["rel_spread"] = res.stat.rel_spread;
        if (res.hazard_slope_c1) results["hazard_slope_c1"] = *res.hazard_slope_c1;
        return results;
    }
    if (cfg.kind == "location" || cfg.kind == "location-scale") {
        const Distribution X(parse_distribution_spec(cfg.dist));
        const Distribution Y(parse_distribution_spec(cfg.dist2));
        const WeightFunction wX = parse_weight_spec(cfg.weight);
        const auto n_seq = n_sequence_or_default(cfg);
        if (cfg.kind == "location") {
            const double tol = cfg.rel_tol > 0.0 ? cfg.rel_tol : 1e-10;
            const Verdict v = location_family_test(X, Y, wX, n_seq, tol,
                                                   LocationMeasure::residual, std::nullopt, qs);
            results["verdict"] = verdict_json(v);
        } else {
            const WeightFunction wY =
                cfg.weight2.empty() ? wX : parse_weight_spec(cfg.weight2);
            const double tol = cfg.rel_tol > 0.0 ? cfg.rel_tol : 1e-9;
            const Verdict v = location_scale_ratio_test(X, Y, wX, wY, n_seq, tol, qs);
            results["verdict"] = verdict_json(v);
        }
        return results;
    }
    throw Error(ErrorKind::invalid_config, "unknown characterization '" + cfg.kind + "'");
}

inline json claims_json(const InequalityReport& report) {
    json arr = json::array();
    for (const auto& c : report.claims) {
        json j;
        j["id"] = c.id;
        j["description"] = c.description;
        j["status"] = to_string(c.status);
        j["instances"] = c.instances;
        j["printed_violation"] = c.printed_violation;
        j["restated_violation"] = c.restated_violation;
        j["witness"] = c.witness;
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(j);
    }
    return arr;
}

inline json run_mc(const RunConfig& cfg) {
    const Distribution dist(parse_distribution_spec(cfg.dist));
    const WeightFunction w = parse_weight_spec(cfg.weight);
    EstimatorKind kind;
    if (cfg.kind == "residual-min" || cfg.kind.empty())
        kind = EstimatorKind::gwcrex_min;
    else if (cfg.kind == "past-max")
        kind = EstimatorKind::gwcpex_max;
    else
        throw Error(ErrorKind::invalid_config, "unknown mc kind '" + cfg.kind + "'");
    const McEstimate est = mc_measure(dist, w, cfg.n, kind, cfg.replicates, cfg.seed);
    json results;
    results["value"] = est.value;
    results["stderr"] = est.stderr_;
    results["replicates"] = est.replicates;
    results["seed"] = est.seed;
    return results;
}

inline json inputs_echo(const RunConfig& cfg) {
    json j;
    j["kind"] = cfg.kind;
    if (!cfg.dist.empty()) j["dist"] = cfg.dist;
    if (!cfg.dist2.empty()) j["dist2"] = cfg.dist2;
    j["weight"] = cfg.weight;
    if (!cfg.weight2.empty()) j["weight2"] = cfg.weight2;
    j["n"] = cfg.n;
    if (cfg.command == Command::dynamic && cfg.kind == "residual-kn") j["k"] = cfg.k;
    if (!cfg.input.empty()) j["input"] = cfg.input;
    if (cfg.command == Command::mc || cfg.bootstrap > 0) j["seed"] = cfg.seed;
    return j;
}

}  // namespace detail

/// Executes one command. Exit codes: 0 success, 1 usage/config errors,
/// 2 domain errors (reported as a machine-readable error object).
inline RunOutcome run(const RunConfig& cfg) {
    json envelope;
    envelope["schema"] = kSchema;
    envelope["command"] = to_string(cfg.command);
    RunOutcome outcome;
    try {
        envelope["inputs"] = detail::inputs_echo(cfg);
        json warnings = json::array();
        std::optional<std::string> raw_override;
        switch (cfg.command) {
            case Command::measure:
                envelope["results"] = detail::run_measure(cfg, warnings);
                break;
            case Command::dynamic: {
                auto [results, csv] = detail::run_dynamic(cfg);
                envelope["results"] = results;
                raw_override = csv;
                break;
            }
            case Command::estimate:
                envelope["results"] = detail::run_estimate(cfg, warnings);
                break;
            case Command::order_check:
                envelope["results"] = detail::run_order_check(cfg);
                break;
            case Command::characterize:
                envelope["results"] = detail::run_characterize(cfg);
                break;
            case Command::verify: {
                const InequalityReport report = inequality_report();
                if (cfg.format == OutputFormat::text_fmt) {
                    raw_override = report_to_text(report);
                } else {
                    json results;
                    results["claims"] = detail::claims_json(report);
                    envelope["results"] = results;
                }
                break;
            }
            case Command::mc:
                envelope["results"] = detail::run_mc(cfg);
                break;
        }
        envelope["warnings"] = warnings;
        outcome.output = raw_override ? *raw_override : envelope.dump(2) + "\n";
        outcome.exit_code = 0;
    } catch (const Error& err) {
        json error;
        error["kind"] = to_string(err.kind());
        error["message"] = err.what();
        envelope["error"] = error;
        outcome.output = envelope.dump(2) + "\n";
        outcome.exit_code = err.kind() == ErrorKind::invalid_config ? 1 : 2;
    } catch (const std::exception& ex) {
        json error;
        error["kind"] = "Internal";
        error["message"] = ex.what();
        envelope["error"] = error;
        outcome.output = envelope.dump(2) + "\n";
        outcome.exit_code = 2;
    }
    if (!cfg.output.empty() && outcome.exit_code != 1)
        detail::atomic_write(cfg.output, outcome.output);
    return outcome;
}

}  // namespace extropy::cli
