#include "sidon/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "sidon/bounds.hpp"
#include "sidon/constructions.hpp"
#include "sidon/diagnostics.hpp"
#include "sidon/integer_set.hpp"
#include "sidon/quadratic_window.hpp"
#include "sidon/rational.hpp"
#include "sidon/result_cache.hpp"
#include "sidon/set_text.hpp"
#include "sidon/solver.hpp"

namespace sidon::cli {

using nlohmann::json;

namespace {

constexpr const char* kStatusNames[] = {"ok", "property_violated", "invalid_input",
                                        "resource_limit"};

// Reals carry 12 significant digits: format, reparse, and let the JSON dumper
// print the shortest decimal that round-trips the result.
json json_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return json(std::strtod(buf, nullptr));
}

json json_rational(const Rational& r) { return json(to_fraction_string(r)); }

int emit(std::ostream& out, const std::string& command, const json& inputs,
         const json& result, int code) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = result;
    doc["status"] = kStatusNames[code];
    out << doc.dump() << "\n";
    return code;
}

// Shared "set input" surface: a set file, or inline elements with an optional
// ambient given by -n (interval) or --mod (cyclic).
struct SetInput {
    std::string file;
    std::vector<std::int64_t> elements;
    std::int64_t n = 0;
    std::int64_t mod = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("elements", elements, "inline set elements");
        cmd->add_option("--file", file, "set file in the shared text format");
        cmd->add_option("-n", n, "interval ambient bound for inline elements");
        cmd->add_option("--mod", mod, "cyclic ambient modulus for inline elements");
    }

    IntegerSet load() const {
        if (!file.empty()) {
            if (!elements.empty() || n > 0 || mod > 0)
                throw std::invalid_argument("give a set file or inline elements, not both");
            return io::parse_set_file(file);
        }
        if (elements.empty())
            throw std::invalid_argument("no input set: pass elements or --file");
        if (n > 0 && mod > 0)
            throw std::invalid_argument("-n and --mod are mutually exclusive");
        Ambient ambient = Ambient::unbounded();
        if (n > 0) ambient = Ambient::interval(n);
        if (mod > 0) ambient = Ambient::cyclic(mod);
        return IntegerSet::from_unsorted(elements, ambient);
    }

    json echo() const {
        json j;
        if (!file.empty()) j["file"] = file;
        if (!elements.empty()) j["elements"] = elements;
        if (n > 0) j["n"] = n;
        if (mod > 0) j["mod"] = mod;
        return j;
    }
};

json construction_json(const gen::ConstructionRecord& rec) {
    json r;
    r["method"] = rec.method;
    r["set"] = rec.set.elements();
    r["size"] = rec.set.size();
    r["verified"] = rec.verified;
    if (rec.n > 0) r["n"] = rec.n;
    if (rec.p > 0) {
        r["q"] = rec.p;
        r["modulus"] = rec.set.ambient().bound;
        r["generator"] = rec.generator;
        r["reduction"] = rec.reduction;
    }
    if (rec.ell > 0) r["ell"] = rec.ell;
    return r;
}

void write_construction_file(const std::string& path, const gen::ConstructionRecord& rec) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write set file '" + path + "'");
    std::vector<std::string> comments{"method: " + rec.method};
    if (rec.n > 0) comments.push_back("n: " + std::to_string(rec.n));
    if (rec.p > 0) comments.push_back("q: " + std::to_string(rec.p));
    if (rec.ell > 0) comments.push_back("ell: " + std::to_string(rec.ell));
    if (!rec.generator.empty())
        comments.push_back("generator: " + rec.generator + " with " + rec.reduction);
    io::write_set_text(out, rec.set, comments);
}

json discrepancy_json(const diag::DiscrepancyStats& st) {
    json r;
    r["s"] = st.s;
    r["m"] = st.m;
    r["r1"] = st.r1;
    r["r2"] = st.r2;
    r["R1"] = st.R1;
    r["R2"] = st.R2;
    r["r"] = st.r();
    r["R"] = st.R();
    return r;
}

int run_selfcheck(std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sidon-type set toolkit: constructions, verification, bounds, "
                 "diagnostics, and exact maximization"};
    app.name("sidon");
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a set and verify it");
    construct->require_subcommand(1);
    std::int64_t c_n = 0, c_q = 0, c_ell = 0;
    std::string c_seed_file, c_out;
    bool c_direct = false;
    auto* c_powers = construct->add_subcommand("powers2", "powers of two up to n");
    c_powers->add_option("-n", c_n, "interval bound")->required();
    auto* c_greedy = construct->add_subcommand("greedy", "greedy Sidon set in [n]");
    c_greedy->add_option("-n", c_n, "interval bound")->required();
    c_greedy->add_option("--seed-file", c_seed_file, "starting Sidon set");
    auto* c_bose = construct->add_subcommand("bose-chowla", "q-element Sidon set mod q^2-1");
    c_bose->add_option("-q", c_q, "prime parameter")->required();
    auto* c_thin = construct->add_subcommand("thin", "ell-thin set mod (q^2-1)/ell");
    c_thin->add_option("-q", c_q, "prime parameter")->required();
    c_thin->add_option("--ell", c_ell, "thinness level, must divide q-1")->required();
    c_thin->add_flag("--direct", c_direct, "use the direct form instead of the quotient");
    for (auto* sub : {c_powers, c_greedy, c_bose, c_thin})
        sub->add_option("--out", c_out, "write the set to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "check a property of a given set");
    verify->require_subcommand(1);
    SetInput v_sidon_in, v_weak_in, v_thin_in;
    std::int64_t v_ell = 0;
    auto* v_sidon = verify->add_subcommand("sidon", "all pairwise differences distinct");
    v_sidon_in.attach(v_sidon);
    auto* v_weak = verify->add_subcommand("weak", "pairwise sums distinct for i < j");
    v_weak_in.attach(v_weak);
    auto* v_thin = verify->add_subcommand("thin", "every translate meets in <= ell points");
    v_thin_in.attach(v_thin);
    v_thin->add_option("--ell", v_ell, "thinness level")->required();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form upper bounds");
    std::string b_kind;
    std::int64_t b_n = 0, b_ell = 1;
    double b_gamma = 0.002;
    bounds_cmd
        ->add_option("--kind", b_kind, "trivial|lindstrom|cilleruelo|main|kayll|thin")
        ->required();
    bounds_cmd->add_option("-n", b_n, "interval bound")->required();
    bounds_cmd->add_option("--ell", b_ell, "thinness level (thin bound)");
    bounds_cmd->add_option("--gamma", b_gamma, "improvement constant (main bound)");

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "proof-machinery diagnostics");
    diagnose->require_subcommand(1);
    SetInput d_slack_in, d_defect_in, d_audit_in, d_disc_in, d_case_in;
    std::int64_t d_ell = 0, d_m = 0, d_s = 0;
    bool d_weak = false;
    double d_alpha = 0, d_beta = 0, d_eps = 0;
    auto* d_slack = diagnose->add_subcommand("slack", "order-limited difference sum excess");
    d_slack_in.attach(d_slack);
    d_slack->add_option("--ell", d_ell, "difference order cap")->required();
    d_slack->add_flag("--weak", d_weak, "weak-Sidon slack instead of the Sidon chain");
    auto* d_defect = diagnose->add_subcommand("defect", "translate degree variance");
    d_defect_in.attach(d_defect);
    d_defect->add_option("-m", d_m, "number of translates")->required();
    auto* d_audit = diagnose->add_subcommand("audit", "pairwise translate intersections");
    d_audit_in.attach(d_audit);
    d_audit->add_option("-m", d_m, "number of translates")->required();
    auto* d_disc = diagnose->add_subcommand("discrepancy", "edge-window element counts");
    d_disc_in.attach(d_disc);
    d_disc->add_option("-m", d_m, "outer window width")->required();
    d_disc->add_option("-s", d_s, "inner window width")->required();
    auto* d_case = diagnose->add_subcommand("case-report", "case trichotomy with gains");
    d_case_in.attach(d_case);
    d_case->add_option("--alpha", d_alpha, "order-cap parameter")->required();
    d_case->add_option("--beta", d_beta, "inner-window parameter")->required();
    d_case->add_option("--eps", d_eps, "edge-mass margin")->required();

    // maximize
    auto* maximize_cmd = app.add_subcommand("maximize", "exact maximum by pruned search");
    std::string m_kind, m_cache;
    std::int64_t m_n = 0, m_mod = 0, m_ell = 1;
    int m_parallel = 1;
    std::uint64_t m_budget = 1'000'000'000;
    maximize_cmd->add_option("--kind", m_kind, "sidon|weak|thin")->required();
    maximize_cmd->add_option("-n", m_n, "interval bound");
    maximize_cmd->add_option("--mod", m_mod, "cyclic modulus");
    maximize_cmd->add_option("--ell", m_ell, "thinness level (thin only)");
    maximize_cmd->add_option("--parallel", m_parallel, "worker count");
    maximize_cmd->add_option("--budget", m_budget, "node budget");
    maximize_cmd->add_option("--cache", m_cache, "result cache file");

    // table
    auto* table_cmd = app.add_subcommand("table", "extremal values for n = 1..n_max");
    std::string t_kind, t_cache;
    std::int64_t t_n_max = 0, t_ell = 1;
    int t_parallel = 1;
    std::uint64_t t_budget = 1'000'000'000;
    bool t_csv = false;
    table_cmd->add_option("--kind", t_kind, "sidon|weak|thin")->required();
    table_cmd->add_option("--n-max", t_n_max, "largest interval bound")->required();
    table_cmd->add_option("--ell", t_ell, "thinness level (thin only)");
    table_cmd->add_flag("--csv", t_csv, "emit CSV rows instead of JSON");
    table_cmd->add_option("--parallel", t_parallel, "worker count");
    table_cmd->add_option("--budget", t_budget, "node budget per row");
    table_cmd->add_option("--cache", t_cache, "result cache file to update");

    // feasibility
    auto* feas_cmd = app.add_subcommand("feasibility", "density-increment parameter check");
    std::string f_mode;
    double f_alpha = 0, f_beta = 0, f_eps = 0, f_gamma = 0;
    feas_cmd->add_option("--mode", f_mode, "sidon|weak")->required();
    feas_cmd->add_option("--alpha", f_alpha, "alpha")->required();
    feas_cmd->add_option("--beta", f_beta, "beta")->required();
    feas_cmd->add_option("--eps", f_eps, "eps")->required();
    feas_cmd->add_option("--gamma", f_gamma, "required margin")->required();

    // selfcheck
    app.add_subcommand("selfcheck", "small built-in oracle and construction audits");

    std::vector<const char*> argv;
    argv.push_back("sidon");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return emit(out, "", json::object(), json{{"error", e.what()}}, 2);
    }

    std::string command;
    json inputs = json::object();
    try {
        if (c_powers->parsed() || c_greedy->parsed() || c_bose->parsed() ||
            c_thin->parsed()) {
            gen::ConstructionRecord rec;
            if (c_powers->parsed()) {
                command = "construct powers2";
                inputs["n"] = c_n;
                rec = gen::powers_of_two(c_n);
            } else if (c_greedy->parsed()) {
                command = "construct greedy";
                inputs["n"] = c_n;
                IntegerSet seed;
                if (!c_seed_file.empty()) {
                    inputs["seed_file"] = c_seed_file;
                    seed = io::parse_set_file(c_seed_file);
                }
                rec = gen::greedy_sidon(c_n, seed);
            } else if (c_bose->parsed()) {
                command = "construct bose-chowla";
                inputs["q"] = c_q;
                rec = gen::bose_chowla(c_q);
            } else {
                command = "construct thin";
                inputs["q"] = c_q;
                inputs["ell"] = c_ell;
                if (c_direct) inputs["direct"] = true;
                rec = c_direct ? gen::thin_direct(c_q, c_ell)
                               : gen::thin_from_bose_chowla(c_q, c_ell);
            }
            if (!c_out.empty()) {
                inputs["out"] = c_out;
                write_construction_file(c_out, rec);
            }
            return emit(out, command, inputs, construction_json(rec), rec.verified ? 0 : 1);
        }

        if (v_sidon->parsed() || v_weak->parsed() || v_thin->parsed()) {
            const SetInput& in =
                v_sidon->parsed() ? v_sidon_in : v_weak->parsed() ? v_weak_in : v_thin_in;
            IntegerSet set = in.load();
            inputs = in.echo();
            json result;
            result["size"] = set.size();
            result["ambient"] = set.ambient().to_string();
            bool holds = false;
            if (v_sidon->parsed()) {
                command = "verify sidon";
                holds = is_sidon(set);
            } else if (v_weak->parsed()) {
                command = "verify weak";
                holds = is_weak_sidon(set);
            } else {
                command = "verify thin";
                inputs["ell"] = v_ell;
                if (v_ell < 1) throw std::invalid_argument("ell must be >= 1");
                const std::int64_t t = thinness(set);
                result["thinness"] = t;
                holds = t <= v_ell;
            }
            result["holds"] = holds;
            return emit(out, command, inputs, result, holds ? 0 : 1);
        }

        if (bounds_cmd->parsed()) {
            command = "bounds";
            inputs["kind"] = b_kind;
            inputs["n"] = b_n;
            const auto kind = bounds::bound_kind_from_string(b_kind);
            if (kind == bounds::BoundKind::Thin) inputs["ell"] = b_ell;
            if (kind == bounds::BoundKind::MainTheorem) inputs["gamma"] = json_real(b_gamma);
            const auto rep = bounds::closed_form_bound(kind, b_n, b_ell, b_gamma);
            json result;
            result["value"] = json_real(rep.value);
            result["implied_max"] = rep.implied_max;
            if (!rep.flag.empty()) result["flag"] = rep.flag;
            return emit(out, command, inputs, result, 0);
        }

        if (d_slack->parsed()) {
            command = "diagnose slack";
            IntegerSet set = d_slack_in.load();
            inputs = d_slack_in.echo();
            inputs["ell"] = d_ell;
            json result;
            if (d_weak) {
                inputs["weak"] = true;
                const auto ws = diag::weak_slack(set, d_ell);
                result["slack"] = ws.value;
                result["repeated_distances"] = ws.repeated_distance_count;
            } else {
                const auto chain = diag::verify_difference_chain(set, d_ell);
                result["slack"] = diag::slack(set, d_ell);
                result["sum"] = chain.sum;
                result["baseline"] = chain.baseline;
                result["upper"] = chain.rhs;
                result["half_t_squared"] = json_rational(chain.lhs);
                result["chain_holds"] = chain.holds;
            }
            return emit(out, command, inputs, result, 0);
        }

        if (d_defect->parsed()) {
            command = "diagnose defect";
            IntegerSet set = d_defect_in.load();
            inputs = d_defect_in.echo();
            inputs["m"] = d_m;
            const auto profile = diag::translate_degree_profile(set, d_m);
            json result;
            result["m"] = d_m;
            result["v"] = profile.v();
            result["k"] = profile.k;
            result["defect"] = json_rational(diag::defect(profile));
            return emit(out, command, inputs, result, 0);
        }

        if (d_audit->parsed()) {
            command = "diagnose audit";
            IntegerSet set = d_audit_in.load();
            inputs = d_audit_in.echo();
            inputs["m"] = d_m;
            const auto audit = diag::translate_intersection_audit(set, d_m);
            json result;
            result["max_pair_intersection"] = audit.max_pair_intersection;
            result["pairs_with_size_2"] = audit.pairs_with_size_2;
            return emit(out, command, inputs, result, 0);
        }

        if (d_disc->parsed()) {
            command = "diagnose discrepancy";
            IntegerSet set = d_disc_in.load();
            inputs = d_disc_in.echo();
            inputs["m"] = d_m;
            inputs["s"] = d_s;
            return emit(out, command, inputs,
                        discrepancy_json(diag::discrepancy_stats(set, d_s, d_m)), 0);
        }

        if (d_case->parsed()) {
            command = "diagnose case-report";
            IntegerSet set = d_case_in.load();
            inputs = d_case_in.echo();
            inputs["alpha"] = json_real(d_alpha);
            inputs["beta"] = json_real(d_beta);
            inputs["eps"] = json_real(d_eps);
            const auto rep = diag::case_report(set, d_alpha, d_beta, d_eps);
            json result;
            result["case"] = diag::case_kind_name(rep.kind);
            result["n"] = rep.n;
            result["k"] = rep.k;
            result["s"] = rep.s;
            result["m"] = rep.m;
            result["L"] = rep.L;
            result["stats"] = discrepancy_json(rep.stats);
            result["defect"] = json_rational(rep.K_exact);
            result["slack"] = rep.C_exact;
            result["reference_gain"] = json_real(rep.claim_reference_gain);
            if (rep.has_window_bound) {
                result["window"] = rep.window;
                result["window_bound"] = json_rational(rep.window_bound);
            }
            return emit(out, command, inputs, result, 0);
        }

        if (maximize_cmd->parsed()) {
            command = "maximize";
            inputs["kind"] = m_kind;
            const auto kind = search::kind_from_string(m_kind);
            if (kind == search::Kind::Thin) inputs["ell"] = m_ell;
            if ((m_n > 0) == (m_mod > 0))
                throw std::invalid_argument("give exactly one of -n or --mod");
            Ambient ambient = m_n > 0 ? Ambient::interval(m_n) : Ambient::cyclic(m_mod);
            if (m_n > 0)
                inputs["n"] = m_n;
            else
                inputs["mod"] = m_mod;
            if (m_parallel != 1) inputs["parallel"] = m_parallel;
            search::Problem problem{kind, kind == search::Kind::Thin ? m_ell : 1, ambient};
            std::optional<search::ResultCache> cache;
            if (!m_cache.empty()) {
                inputs["cache"] = m_cache;
                cache.emplace(m_cache);
                cache->load(err);
                if (auto hit = cache->lookup(problem, err)) {
                    json result;
                    result["max_size"] = hit->max_size;
                    result["witness"] = hit->witness.elements();
                    result["optimal"] = true;
                    result["from_cache"] = true;
                    return emit(out, command, inputs, result, 0);
                }
            }
            search::Config config;
            config.parallel_degree = m_parallel;
            config.node_budget = m_budget;
            const auto res = search::maximize(problem, config);
            err << "elapsed_seconds: " << res.elapsed_seconds << "\n";
            if (cache && res.optimal) {
                cache->store(problem, res);
                cache->save();
            }
            json result;
            result["max_size"] = res.max_size;
            result["witness"] = res.witness.elements();
            result["nodes_explored"] = res.nodes_explored;
            result["pruned_by_bound"] = res.pruned_by_bound;
            result["optimal"] = res.optimal;
            result["from_cache"] = false;
            return emit(out, command, inputs, result, res.optimal ? 0 : 3);
        }

        if (table_cmd->parsed()) {
            command = "table";
            inputs["kind"] = t_kind;
            inputs["n_max"] = t_n_max;
            const auto kind = search::kind_from_string(t_kind);
            if (kind == search::Kind::Thin) inputs["ell"] = t_ell;
            if (t_parallel != 1) inputs["parallel"] = t_parallel;
            search::Config config;
            config.parallel_degree = t_parallel;
            config.node_budget = t_budget;
            const auto table = search::extremal_table(
                kind, kind == search::Kind::Thin ? t_ell : 1, t_n_max, config);
            if (!t_cache.empty()) {
                inputs["cache"] = t_cache;
                search::ResultCache cache(t_cache);
                cache.load(err);
                for (const auto& row : table.rows) {
                    search::Problem problem{kind, kind == search::Kind::Thin ? t_ell : 1,
                                            Ambient::interval(row.n)};
                    search::Result res;
                    res.max_size = row.max_size;
                    res.witness = row.witness;
                    res.optimal = true;
                    cache.store(problem, res);
                }
                cache.save();
            }
            const int code = table.complete ? 0 : 3;
            if (t_csv) {
                out << "n,max_size,witness\n";
                for (const auto& row : table.rows) {
                    out << row.n << "," << row.max_size << ",";
                    const auto& e = row.witness.elements();
                    for (std::size_t i = 0; i < e.size(); ++i)
                        out << e[i] << (i + 1 == e.size() ? "" : " ");
                    out << "\n";
                }
                return code;
            }
            json rows = json::array();
            for (const auto& row : table.rows)
                rows.push_back(json{{"n", row.n},
                                    {"max_size", row.max_size},
                                    {"witness", row.witness.elements()}});
            json result;
            result["rows"] = rows;
            result["complete"] = table.complete;
            return emit(out, command, inputs, result, code);
        }

        if (feas_cmd->parsed()) {
            command = "feasibility";
            inputs["mode"] = f_mode;
            inputs["alpha"] = json_real(f_alpha);
            inputs["beta"] = json_real(f_beta);
            inputs["eps"] = json_real(f_eps);
            inputs["gamma"] = json_real(f_gamma);
            bounds::FeasibilityMode mode;
            if (f_mode == "sidon")
                mode = bounds::FeasibilityMode::Sidon;
            else if (f_mode == "weak")
                mode = bounds::FeasibilityMode::Weak;
            else
                throw std::invalid_argument("unknown feasibility mode: " + f_mode);
            const auto rep = bounds::parameter_feasibility(mode, f_alpha, f_beta, f_eps, f_gamma);
            json result;
            result["feasible"] = rep.feasible;
            result["lhs_min"] = json_real(rep.lhs_min);
            result["margin"] = json_real(rep.margin);
            return emit(out, command, inputs, result, rep.feasible ? 0 : 1);
        }

        // selfcheck
        return run_selfcheck(out, err);
    } catch (const bounds::IndeterminateSign& e) {
        return emit(out, command, inputs, json{{"error", e.what()}}, 3);
    } catch (const std::exception& e) {
        return emit(out, command, inputs, json{{"error", e.what()}}, 2);
    }
}

namespace {

int run_selfcheck(std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, bool>> checks;
    auto record = [&](const std::string& name, bool ok) {
        checks.emplace_back(name, ok);
        if (!ok) err << "selfcheck failure: " << name << "\n";
    };

    try {
        bool ok = true;
        for (std::int64_t n : {6, 9, 12}) {
            for (auto kind : {search::Kind::Sidon, search::Kind::Weak, search::Kind::Thin}) {
                search::Problem pb{kind, kind == search::Kind::Thin ? 2 : 1,
                                   Ambient::interval(n)};
                ok = ok && search::maximize(pb).max_size == search::brute_force(pb).max_size;
            }
        }
        record("maximize-equals-brute-force", ok);
    } catch (const std::exception&) {
        record("maximize-equals-brute-force", false);
    }

    try {
        const auto rec = gen::bose_chowla(5);
        const auto hist = difference_histogram(rec.set);
        bool ok = rec.verified && rec.set.size() == 5;
        for (std::int64_t r = 1; r < 24; ++r)
            ok = ok && hist.multiplicity(r) == (r % 6 == 0 ? 0 : 1);
        record("bose-chowla-histogram", ok);
    } catch (const std::exception&) {
        record("bose-chowla-histogram", false);
    }

    try {
        const auto quotient = gen::thin_from_bose_chowla(7, 3);
        const auto direct = gen::thin_direct(7, 3);
        record("thin-constructions-agree",
               quotient.verified && direct.verified && quotient.set == direct.set &&
                   thinness(quotient.set) <= 3);
    } catch (const std::exception&) {
        record("thin-constructions-agree", false);
    }

    try {
        using bounds::BoundKind;
        const bool anchors =
            bounds::closed_form_bound(BoundKind::Lindstrom, 10000).value == 111.0 &&
            bounds::closed_form_bound(BoundKind::Cilleruelo, 10000).value == 110.5 &&
            bounds::johnson_min_ground(3, 7, 1) == Rational(7);
        record("bound-anchors", anchors);
    } catch (const std::exception&) {
        record("bound-anchors", false);
    }

    try {
        const auto rec = gen::greedy_sidon(200);
        const bool ok = rec.verified && is_sidon(rec.set) && rec.set.size() >= 5 &&
                        diag::slack(rec.set, 1) >= 0 &&
                        diag::verify_difference_chain(rec.set, 1).holds;
        record("greedy-audit", ok);
    } catch (const std::exception&) {
        record("greedy-audit", false);
    }

    try {
        record("translate-window-anchor",
               bounds::feasible_translate_count(10000, 1).m == 954 &&
                   bounds::certify_translate_window(10000, 1, 1000));
    } catch (const std::exception&) {
        record("translate-window-anchor", false);
    }

    try {
        using bounds::FeasibilityMode;
        const bool ok =
            bounds::parameter_feasibility(FeasibilityMode::Sidon, 0.137, 0.037, 0.235, 0.002)
                .feasible &&
            !bounds::parameter_feasibility(FeasibilityMode::Sidon, 0.137, 0.037, 0.235, 0.0021)
                 .feasible;
        record("feasibility-anchor", ok);
    } catch (const std::exception&) {
        record("feasibility-anchor", false);
    }

    try {
        const auto rec = gen::bose_chowla(3);
        record("cyclic-verify", rec.set == IntegerSet({1, 6, 7}, Ambient::cyclic(8)) &&
                                    is_sidon(rec.set));
    } catch (const std::exception&) {
        record("cyclic-verify", false);
    }

    json failed = json::array();
    for (const auto& [name, ok] : checks)
        if (!ok) failed.push_back(name);
    json result;
    result["checks"] = checks.size();
    result["failures"] = failed.size();
    if (!failed.empty()) result["failed"] = failed;
    return emit(out, "selfcheck", json::object(), result, failed.empty() ? 0 : 1);
}

}  // namespace

}  // namespace sidon::cli
