// vdw-lab command line.
//
// Four subcommands: `experiment` runs a gallery entry and emits its report,
// `query` answers one ad-hoc question as a single JSON object, `validate`
// checks a run configuration file, `list` enumerates what exists.  stdout
// carries exactly the report or answer; progress and timings go to stderr.
// Exit codes: 0 computed (even a negative answer), 1 a verified claim failed,
// 2 usage or parse problem, 3 a horizon or memory cap would be exceeded.
//
// Report bytes are deterministic: fixed key order, no timestamps, and the
// same output for any --threads value.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdwlab/describe.hpp"
#include "vdwlab/recurrence.hpp"

namespace {

using namespace vdwlab;

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

Members parse_members(const std::string& text) {
    Members out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = detail::trim(item);
        if (item.empty()) continue;
        out.push_back(detail::parse_u64_text(item, "set member"));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Members> parse_generator_lists(const std::string& text) {
    std::vector<Members> out;
    std::stringstream ss(text);
    std::string list;
    while (std::getline(ss, list, ';')) {
        Members g;
        std::stringstream ls(list);
        std::string item;
        while (std::getline(ls, item, ',')) {
            item = detail::trim(item);
            if (item.empty()) continue;
            g.push_back(detail::parse_u64_text(item, "generator"));
        }
        if (!g.empty()) out.push_back(std::move(g));
    }
    if (out.empty()) throw UsageError("generator lists are empty");
    return out;
}

Json members_json(const Members& m) {
    if (m.size() <= report_list_cap) return Json(m);
    Json j = Json(Members(m.begin(), m.begin() + report_list_cap));
    return Json{{"first", std::move(j)}, {"truncated", true}, {"count", m.size()}};
}

// Overrides arrive as free-form `--key value` or `--key=value` tokens after
// the experiment id; dashes in keys are spelled as underscores internally.
Params parse_override_tokens(const std::vector<std::string>& tokens) {
    Params out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.rfind("--", 0) != 0)
            throw UsageError("unexpected argument '" + tok + "'");
        std::string key = tok.substr(2), value;
        if (auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key = key.substr(0, eq);
        } else {
            if (++i == tokens.size()) throw UsageError("missing value for " + tok);
            value = tokens[i];
        }
        std::replace(key.begin(), key.end(), '-', '_');
        if (key.empty() || value.empty())
            throw UsageError("malformed override '" + tok + "'");
        if (out.count(key)) throw UsageError("duplicate override --" + key);
        out[key] = value;
    }
    return out;
}

struct ExperimentArgs {
    std::string id;
    unsigned threads = 1;
    std::string format = "json";
    std::string out_prefix;
    std::string config_path;
    bool threads_given = false;
    bool format_given = false;
    bool out_given = false;
};

int cmd_experiment(const ExperimentArgs& a, const std::vector<std::string>& extra_tokens) {
    Params overrides;
    unsigned threads = a.threads;
    std::string format = a.format, out_prefix = a.out_prefix;
    if (!a.config_path.empty()) {
        Config cfg = parse_config_file(a.config_path);
        ConfigCheck check = validate_run_config(cfg);
        if (!check.valid())
            throw UsageError("config " + a.config_path + ": " + check.violations.front());
        if (const ConfigSection* ex = cfg.find("experiment")) {
            if (const std::string* id = ex->find("id"); id && *id != a.id)
                throw UsageError("config names experiment '" + *id + "' but the command line says '" +
                                 a.id + "'");
            // Explicit flags win over the file.
            if (const std::string* t = ex->find("threads"); t && !a.threads_given)
                threads = static_cast<unsigned>(detail::parse_u64_text(*t, "threads"));
            if (const std::string* f = ex->find("format"); f && !a.format_given) format = *f;
            if (const std::string* o = ex->find("out"); o && !a.out_given) out_prefix = *o;
        }
        if (const ConfigSection* ps = cfg.find("experiment.params"))
            for (const auto& [k, v] : ps->entries) overrides[k] = v;
    }
    for (const auto& [k, v] : parse_override_tokens(extra_tokens)) overrides[k] = v;
    if (threads < 1) throw UsageError("--threads must be at least 1");
    if (format != "json" && format != "tsv" && format != "both")
        throw UsageError("--format must be json, tsv or both");

    std::cerr << "running experiment " << a.id << " (threads=" << threads << ")\n";
    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep = run_experiment(a.id, overrides, threads);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    std::string json = to_canonical_json_text(rep);
    std::string tsv = to_tsv(rep);
    bool to_files = !out_prefix.empty() || format == "both";
    std::string prefix = out_prefix.empty() ? a.id : out_prefix;
    if (format == "tsv")
        std::cout << tsv;
    else
        std::cout << json;
    if (to_files && format != "tsv") write_file(prefix + ".json", json);
    if (to_files && format != "json") write_file(prefix + ".tsv", tsv);

    std::cerr << "experiment " << a.id << " finished in " << ms << " ms, "
              << rep.claims.size() << " claims, " << (rep.all_ok() ? "all ok" : "FAILURES")
              << "\n";
    return rep.all_ok() ? 0 : 1;
}

struct QueryArgs {
    std::string point, oracle, word, set_text, gens_text;
    unsigned depth = 1;
    unsigned alpha_bound = 6;
    std::uint64_t match_len = 1;
    std::uint64_t horizon = 4096;
    std::uint64_t window = 0;
    std::uint64_t ap_len = 0;
    unsigned threads = 1;
    bool exhaustive_fills = false;
};

Json query_header(const std::string& kind) {
    Json j;
    j["schema"] = "vdw-lab/1";
    j["query"] = kind;
    return j;
}

int emit(const Json& j) {
    std::cout << json_text(j);
    return 0;
}

int cmd_query(const std::string& kind, const QueryArgs& q) {
    if (q.threads < 1) throw UsageError("--threads must be at least 1");
    Json j = query_header(kind);

    if (kind == "return-set") {
        Sequence x = make_point(q.point);
        j["point"] = x.describe().to_string();
        j["word"] = q.word;
        j["horizon"] = q.horizon;
        Members r = return_set(x, q.word, q.horizon);
        j["result"] = r.size();
        j["witness"] = members_json(r);
        return emit(j);
    }
    if (kind == "multi-rec") {
        Sequence x = make_point(q.point);
        j["point"] = x.describe().to_string();
        j["depth"] = q.depth;
        j["match_len"] = q.match_len;
        j["horizon"] = q.horizon;
        auto n = multi_recurrence_witness(x, {q.depth, q.match_len, q.horizon}, q.threads);
        j["result"] = n ? "found" : "none_at_horizon";
        if (n) j["witness"] = Json{{"n", *n}};
        return emit(j);
    }
    if (kind == "ap-rec") {
        Sequence x = make_point(q.point);
        j["point"] = x.describe().to_string();
        j["word"] = q.word;
        j["d"] = q.depth;
        j["horizon"] = q.horizon;
        auto ap = ap_recurrence_witness(x, q.word, q.depth, q.horizon);
        j["result"] = ap ? "found" : "none_at_horizon";
        if (ap) j["witness"] = to_json(*ap);
        return emit(j);
    }
    if (kind == "vdw") {
        auto o = make_subshift(q.oracle);
        j["oracle"] = o->id();
        j["word"] = q.word;
        j["d"] = q.depth;
        j["horizon"] = q.horizon;
        VdwOutcome out = vdw_witness(*o, q.word, q.depth, q.horizon, q.threads,
                                     q.exhaustive_fills);
        j["result"] = to_string(out.status);
        if (out.n) {
            Json w;
            w["n"] = *out.n;
            w["offsets"] = out.offsets;
            if (out.dense_word)
                w["word"] = *out.dense_word;
            else if (out.word)
                w["word"] = to_json(*out.word);
            if (out.base_offset) w["base_offset"] = *out.base_offset;
            if (!out.point_descriptor.empty()) w["point"] = out.point_descriptor;
            j["witness"] = std::move(w);
        }
        if (!out.proof_rule.empty()) j["proof_rule"] = out.proof_rule;
        return emit(j);
    }
    if (kind == "ip") {
        auto o = make_subshift(q.oracle);
        j["oracle"] = o->id();
        j["word"] = q.word;
        j["alpha_bound"] = q.alpha_bound;
        std::vector<Members> gens;
        if (!q.gens_text.empty()) {
            gens = parse_generator_lists(q.gens_text);
        } else if (auto* gp = dynamic_cast<const GapPatternShift*>(o.get());
                   gp && gp->family() == GapPatternShift::Family::pq_family) {
            gens = {gp->p_gens(), gp->q_gens()};
        } else {
            throw UsageError("--gens is required for oracle " + o->id());
        }
        IpOutcome out = multiple_ip_witness(*o, q.word, gens, q.alpha_bound);
        j["result"] = to_string(out.status);
        if (out.status == SearchStatus::found) {
            Json w;
            w["alpha"] = index_set_json(out.alpha);
            w["offsets"] = out.offsets;
            if (out.dense_word)
                w["word"] = *out.dense_word;
            else if (out.word)
                w["word"] = to_json(*out.word);
            w["via_construction"] = out.via_construction;
            j["witness"] = std::move(w);
        }
        if (!out.proof_rule.empty()) j["proof_rule"] = out.proof_rule;
        return emit(j);
    }
    if (kind == "ap-detect") {
        Members s = parse_members(q.set_text);
        j["set_size"] = s.size();
        if (q.ap_len > 0) {
            j["len"] = q.ap_len;
            auto ap = contains_ap(s, q.ap_len);
            j["result"] = ap ? "found" : "none";
            if (ap) j["witness"] = to_json(*ap);
        } else {
            APWitness best = longest_ap(s);
            j["result"] = best.length;
            j["witness"] = to_json(best);
        }
        return emit(j);
    }
    if (kind == "density") {
        Members s = parse_members(q.set_text);
        j["set_size"] = s.size();
        j["horizon"] = q.horizon;
        auto [upper, lower] = density_estimates(s, q.horizon);
        j["result"] = Json{{"upper", upper.str()}, {"lower", lower.str()}};
        return emit(j);
    }
    if (kind == "banach") {
        Members s = parse_members(q.set_text);
        if (q.window < 1) throw UsageError("--window must be at least 1");
        j["set_size"] = s.size();
        j["horizon"] = q.horizon;
        j["window"] = q.window;
        auto [upper, lower] = banach_density_estimates(s, q.horizon, q.window);
        j["result"] = Json{{"upper", upper.str()}, {"lower", lower.str()}};
        return emit(j);
    }
    if (kind == "admissible") {
        auto o = make_subshift(q.oracle);
        j["oracle"] = o->id();
        j["word"] = q.word;
        Admissibility a = o->admissible(q.word);
        j["result"] = to_string(a.verdict);
        if (!a.reason.empty()) j["reason"] = a.reason;
        if (a.occurrence) j["occurrence"] = *a.occurrence;
        return emit(j);
    }
    throw UsageError("unknown query kind " + kind);
}

int cmd_validate(const std::string& path) {
    Config cfg = parse_config_file(path);
    ConfigCheck check = validate_run_config(cfg);
    Json j;
    j["schema"] = "vdw-lab/1";
    j["validate"] = Json::object();
    j["validate"]["config"] = path;
    Json names = Json::array();
    for (const auto& s : cfg.sections) names.push_back(s.name);
    j["validate"]["sections"] = std::move(names);
    for (auto& [k, v] : check.details.items()) j["validate"][k] = v;
    j["validate"]["violations"] = check.violations;
    j["validate"]["result"] = check.valid() ? "valid" : "invalid";
    std::cout << json_text(j);
    return check.valid() ? 0 : 1;
}

int cmd_list() {
    Json j;
    j["schema"] = "vdw-lab/1";
    Json exps = Json::array();
    for (const auto& e : experiment_registry()) {
        Json d = Json::object();
        for (const auto& [k, v] : e.defaults) d[k] = v;
        exps.push_back(Json{{"id", e.id}, {"defaults", std::move(d)}});
    }
    j["experiments"] = std::move(exps);
    j["query_kinds"] = Json::array({"return-set", "multi-rec", "ap-rec", "vdw", "ip",
                                    "ap-detect", "density", "banach", "admissible"});
    j["oracles"] = Json::array({"full", "full:<k>", "spacing-even", "spacing-odd", "ap-free",
                                "ap-free:allow-empty", "ip-free", "budget:identity",
                                "budget:log<b>", "closure:d=<d>"});
    j["points"] = Json::array({"subst:d=<d>[,seed=<0|1>]", "periodic:<word>", "word:<word>",
                               "greedy:<budget>", "<point>@<shift>"});
    return emit(j);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vdw-lab: exact experiments on recurrence in symbolic dynamics"};
    app.require_subcommand(1);

    ExperimentArgs ea;
    CLI::App* exp = app.add_subcommand("experiment", "run a gallery experiment");
    exp->add_option("id", ea.id, "experiment id (see `list`)")->required();
    exp->add_option("--threads", ea.threads, "worker thread count");
    exp->add_option("--format", ea.format, "json, tsv or both");
    exp->add_option("--out", ea.out_prefix, "output file prefix");
    exp->add_option("--config", ea.config_path, "run configuration file");
    exp->allow_extras();

    QueryArgs qa;
    CLI::App* query = app.add_subcommand("query", "answer one question as JSON");
    query->require_subcommand(1);
    auto add_common = [&](CLI::App* k) {
        k->add_option("--threads", qa.threads, "worker thread count");
        return k;
    };
    CLI::App* k_ret = add_common(query->add_subcommand("return-set", "occurrences of a word"));
    k_ret->add_option("--point", qa.point)->required();
    k_ret->add_option("--word", qa.word)->required();
    k_ret->add_option("--horizon", qa.horizon)->required();
    CLI::App* k_multi = add_common(query->add_subcommand("multi-rec", "simultaneous returns"));
    k_multi->add_option("--point", qa.point)->required();
    k_multi->add_option("--depth", qa.depth)->required();
    k_multi->add_option("--match-len", qa.match_len)->required();
    k_multi->add_option("--horizon", qa.horizon)->required();
    CLI::App* k_ap = add_common(query->add_subcommand("ap-rec", "progression-shaped returns"));
    k_ap->add_option("--point", qa.point)->required();
    k_ap->add_option("--word", qa.word)->required();
    k_ap->add_option("--d", qa.depth)->required();
    k_ap->add_option("--horizon", qa.horizon)->required();
    CLI::App* k_vdw = add_common(query->add_subcommand("vdw", "progression witness in a space"));
    k_vdw->add_option("--oracle", qa.oracle)->required();
    k_vdw->add_option("--word", qa.word)->required();
    k_vdw->add_option("--d", qa.depth)->required();
    k_vdw->add_option("--horizon", qa.horizon);
    k_vdw->add_flag("--exhaustive-fills", qa.exhaustive_fills,
                    "try every filling of the gaps, not just zeros");
    CLI::App* k_ip = add_common(query->add_subcommand("ip", "finite-sums witness in a space"));
    k_ip->add_option("--oracle", qa.oracle)->required();
    k_ip->add_option("--word", qa.word)->required();
    k_ip->add_option("--gens", qa.gens_text, "semicolon-separated generator lists");
    k_ip->add_option("--alpha-bound", qa.alpha_bound);
    CLI::App* k_det = query->add_subcommand("ap-detect", "progressions inside a finite set");
    k_det->add_option("--set", qa.set_text)->required();
    k_det->add_option("--len", qa.ap_len, "look for this length; omit for the longest");
    CLI::App* k_den = query->add_subcommand("density", "prefix density extremes");
    k_den->add_option("--set", qa.set_text)->required();
    k_den->add_option("--horizon", qa.horizon)->required();
    CLI::App* k_ban = query->add_subcommand("banach", "best window density");
    k_ban->add_option("--set", qa.set_text)->required();
    k_ban->add_option("--horizon", qa.horizon)->required();
    k_ban->add_option("--window", qa.window)->required();
    CLI::App* k_adm = query->add_subcommand("admissible", "word admissibility in a space");
    k_adm->add_option("--oracle", qa.oracle)->required();
    k_adm->add_option("--word", qa.word)->required();

    std::string config_path;
    CLI::App* validate = app.add_subcommand("validate", "check a run configuration file");
    validate->add_option("path", config_path, "configuration file")->required();

    CLI::App* list = app.add_subcommand("list", "enumerate experiments and query kinds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    ea.threads_given = exp->count("--threads") > 0;
    ea.format_given = exp->count("--format") > 0;
    ea.out_given = exp->count("--out") > 0;

    try {
        if (exp->parsed()) return cmd_experiment(ea, exp->remaining());
        if (query->parsed()) {
            for (CLI::App* k : query->get_subcommands())
                return cmd_query(k->get_name(), qa);
        }
        if (validate->parsed()) return cmd_validate(config_path);
        if (list->parsed()) return cmd_list();
    } catch (const vdwlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.category()) {
            case ErrorCategory::usage: return 2;
            case ErrorCategory::claim: return 1;
            case ErrorCategory::resource: return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
