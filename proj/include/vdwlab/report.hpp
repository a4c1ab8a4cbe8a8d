// Experiment reports and their serialized forms.  JSON output is canonical:
// keys appear in a fixed insertion order, values are built deterministically
// from the experiment parameters, and nothing time- or machine-dependent is
// ever written (timings go to stderr).  Running the same experiment twice,
// with any thread count, must produce byte-identical bytes here.
//
// A claim can pass, fail, come back empty at its declared horizon, or record
// a statement taken from the source without a machine check ("cited").  Only
// fail is a hard error for exit-code purposes.

#ifndef VDWLAB_REPORT_HPP
#define VDWLAB_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vdwlab/natset.hpp"
#include "vdwlab/word.hpp"

namespace vdwlab {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { pass, fail, horizon_negative, cited };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::horizon_negative: return "horizon_negative";
        default: return "cited";
    }
}

struct Claim {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::fail;
    std::uint64_t horizon = 0;
    Json witness;           // witness or counterexample payload, may be null
    std::string proof_rule; // set when a structural rule decided the claim
    std::string note;       // conventions, deviations, citations

    bool ok() const { return status != ClaimStatus::fail; }
};

struct ExperimentReport {
    std::string experiment_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Claim> claims;

    bool all_ok() const {
        for (const auto& c : claims)
            if (!c.ok()) return false;
        return true;
    }
};

inline constexpr std::size_t report_list_cap = 4096;

inline Json to_json(const APWitness& w) {
    return Json{{"start", w.start}, {"step", w.step}, {"length", w.length}};
}

inline Json to_json(const WindowSet& s) {
    Json j;
    j["horizon"] = s.horizon();
    j["count"] = s.count();
    if (s.stores_members()) {
        const auto& m = s.members();
        if (m.size() <= report_list_cap) {
            j["members"] = m;
        } else {
            j["members"] = Members(m.begin(), m.begin() + report_list_cap);
            j["truncated"] = true;
        }
    } else {
        Json runs = Json::array();
        for (const auto& [a, b] : s.runs()) runs.push_back(Json::array({a, b}));
        j["runs"] = std::move(runs);
    }
    return j;
}

inline Json to_json(const SparseWord& w) {
    Json j;
    j["kind"] = "sparse";
    j["length"] = w.length;
    j["mark"] = std::string(1, w.mark);
    if (w.positions.size() <= report_list_cap) {
        j["positions"] = w.positions;
    } else {
        j["positions"] = Members(w.positions.begin(),
                                 w.positions.begin() + report_list_cap);
        j["truncated"] = true;
    }
    return j;
}

// Index sets are usually contiguous runs; compress those.
inline Json index_set_json(const Members& alpha) {
    bool contiguous = !alpha.empty();
    for (std::size_t i = 1; i < alpha.size() && contiguous; ++i)
        contiguous = alpha[i] == alpha[i - 1] + 1;
    if (contiguous && alpha.size() > 16)
        return Json{{"from", alpha.front()}, {"to", alpha.back()}, {"count", alpha.size()}};
    return Json(alpha);
}

inline Json to_json(const ExperimentReport& r) {
    Json j;
    j["schema"] = "vdw-lab/1";
    j["experiment_id"] = r.experiment_id;
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    Json claims = Json::array();
    for (const auto& c : r.claims) {
        Json cj;
        cj["claim_id"] = c.claim_id;
        cj["status"] = to_string(c.status);
        cj["horizon"] = c.horizon;
        if (!c.witness.is_null()) cj["witness"] = c.witness;
        if (!c.proof_rule.empty()) cj["proof_rule"] = c.proof_rule;
        if (!c.note.empty()) cj["note"] = c.note;
        claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
    return j;
}

inline std::string to_canonical_json_text(const ExperimentReport& r) {
    return to_json(r).dump(2) + "\n";
}

// One claim per row; witness flattened to compact JSON for diffability.
inline std::string to_tsv(const ExperimentReport& r) {
    std::string out = "experiment_id\tclaim_id\tstatus\thorizon\tproof_rule\tnote\twitness\n";
    for (const auto& c : r.claims) {
        out += r.experiment_id;
        out += '\t';
        out += c.claim_id;
        out += '\t';
        out += to_string(c.status);
        out += '\t';
        out += std::to_string(c.horizon);
        out += '\t';
        out += c.proof_rule;
        out += '\t';
        out += c.note;
        out += '\t';
        out += c.witness.is_null() ? "" : c.witness.dump();
        out += '\n';
    }
    return out;
}

} // namespace vdwlab

#endif
