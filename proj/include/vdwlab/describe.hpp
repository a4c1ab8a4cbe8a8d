// Text-facing plumbing for the command line: point descriptors, the run
// configuration file format, and the semantic checks behind `validate`.
//
// Descriptors are deliberately small.  A point is one of
//
//   subst:d=2          fixed point of the depth-2 substitution, seed 1
//   subst:d=1,seed=0   the companion fixed point with seed 0
//   periodic:01        the periodic point 010101...
//   word:101           the point 101 followed by zeros
//   greedy:log2        the word-concatenation point under the log2 budget
//
// optionally followed by @k to shift the point k places.  Oracle descriptors
// are handled by make_subshift.
//
// The configuration file is a restricted key-value format: full-line comments
// with # or ;, section headers in brackets, one key = value per line.  The
// parser is syntax only; validate_run_config applies the semantic rules and
// collects violations instead of stopping at the first.

#ifndef VDWLAB_DESCRIBE_HPP
#define VDWLAB_DESCRIBE_HPP

#include <cctype>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vdwlab/budget.hpp"
#include "vdwlab/errors.hpp"
#include "vdwlab/gallery.hpp"
#include "vdwlab/report.hpp"
#include "vdwlab/sequence.hpp"
#include "vdwlab/subshift.hpp"
#include "vdwlab/substitution.hpp"

namespace vdwlab {

// ---------------------------------------------------------------------------
// Point descriptors.

// The greedy word-concatenation point, materialized on demand.  Regenerating
// from scratch on each extension is cheap because the construction pads
// exponentially, and it keeps the core stateless: the word order never
// depends on how far anyone has looked.
class GreedyBudgetCore final : public SequenceCore {
public:
    explicit GreedyBudgetCore(Budget f) : f_id_(f.id()), shift_(std::move(f)) {}

    Descriptor describe() const override { return {"greedy-budget", {{"budget", f_id_}}}; }

protected:
    void extend(std::string& buf, std::uint64_t need) override {
        GreedyPoint gp = greedy_budget_point(shift_, need);
        buf.assign(static_cast<std::size_t>(gp.length), '0');
        for (auto m : gp.marks) buf[static_cast<std::size_t>(m)] = '1';
    }

private:
    std::string f_id_;
    BoundedDensityShift shift_;
};

namespace detail {

inline std::uint64_t parse_u64_text(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (...) {
        throw ParseError(what + " '" + text + "' is not a number");
    }
}

} // namespace detail

inline Sequence make_point(const std::string& descriptor) {
    std::string base = descriptor;
    std::uint64_t shift = 0;
    if (auto at = descriptor.rfind('@'); at != std::string::npos) {
        base = descriptor.substr(0, at);
        shift = detail::parse_u64_text(descriptor.substr(at + 1), "shift");
    }
    auto colon = base.find(':');
    if (colon == std::string::npos)
        throw ParseError("point descriptor '" + base + "' has no kind prefix");
    std::string kind = base.substr(0, colon);
    std::string rest = base.substr(colon + 1);

    Sequence x = [&]() -> Sequence {
        if (kind == "periodic") return Sequence::periodic(rest);
        if (kind == "word") return Sequence::word_then_zeros(rest);
        if (kind == "greedy")
            return Sequence(std::make_shared<GreedyBudgetCore>(parse_budget_id(rest)));
        if (kind == "subst") {
            std::uint64_t d = 0;
            char seed = '1';
            bool have_d = false;
            std::stringstream ss(rest);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected key=value in '" + item + "'");
                std::string k = item.substr(0, eq), v = item.substr(eq + 1);
                if (k == "d") {
                    d = detail::parse_u64_text(v, "depth");
                    have_d = true;
                } else if (k == "seed") {
                    if (v != "0" && v != "1") throw ParseError("seed must be 0 or 1");
                    seed = v[0];
                } else {
                    throw ParseError("unknown substitution parameter '" + k + "'");
                }
            }
            if (!have_d || d < 1 || d > 6)
                throw ParseError("substitution point needs d in 1..6");
            return Sequence::substitution_fixed_point(
                depth_substitution(static_cast<unsigned>(d)), seed);
        }
        throw ParseError("unknown point kind '" + kind + "'");
    }();
    return shift ? x.shifted(shift) : x;
}

// ---------------------------------------------------------------------------
// Configuration files.

struct ConfigSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    const std::string* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
};

struct Config {
    std::vector<ConfigSection> sections;

    const ConfigSection* find(const std::string& name) const {
        for (const auto& s : sections)
            if (s.name == name) return &s;
        return nullptr;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

} // namespace detail

inline Config parse_config_text(const std::string& text) {
    Config cfg;
    ConfigSection* cur = nullptr;
    std::stringstream ss(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        std::string where = "line " + std::to_string(lineno);
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(where + ": unterminated section header");
            std::string name = detail::trim(line.substr(1, line.size() - 2));
            if (name.empty()) throw ParseError(where + ": empty section name");
            if (cfg.find(name)) throw ParseError(where + ": duplicate section [" + name + "]");
            cfg.sections.push_back({name, {}});
            cur = &cfg.sections.back();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(where + ": expected key = value or [section]");
        if (!cur) throw ParseError(where + ": key outside any section");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(where + ": empty key");
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (cur->find(key))
            throw ParseError(where + ": duplicate key '" + key + "' in [" + cur->name + "]");
        cur->entries.emplace_back(key, value);
    }
    return cfg;
}

inline Config parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

// ---------------------------------------------------------------------------
// Semantic validation.  Syntax problems throw ParseError; everything past
// syntax lands in the violations list so a report can show all of them.

struct ConfigCheck {
    Json details = Json::object();
    std::vector<std::string> violations;

    bool valid() const { return violations.empty(); }
};

namespace detail {

inline bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

inline ConfigCheck validate_run_config(const Config& cfg) {
    ConfigCheck out;
    auto flag = [&](const std::string& msg) { out.violations.push_back(msg); };

    for (const auto& s : cfg.sections)
        if (s.name != "experiment" && s.name != "experiment.params" && s.name != "budget")
            flag("unknown section [" + s.name + "]");

    const ExperimentEntry* entry = nullptr;
    if (const ConfigSection* ex = cfg.find("experiment")) {
        Json j = Json::object();
        for (const auto& [k, v] : ex->entries) {
            if (k == "id") {
                for (const auto& e : experiment_registry())
                    if (e.id == v) entry = &e;
                if (!entry) flag("unknown experiment id '" + v + "'");
                j["id"] = v;
            } else if (k == "threads") {
                if (!detail::looks_numeric(v) || v == "0")
                    flag("threads must be a positive integer, got '" + v + "'");
                j["threads"] = v;
            } else if (k == "format") {
                if (v != "json" && v != "tsv" && v != "both")
                    flag("format must be json, tsv or both, got '" + v + "'");
                j["format"] = v;
            } else if (k == "out") {
                if (v.empty()) flag("out must be a nonempty path prefix");
                j["out"] = v;
            } else {
                flag("unknown key '" + k + "' in [experiment]");
            }
        }
        if (!ex->find("id")) flag("[experiment] is missing the id key");
        out.details["experiment"] = std::move(j);
    }

    if (const ConfigSection* ps = cfg.find("experiment.params")) {
        if (!cfg.find("experiment"))
            flag("[experiment.params] without an [experiment] section");
        Json j = Json::object();
        for (const auto& [k, v] : ps->entries) {
            j[k] = v;
            if (!entry) continue;
            const std::string* dv = nullptr;
            for (const auto& [dk, d] : entry->defaults)
                if (dk == k) dv = &d;
            if (!dv) {
                flag("experiment " + entry->id + " has no parameter '" + k + "'");
            } else if (detail::looks_numeric(*dv) && !detail::looks_numeric(v)) {
                flag("parameter " + k + " expects a number, got '" + v + "'");
            }
        }
        out.details["params"] = std::move(j);
    }

    if (const ConfigSection* bs = cfg.find("budget")) {
        Json j = Json::object();
        std::size_t clean_mark = out.violations.size();
        const std::string* id = bs->find("id");
        const std::string* values = bs->find("values");
        std::uint64_t cap = 64;
        std::optional<Budget> f;
        std::uint64_t value_cap = ~std::uint64_t{0};
        for (const auto& [k, v] : bs->entries)
            if (k != "id" && k != "values" && k != "cap")
                flag("unknown key '" + k + "' in [budget]");
        if (const std::string* c = bs->find("cap")) {
            if (!detail::looks_numeric(*c) || *c == "0") {
                flag("cap must be a positive integer, got '" + *c + "'");
            } else {
                cap = detail::parse_u64_text(*c, "cap");
                // The subadditivity check is quadratic in the cap.
                if (cap > 4096) flag("cap is limited to 4096, got " + *c);
            }
        }
        if (id && values) {
            flag("[budget] takes id or values, not both");
        } else if (id) {
            j["id"] = *id;
            try {
                f = parse_budget_id(*id);
            } catch (const Error& e) {
                flag(e.what());
            }
        } else if (values) {
            auto table = std::make_shared<std::vector<std::uint64_t>>();
            std::stringstream ss(*values);
            std::string item;
            bool ok = true;
            while (std::getline(ss, item, ',')) {
                item = detail::trim(item);
                if (!detail::looks_numeric(item)) {
                    flag("budget value '" + item + "' is not a number");
                    ok = false;
                    break;
                }
                table->push_back(detail::parse_u64_text(item, "budget value"));
            }
            if (ok && table->empty()) {
                flag("budget values list is empty");
                ok = false;
            }
            if (ok) {
                j["values"] = *table;
                value_cap = table->size() - 1;
                f = Budget::custom("config-values", [table](std::uint64_t p) {
                    return (*table)[std::min<std::uint64_t>(p, table->size() - 1)];
                });
            }
        } else {
            flag("[budget] needs an id or a values key");
        }
        if (f && out.violations.size() == clean_mark) {
            std::uint64_t use_cap = std::min(cap, value_cap);
            CanonicalityReport r = check_canonical(*f, use_cap);
            j["checked_up_to"] = r.checked_up_to;
            j["zero_at_zero"] = r.zero_at_zero;
            j["nondecreasing"] = r.nondecreasing;
            j["subadditive"] = r.subadditive;
            j["canonical"] = r.canonical();
            if (!r.zero_at_zero) flag("budget violates f(0) = 0");
            if (!r.nondecreasing)
                flag("budget decreases at m = " + std::to_string(*r.decrease_at));
            if (!r.subadditive)
                flag("budget violates f(m+n) <= f(m) + f(n) at m = " +
                     std::to_string(r.subadditivity_failure->first) + ", n = " +
                     std::to_string(r.subadditivity_failure->second));
        }
        out.details["budget"] = std::move(j);
    }

    return out;
}

} // namespace vdwlab

#endif
