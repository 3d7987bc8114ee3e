#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace deltaj {

using json = nlohmann::ordered_json;

// One evaluated form of a check: either the form that gates the run, or the
// literally-stated form kept for the record when the two differ.
struct CheckOutcome {
    long enumerated = 0;  // every instance the check looked at
    long tested = 0;      // instances that met all hypotheses
    long filtered = 0;    // instances removed by a hypothesis filter
    bool pass = true;
    bool vacuous = false;  // every instance was hypothesis-filtered
    std::vector<json> counterexamples;
    std::vector<std::string> notes;

    void count(bool hypotheses_hold) {
        ++enumerated;
        if (hypotheses_hold) ++tested; else ++filtered;
    }
    void fail(json cex) {
        pass = false;
        counterexamples.push_back(std::move(cex));
    }
    void finish() { vacuous = (tested == 0); }
};

// One numbered part of a check (e.g. the separate claims of a multi-part
// result). Single-claim checks have exactly one part whose id equals the
// check id.
struct CheckPart {
    std::string id;
    std::string what;  // one-line statement of the verified property
    CheckOutcome gating;
    std::optional<CheckOutcome> stated;  // present when a literal reading is also evaluated

    bool pass() const { return gating.pass; }
};

struct CheckReport {
    std::string id;
    std::vector<CheckPart> parts;
    double seconds = 0.0;  // shown in text output only, never serialized

    bool pass() const {
        for (const auto& p : parts)
            if (!p.pass()) return false;
        return true;
    }
    bool vacuous() const {
        for (const auto& p : parts)
            if (!p.gating.vacuous) return false;
        return !parts.empty();
    }
};

inline json outcome_to_json(const CheckOutcome& o) {
    json j;
    j["enumerated"] = o.enumerated;
    j["tested"] = o.tested;
    j["filtered"] = o.filtered;
    j["outcome"] = o.pass ? (o.vacuous ? "pass (vacuous)" : "pass") : "fail";
    if (o.vacuous) j["vacuous"] = true;
    if (!o.counterexamples.empty()) j["counterexamples"] = o.counterexamples;
    if (!o.notes.empty()) j["notes"] = o.notes;
    return j;
}

// Structured form of a report. Deliberately omits timing so identical
// configurations serialize byte-identically.
inline json report_to_json(const CheckReport& r) {
    json j;
    j["check"] = r.id;
    json parts = json::array();
    for (const auto& p : r.parts) {
        json pj;
        pj["id"] = p.id;
        pj["what"] = p.what;
        pj["gating"] = outcome_to_json(p.gating);
        if (p.stated) pj["stated"] = outcome_to_json(*p.stated);
        parts.push_back(std::move(pj));
    }
    j["parts"] = std::move(parts);
    j["outcome"] = r.pass() ? (r.vacuous() ? "pass (vacuous)" : "pass") : "fail";
    return j;
}

inline std::string outcome_to_text(const CheckOutcome& o) {
    std::string s = o.pass ? (o.vacuous ? "pass (VACUOUS)" : "pass") : "FAIL";
    s += "  tested=" + std::to_string(o.tested) +
         " filtered=" + std::to_string(o.filtered) +
         " enumerated=" + std::to_string(o.enumerated);
    if (!o.counterexamples.empty())
        s += " counterexamples=" + std::to_string(o.counterexamples.size());
    return s;
}

}  // namespace deltaj
