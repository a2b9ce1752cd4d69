#pragma once

#include <json.hpp>

#include "bounds.hpp"
#include "finders.hpp"
#include "generators.hpp"
#include "metrics.hpp"
#include "oracle.hpp"

// JSON shapes for every document the CLI emits; ordered_json keeps field
// order stable so reruns are byte-identical.
namespace blkd {

using Json = nlohmann::ordered_json;

inline Json to_json(const Witness& w) {
    Json j;
    j["kind"] = kind_name(w.kind);
    j["assignment"] = w.assignment;
    j["blocks"] = w.blocks_used;
    return j;
}

inline Json to_json(const TraceStage& s) {
    Json j;
    j["stage"] = s.name;
    j["required"] = s.required;
    j["measured"] = s.measured;
    j["pass"] = s.pass;
    return j;
}

inline Json to_json(const FinderOutcome& o) {
    Json j;
    j["found"] = o.found();
    if (o.witness) j["witness"] = to_json(*o.witness);
    Json tr = Json::array();
    for (const auto& s : o.trace) tr.push_back(to_json(s));
    j["trace"] = tr;
    if (o.failure_stage) j["failure_stage"] = *o.failure_stage;
    return j;
}

inline Json to_json(const AnticompletePair& p) {
    Json j;
    j["i"] = p.i;
    j["j"] = p.j;
    j["X"] = p.X;
    j["Y"] = p.Y;
    return j;
}

inline Json to_json(const CohesionReport& r) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["mode"] = r.mode();
    j["x"] = rat_str(Rat(r.x));
    j["y"] = rat_str(Rat(r.y));
    j["subsets_examined"] = r.subsets_examined;
    j["boundary_hits"] = r.boundary_hits;
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (r.best_pair) j["best_pair"] = to_json(*r.best_pair);
    return j;
}

inline Json to_json(const CoherenceReport& r) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["eps"] = rat_str(r.eps);
    j["degree_ok"] = r.degree_ok;
    if (r.degree_witness) {
        Json d;
        d["v"] = r.degree_witness->v;
        d["i"] = r.degree_witness->i;
        d["j"] = r.degree_witness->j;
        d["count"] = r.degree_witness->count;
        d["threshold"] = rat_str(r.degree_witness->threshold);
        j["degree_witness"] = d;
    }
    j["pairs_exact"] = r.pairs_exact;
    if (r.pair_witness) j["pair_witness"] = to_json(*r.pair_witness);
    j["subsets_examined"] = r.subsets_examined;
    j["boundary_hits"] = r.boundary_hits;
    return j;
}

inline Json to_json(const ManyEdgesReport& r) {
    Json j;
    j["premises_checked"] = r.premises_checked;
    j["premises"] = verdict_name(r.premises);
    j["local_degree"] = r.local_deg;
    j["low_degree_count"] = rat_str(Rat(r.low_degree_count));
    j["degree_threshold"] = r.degree_threshold;
    j["bound"] = r.bound;
    j["bound_exceeds_one"] = r.bound_exceeds_one;
    j["conclusion_holds"] = r.conclusion_holds;
    return j;
}

inline Json to_json(const AuditCheck& a) {
    Json j;
    j["check"] = a.name;
    j["required"] = a.required;
    j["measured"] = a.measured;
    j["verified"] = a.verified;
    j["pass"] = a.pass;
    return j;
}

inline Json audit_json(const GenResult& r, const std::string& generator, const Json& params) {
    Json j;
    j["generator"] = generator;
    j["params"] = params;
    j["attempts"] = r.attempts;
    j["accepted"] = r.ok;
    Json checks = Json::array();
    for (const auto& a : r.audit) checks.push_back(to_json(a));
    j["checks"] = checks;
    j["notes"] = r.notes;
    return j;
}

inline Json to_json(const RegimeCard& c) {
    Json j;
    j["theorem"] = c.theorem;
    j["eps"] = rat_str(c.eps);
    j["eps_factored"] = c.eps_factored;
    if (c.c) j["c"] = rat_str(*c.c);
    if (c.tau) j["tau"] = rat_str(*c.tau);
    j["premise"] = c.premise == PremiseKind::coherent ? "coherent" : "cohesive";
    Json th = Json::array();
    for (const auto& t : c.thresholds) {
        Json e;
        e["name"] = t.name;
        e["coeff"] = rat_str(t.coeff);
        e["exponent"] = std::to_string(t.p) + "/" + std::to_string(t.q);
        th.push_back(e);
    }
    j["thresholds"] = th;
    return j;
}

inline Json to_json(const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["length"] = r.length;
    j["width"] = r.width;
    j["errors"] = r.errors;
    return j;
}

}  // namespace blkd
