#ifndef BICOVER_REPORT_JSON_HPP
#define BICOVER_REPORT_JSON_HPP

#include <string>

#include "bicover/approximation.hpp"
#include "bicover/constructions.hpp"
#include "bicover/generators.hpp"
#include "bicover/io.hpp"
#include "bicover/oracles.hpp"
#include "bicover/randomized.hpp"

namespace bicover {

inline constexpr const char* kFormatVersion = "bicover/1";

inline ordered_json oracle_report_to_json(const OracleReport& r) {
    ordered_json j;
    j["format"] = kFormatVersion;
    j["kind"] = "oracle-report";
    j["n"] = r.n;
    j["k"] = r.k;
    j["m"] = r.m;
    j["chiC"] = r.chi_c;
    j["chi"] = r.chi;
    j["alpha"] = r.alpha;
    if (r.gamma) {
        j["gamma"] = *r.gamma;
        j["gammaNote"] =
            "maximized over unordered optimal covers; reordering a cover's "
            "bicolorings permutes every color bit vector alike, so ordered "
            "covers attain the same maximum";
    } else {
        j["gamma"] = nullptr;
        j["gammaRefusal"] = r.gamma_refusal;
    }
    j["omega"] = r.omega;
    j["omegaConvention"] = r.omega_convention;
    j["gammaConvention"] = r.gamma_convention;
    j["alphaExact"] = r.alpha_exact;
    ordered_json w;
    w["cover"] = cover_to_json(r.n, r.chi_c_witness);
    w["coloring"] = coloring_to_json(r.chi_witness);
    w["independentSet"] = vertex_set_to_json(r.alpha_witness);
    if (r.gamma && !r.gamma_convention) w["gammaCover"] = cover_to_json(r.n, r.gamma_witness);
    w["omegaSet"] = vertex_set_to_json(r.omega_witness);
    j["witnesses"] = std::move(w);
    j["checksPassed"] = r.checks_passed();
    j["checkFailures"] = r.check_failures;
    return j;
}

inline ordered_json trace_to_json(int n, const ConstructionTrace& t) {
    ordered_json j;
    j["format"] = kFormatVersion;
    j["kind"] = "construction-trace";
    j["algorithm"] = t.algorithm;
    j["inputSize"] = t.input_size;
    j["bound"] = t.bound;
    j["withinBound"] = t.within_bound();
    j["cover"] = cover_to_json(n, t.cover);
    j["levels"] = t.levels;
    return j;
}

inline ordered_json random_run_to_json(int n, const RandomRun& r, const std::string& algo) {
    ordered_json j;
    j["format"] = kFormatVersion;
    j["kind"] = "random-run";
    j["algorithm"] = algo;
    j["seed"] = r.seed;
    j["x"] = r.x;
    j["attempts"] = r.attempts;
    j["resampleCount"] = r.resample_count;
    j["bitsUsed"] = r.bits_used;
    j["valid"] = r.valid;
    j["cover"] = cover_to_json(n, r.cover);
    if (!r.resampled_edges.empty()) {
        auto arr = ordered_json::array();
        for (int e : r.resampled_edges) arr.push_back(e + 1);
        j["resampledEdges"] = std::move(arr);
    }
    return j;
}

inline ordered_json sweep_to_json(int n, const SweepReport& r) {
    ordered_json j;
    j["format"] = kFormatVersion;
    j["kind"] = "sweep-report";
    auto arr = ordered_json::array();
    for (const auto& a : r.attempts) {
        ordered_json row;
        row["s"] = a.s;
        row["heuristic"] = a.heuristic;
        row["success"] = a.success;
        row["colorsUsed"] = a.colors_used;
        if (a.success) row["coverSize"] = a.cover_size;
        arr.push_back(std::move(row));
    }
    j["attempts"] = std::move(arr);
    j["chosenS"] = r.chosen_s;
    j["chosenHeuristic"] = r.chosen_heuristic;
    j["colorsUsed"] = r.colors_used;
    j["cover"] = cover_to_json(n, r.cover);
    return j;
}

inline ordered_json msearch_to_json(const MSearchResult& r) {
    ordered_json j;
    j["format"] = kFormatVersion;
    j["kind"] = "m-search";
    j["k"] = r.k;
    j["x"] = r.x;
    j["n"] = r.n;
    j["note"] = "minimum taken over hypergraphs on exactly n labeled vertices";
    j["exact"] = r.exact;
    if (r.exact) j["m"] = r.m_min;
    j["verifiedCoverableUpTo"] = r.verified_coverable_up_to;
    j["instancesExamined"] = r.instances_examined;
    j["lowerExclusive"] = r.lower_exclusive;
    j["upperProbabilistic"] = r.upper_probabilistic;
    j["completeUpperM"] = r.kn_upper_m;
    j["completeUpperT"] = r.kn_upper_t;
    j["completeUpperVerified"] = r.kn_verified;
    if (r.witness) {
        ordered_json w;
        w["n"] = r.witness->n();
        w["k"] = r.witness->k();
        w["edges"] = edge_set_to_json(r.witness->edges());
        j["witness"] = std::move(w);
    }
    return j;
}

inline ordered_json clique_gap_to_json(const CliqueGapReport& r) {
    ordered_json j;
    j["format"] = kFormatVersion;
    j["kind"] = "clique-gap-report";
    j["k"] = r.k;
    j["t"] = r.t;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["p"] = r.p;
    j["edgesBefore"] = r.edges_before;
    j["cliquesFound"] = r.cliques_found;
    j["verticesDeleted"] = r.vertices_deleted;
    j["edgesAfter"] = r.edges_after;
    j["omega"] = r.omega;
    j["omegaConvention"] = r.omega_convention;
    j["independentSetFound"] = r.independent_set_found;
    j["independentSetExact"] = r.independent_set_exact;
    j["expectedCliques"] = r.expected_cliques;
    j["cliqueBound"] = r.clique_bound;
    j["expectationInequality"] = r.expectation_inequality;
    j["expectedIndependentSetBound"] = r.expected_is_bound;
    j["nThreshold"] = r.n_threshold;
    return j;
}

} // namespace bicover

#endif // BICOVER_REPORT_JSON_HPP
