/// Corpus files: a JSON list of fixture records with frozen expected
/// values. Verification recomputes every expected value and reports
/// exact diffs; unknown fields are rejected outright.
#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "ideal.hpp"
#include "parse.hpp"
#include "spectrum.hpp"

namespace hsinv {

struct CorpusOutcome {
    bool ok = true;
    bool empty = false;
    size_t fixtures_checked = 0;
    size_t values_checked = 0;
    std::vector<std::string> diffs;
};

namespace corpus_detail {

inline const std::set<std::string> record_keys = {
    "name", "poly", "vars", "weights", "semi_qh", "q_homology_manifold",
    "expected", "provenance"};
inline const std::set<std::string> expected_keys = {
    "mu", "tau", "spectrum", "tjurina_subspectrum", "alpha_tilde", "alpha_min_int", "beta"};

inline std::string count_str(const std::optional<size_t>& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

}  // namespace corpus_detail

inline nlohmann::ordered_json corpus_to_json() {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& fx : bundled_fixtures()) {
        nlohmann::ordered_json r;
        r["name"] = fx.name;
        r["poly"] = fx.poly;
        r["vars"] = fx.vars;
        if (!fx.weights.empty()) r["weights"] = fx.weights;
        if (fx.semi_qh) r["semi_qh"] = true;
        if (fx.q_homology_manifold) r["q_homology_manifold"] = true;
        nlohmann::ordered_json e, p;
        for (const auto& [k, v] : fx.expected) e[k] = v;
        for (const auto& [k, v] : fx.provenance) p[k] = v;
        // root multisets ride along as bundled data where present
        for (const auto& bf : beta_fixtures()) {
            if (bf.name == fx.name) {
                e["beta"] = bf.beta.str();
                p["beta"] = "literature";
            }
        }
        r["expected"] = e;
        r["provenance"] = p;
        arr.push_back(r);
    }
    doc["fixtures"] = arr;
    return doc;
}

inline CorpusOutcome verify_corpus(const nlohmann::json& doc) {
    CorpusOutcome out;
    auto mismatch = [&](const std::string& name, const std::string& field,
                        const std::string& expected, const std::string& got) {
        out.ok = false;
        out.diffs.push_back(name + "." + field + ": expected " + expected + ", got " + got);
    };

    if (!doc.contains("fixtures") || !doc["fixtures"].is_array())
        throw error("corpus: missing 'fixtures' array");
    for (const auto& [k, v] : doc.items())
        if (k != "schema_version" && k != "fixtures")
            throw error("corpus: unknown top-level field '" + k + "'");
    if (doc["fixtures"].empty()) {
        out.empty = true;
        return out;
    }

    for (const auto& r : doc["fixtures"]) {
        for (const auto& [k, v] : r.items())
            if (!corpus_detail::record_keys.count(k))
                throw error("corpus: unknown field '" + k + "' in record");
        std::string name = r.at("name").get<std::string>();
        std::string poly = r.at("poly").get<std::string>();
        std::vector<std::string> vars = r.at("vars").get<std::vector<std::string>>();
        bool semi_qh = r.value("semi_qh", false);

        std::optional<WeightSystem> weights;
        if (r.contains("weights")) {
            std::vector<Rat> w;
            for (const auto& s : r["weights"]) w.push_back(Rat::parse(s.get<std::string>()));
            weights = WeightSystem(std::move(w));
        }

        auto ring = make_ring(vars);
        MPoly f = parse_poly(poly, ring);
        ++out.fixtures_checked;

        if (!r.contains("expected")) continue;
        const auto& expected = r["expected"];
        for (const auto& [k, v] : expected.items())
            if (!corpus_detail::expected_keys.count(k))
                throw error("corpus: unknown expected field '" + k + "' in " + name);
        if (r.contains("provenance"))
            for (const auto& [k, v] : r["provenance"].items())
                if (!corpus_detail::expected_keys.count(k))
                    throw error("corpus: provenance for unknown field '" + k + "' in " + name);
        // every expected value carries a provenance tag
        for (const auto& [k, v] : expected.items()) {
            if (!r.contains("provenance") || !r["provenance"].contains(k))
                throw error("corpus: expected value '" + k + "' in " + name +
                            " lacks a provenance tag");
        }

        std::optional<size_t> mu;
        if (expected.contains("mu")) {
            mu = milnor_number(f);
            std::string got = corpus_detail::count_str(mu);
            if (got != expected["mu"].get<std::string>())
                mismatch(name, "mu", expected["mu"].get<std::string>(), got);
            ++out.values_checked;
        }
        if (expected.contains("tau")) {
            std::string got = corpus_detail::count_str(tjurina_number(f));
            if (got != expected["tau"].get<std::string>())
                mismatch(name, "tau", expected["tau"].get<std::string>(), got);
            ++out.values_checked;
        }

        SpectrumPoly sp;
        bool have_sp = false;
        if (expected.contains("spectrum") || expected.contains("alpha_tilde") ||
            expected.contains("alpha_min_int") || expected.contains("beta")) {
            if (!weights)
                throw error("corpus: fixture " + name + " needs weights for spectral values");
            sp = spectrum_qh(f, *weights, semi_qh);
            have_sp = true;
        }
        if (expected.contains("spectrum")) {
            if (sp.str() != expected["spectrum"].get<std::string>())
                mismatch(name, "spectrum", expected["spectrum"].get<std::string>(), sp.str());
            ++out.values_checked;
        }
        if (expected.contains("tjurina_subspectrum")) {
            SpectrumPoly sptj = tjurina_subspectrum(f, *weights, semi_qh);
            if (sptj.str() != expected["tjurina_subspectrum"].get<std::string>())
                mismatch(name, "tjurina_subspectrum",
                         expected["tjurina_subspectrum"].get<std::string>(), sptj.str());
            ++out.values_checked;
        }
        if (expected.contains("alpha_tilde")) {
            std::string got = sp.empty() ? "inf" : sp.min().str();
            if (got != expected["alpha_tilde"].get<std::string>())
                mismatch(name, "alpha_tilde", expected["alpha_tilde"].get<std::string>(), got);
            ++out.values_checked;
        }
        if (expected.contains("alpha_min_int")) {
            std::string got = sp.min_integral().str();
            if (got != expected["alpha_min_int"].get<std::string>())
                mismatch(name, "alpha_min_int", expected["alpha_min_int"].get<std::string>(),
                         got);
            ++out.values_checked;
        }
        if (expected.contains("beta")) {
            SpectrumPoly beta = SpectrumPoly::parse(expected["beta"].get<std::string>());
            bool size_ok = have_sp && beta.total() == sp.total();
            bool match_ok = size_ok && integral_shift_matching(sp, beta);
            if (!match_ok)
                mismatch(name, "beta", "integral-shift matching against the spectrum",
                         size_ok ? "no matching" : "size mismatch");
            ++out.values_checked;
        }
    }
    // report in fixture-name order, independent of processing order
    std::sort(out.diffs.begin(), out.diffs.end());
    return out;
}

inline CorpusOutcome verify_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("corpus: cannot open " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    return verify_corpus(doc);
}

}  // namespace hsinv
