/// Orchestration: run the full invariant battery on one input
/// polynomial and serialize the outcome as deterministic structured
/// data (and as human-readable text derived from it).
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "koszul.hpp"
#include "parse.hpp"
#include "spectrum.hpp"

namespace hsinv {

using ordered_json = nlohmann::ordered_json;

// Unique positive solution of { val_w(term) = 1 for every term of f },
// when one exists: the weight system that exhibits f as weighted-
// homogeneous of degree one.
inline std::optional<WeightSystem> infer_weights(const MPoly& f) {
    size_t n = f.ring()->size();
    std::vector<QVec> rows;
    QVec rhs;
    for (const auto& [m, c] : f.terms()) {
        QVec row(n, Rat(0));
        for (size_t i = 0; i < n; ++i) row[i] = Rat(static_cast<long>(m[i]));
        rows.push_back(std::move(row));
        rhs.push_back(Rat(1));
    }
    QMatrix sys(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < n; ++j) sys.at(i, j) = rows[i][j];
    if (!sys.kernel_basis().empty()) return std::nullopt;  // not unique
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    for (const auto& wi : *sol)
        if (wi.sign() <= 0) return std::nullopt;
    return WeightSystem(*sol);
}

struct SingularityReport {
    // input echo
    std::string poly_text;
    std::vector<std::string> vars;
    std::optional<WeightSystem> weights;  // normalized to target degree 1
    bool semi_qh = false;
    bool q_homology_manifold = false;

    // invariants
    bool smooth = false;
    bool isolated = true;
    std::optional<size_t> mu, tau;  // nullopt = not finite
    std::optional<AlphaInvariants> alpha;
    Level level = Level::of(-1);
    int codim = 0;

    SpectrumPoly spectrum, subspectrum;
    std::string spectrum_model = "none";  // exact | leading-part-model | none

    std::vector<CheckResult> checks;
    std::map<int, GradedDims> koszul_dims;  // vanishing table (partial output)

    bool any_check_failed() const {
        for (const auto& c : checks)
            if (c.failed()) return true;
        return false;
    }
};

namespace report_detail {

inline std::string count_str(const std::optional<size_t>& v) {
    return v ? std::to_string(*v) : std::string("inf");
}

}  // namespace report_detail

inline SingularityReport analyze(const std::string& poly_text,
                                 const std::vector<std::string>& vars,
                                 std::optional<WeightSystem> weights, bool semi_qh,
                                 bool q_homology_manifold) {
    SingularityReport rep;
    rep.poly_text = poly_text;
    rep.vars = vars;
    rep.semi_qh = semi_qh;
    rep.q_homology_manifold = q_homology_manifold;

    auto ring = make_ring(vars);
    MPoly f = parse_poly(poly_text, ring);
    size_t n = ring->size();
    if (f.is_zero()) throw error("analyze: f = 0 does not define a hypersurface");
    if (!f.constant_term().is_zero())
        throw error("analyze: f(0) != 0, the hypersurface misses the origin");

    rep.mu = milnor_number(f);

    if (rep.mu && *rep.mu == 0) {  // smooth at the origin
        rep.smooth = true;
        rep.tau = 0;
        rep.level = Level::inf();
        rep.spectrum_model = "none";
        rep.checks.push_back(CheckResult::skip(
            "smooth-input", "nonsingular points carry the convention alpha_tilde = +inf",
            "jacobian ideal is the unit ideal at the origin"));
        return rep;
    }

    std::vector<MPoly> tj_gens = partials(f);
    tj_gens.push_back(f);
    rep.codim = static_cast<int>(n) - krull_dimension(tj_gens, n);

    if (!rep.mu) {  // non-isolated: partial output only
        rep.isolated = false;
        rep.tau = tjurina_number(f);
        WeightSystem w = weights ? weights->normalized() : WeightSystem::uniform(n);
        auto vanishing = koszul_vanishing_certificate(f, w, Rat(static_cast<long>(n)));
        for (auto& c : vanishing.checks) rep.checks.push_back(c);
        rep.koszul_dims = vanishing.dims;
        return rep;
    }

    rep.tau = tjurina_number(f);

    // weights: given or inferred
    if (!weights) {
        weights = infer_weights(f);
        if (!weights)
            throw error("analyze: no unique positive weight system makes f weighted-"
                        "homogeneous of degree 1; pass --weights");
    }
    WeightSystem w = weights->normalized();
    rep.weights = w;

    bool qh = is_quasi_homogeneous(f, w);
    if (!qh && !semi_qh)
        throw error("analyze: f is not weighted-homogeneous for the given weights; declare "
                    "--semi-qh to analyze the weight-1 leading part");
    rep.spectrum_model = qh ? "exact" : "leading-part-model";

    rep.spectrum = spectrum_qh(f, w, semi_qh);
    rep.subspectrum = tjurina_subspectrum(f, w, semi_qh);
    AlphaInvariants alpha = alpha_invariants(rep.spectrum, rep.subspectrum);

    // the Q-homology-manifold flag forces the minimal integral spectral
    // number to +inf; the spectrum must back that up
    if (q_homology_manifold) {
        bool consistent = alpha.alpha_min_int.is_infinite();
        rep.checks.push_back(
            consistent ? CheckResult::pass("q-homology-manifold",
                                           "no integral spectral number on a rational "
                                           "homology manifold",
                                           "spectrum has no integral member")
                       : CheckResult::fail("q-homology-manifold",
                                           "no integral spectral number on a rational "
                                           "homology manifold",
                                           "integral spectral number " +
                                               alpha.alpha_min_int.str() + " found"));
        alpha.alpha_min_int = ExtRat::infinity();
    }
    rep.alpha = alpha;
    rep.level = max_du_bois_level(alpha.alpha_tilde);

    // fixed battery, emitted in a stable order
    if (qh) {
        bool euler = euler_identity_check(f, w);
        rep.checks.push_back(euler ? CheckResult::pass("euler-identity",
                                                       "f equals sum w_i x_i df/dx_i",
                                                       "exact polynomial identity")
                                   : CheckResult::fail("euler-identity",
                                                       "f equals sum w_i x_i df/dx_i",
                                                       "identity fails"));
    }

    {
        bool ok = rep.spectrum.total() == *rep.mu;
        std::string witness = "spectrum count " + std::to_string(rep.spectrum.total()) +
                              ", milnor number " + std::to_string(*rep.mu);
        rep.checks.push_back(ok ? CheckResult::pass("spectrum-count",
                                                    "spectrum carries mu members", witness)
                                : CheckResult::fail("spectrum-count",
                                                    "spectrum carries mu members", witness));
    }
    {
        bool ok = rep.subspectrum.total() == *rep.tau;
        std::string witness = "subspectrum count " + std::to_string(rep.subspectrum.total()) +
                              ", tjurina number " + std::to_string(*rep.tau);
        rep.checks.push_back(ok ? CheckResult::pass("subspectrum-count",
                                                    "subspectrum carries tau members", witness)
                                : CheckResult::fail("subspectrum-count",
                                                    "subspectrum carries tau members",
                                                    witness));
    }
    {
        bool ok = symmetry_check(rep.spectrum, static_cast<long>(n));
        rep.checks.push_back(ok ? CheckResult::pass("spectrum-symmetry",
                                                    "spectrum is symmetric about n/2",
                                                    "center " + Rat(static_cast<long>(n), 2).str())
                                : CheckResult::fail("spectrum-symmetry",
                                                    "spectrum is symmetric about n/2",
                                                    "center " + Rat(static_cast<long>(n), 2).str()));
    }
    {
        bool ok = alpha.alpha_tilde <= alpha.alpha_min_int;
        rep.checks.push_back(ok ? CheckResult::pass(
                                      "alpha-below-integral",
                                      "minimal spectral number bounds the integral one",
                                      "alpha_tilde = " + alpha.alpha_tilde.str() +
                                          ", min integral = " + alpha.alpha_min_int.str())
                                : CheckResult::fail(
                                      "alpha-below-integral",
                                      "minimal spectral number bounds the integral one",
                                      "alpha_tilde = " + alpha.alpha_tilde.str() +
                                          ", min integral = " + alpha.alpha_min_int.str()));
    }
    rep.checks.push_back(codim_bound_check(alpha.alpha_tilde, rep.codim));
    {
        Rat half_n(static_cast<long>(n), 2);
        bool ok = !alpha.alpha_tilde.is_infinite() && alpha.alpha_tilde.value() <= half_n;
        rep.checks.push_back(ok ? CheckResult::pass("half-dimension-bound",
                                                    "alpha_tilde <= n/2 for singular input",
                                                    "alpha_tilde = " + alpha.alpha_tilde.str() +
                                                        ", n/2 = " + half_n.str())
                                : CheckResult::fail("half-dimension-bound",
                                                    "alpha_tilde <= n/2 for singular input",
                                                    "alpha_tilde = " + alpha.alpha_tilde.str() +
                                                        ", n/2 = " + half_n.str()));
    }
    rep.checks.push_back(power_membership_bound(f, alpha.alpha_tilde).check);

    // non-vanishing checks at small p, confirmed against computed graded
    // dimensions whenever the strict hypothesis admits them
    for (int p : {0, 1}) {
        if (p >= static_cast<int>(n)) continue;
        ExtRat actual = ExtRat::infinity();
        if (qh && alpha.alpha_tilde.is_infinite() == false &&
            Rat(p + 1) < alpha.alpha_tilde.value() && n <= 6 && p >= 1) {
            Rat hi = Rat(static_cast<long>(n)) - alpha.alpha_tilde.value() + Rat(1);
            auto dims = du_bois_graded_dims(f, w, p, hi);
            actual = ExtRat(Rat(static_cast<long>(dims.at(p).total())));
        }
        rep.checks.push_back(nonvanishing_check(f, w, p, alpha, !qh, actual));
    }

    return rep;
}

// ---- serialization ----------------------------------------------------

inline ordered_json graded_dims_json(const GradedDims& g) {
    ordered_json entries = ordered_json::array();
    for (const auto& [d, v] : g.entries)
        entries.push_back(ordered_json::array({d.str(), v}));
    return ordered_json{{"window", {g.window_lo.str(), g.window_hi.str()}},
                        {"truncated", g.truncated},
                        {"entries", entries}};
}

inline ordered_json report_json(const SingularityReport& rep) {
    ordered_json j;
    j["schema_version"] = 1;
    ordered_json input;
    input["poly"] = rep.poly_text;
    input["vars"] = rep.vars;
    if (rep.weights) {
        std::vector<std::string> ws;
        for (const auto& wi : rep.weights->w) ws.push_back(wi.str());
        input["weights"] = ws;
    } else {
        input["weights"] = nullptr;
    }
    input["semi_qh"] = rep.semi_qh;
    input["q_homology_manifold"] = rep.q_homology_manifold;
    j["input"] = input;

    ordered_json inv;
    inv["smooth"] = rep.smooth;
    inv["isolated"] = rep.isolated;
    inv["mu"] = report_detail::count_str(rep.mu);
    inv["tau"] = report_detail::count_str(rep.tau);
    if (rep.alpha) {
        inv["alpha_tilde"] = rep.alpha->alpha_tilde.str();
        inv["alpha_min_int"] = rep.alpha->alpha_min_int.str();
        inv["alpha_max_tj"] = rep.alpha->alpha_max_tj.str();
    } else if (rep.smooth) {
        inv["alpha_tilde"] = "inf";
    }
    inv["max_du_bois_level"] = rep.level.str();
    inv["codim_sing"] = rep.codim;
    j["invariants"] = inv;

    j["spectrum"] = rep.spectrum.str();
    j["tjurina_subspectrum"] = rep.subspectrum.str();
    j["spectrum_model"] = rep.spectrum_model;

    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
        checks.push_back(ordered_json{{"name", c.name},
                                      {"rule", c.rule},
                                      {"status", to_string(c.status)},
                                      {"witness", c.witness}});
    j["checks"] = checks;

    if (!rep.koszul_dims.empty()) {
        ordered_json kj;
        for (const auto& [p, dims] : rep.koszul_dims)
            kj["h" + std::to_string(p)] = graded_dims_json(dims);
        j["koszul"] = kj;
    }
    return j;
}

// Human text is rendered from the structured form, never the reverse.
inline std::string report_text(const SingularityReport& rep) {
    ordered_json j = report_json(rep);
    std::ostringstream os;
    os << "input:   " << rep.poly_text << "  [";
    for (size_t i = 0; i < rep.vars.size(); ++i) os << (i ? "," : "") << rep.vars[i];
    os << "]\n";
    if (rep.weights) {
        os << "weights: ";
        for (size_t i = 0; i < rep.weights->w.size(); ++i)
            os << (i ? "," : "") << rep.weights->w[i].str();
        os << "\n";
    }
    os << "mu = " << report_detail::count_str(rep.mu)
       << "  tau = " << report_detail::count_str(rep.tau);
    if (rep.alpha)
        os << "  alpha_tilde = " << rep.alpha->alpha_tilde.str()
           << "  min integral = " << rep.alpha->alpha_min_int.str()
           << "  max tjurina = " << rep.alpha->alpha_max_tj.str();
    if (rep.smooth) os << "  alpha_tilde = inf";
    os << "\n";
    os << "max du bois / log canonical level: " << rep.level.str() << "\n";
    if (!rep.spectrum.empty()) {
        os << "spectrum (" << rep.spectrum_model << "): " << rep.spectrum.str() << "\n";
        os << "tjurina subspectrum: " << rep.subspectrum.str() << "\n";
    }
    for (const auto& c : rep.checks)
        os << "  [" << to_string(c.status) << "] " << c.name << ": " << c.witness << "\n";
    if (!rep.koszul_dims.empty()) {
        for (const auto& [p, dims] : rep.koszul_dims) {
            os << "koszul h" << p << (dims.truncated ? " (truncated)" : "") << ":";
            for (const auto& [d, v] : dims.entries)
                if (v) os << " " << d.str() << "->" << v;
            os << (dims.all_zero() ? " all zero on window" : "") << "\n";
        }
    }
    return os.str();
}

}  // namespace hsinv
