/// Bundled fixture corpus: the polynomials the test-suite and the CLI
/// corpus verifier run against, with their frozen expected values.
///
/// Provenance vocabulary per expected value:
///   "literature" - value stated in published singularity tables
///   "direct"     - immediate arithmetic from the definition
///   "computed"   - derived by this project's independent oracle
#pragma once

#include <map>
#include <string>
#include <vector>

#include "spectrum_poly.hpp"

namespace hsinv {

struct FixtureRecord {
    std::string name;
    std::string poly;
    std::vector<std::string> vars;
    std::vector<std::string> weights;  // exact fraction strings; empty = undeclared
    bool semi_qh = false;
    bool q_homology_manifold = false;
    // expected values; absent keys are not checked
    std::map<std::string, std::string> expected;
    std::map<std::string, std::string> provenance;
};

// Spectrum of a Fermat-type pair x^a + y^b: { j/a + k/b }.
inline SpectrumPoly grid_spectrum(long a, long b) {
    SpectrumPoly s;
    for (long j = 1; j < a; ++j)
        for (long k = 1; k < b; ++k) s.add(Rat(j, a) + Rat(k, b));
    return s;
}

inline const std::vector<FixtureRecord>& bundled_fixtures() {
    static const std::vector<FixtureRecord> fixtures = [] {
        std::vector<FixtureRecord> out;

        // A1 family: sum of n squares, 2 <= n <= 6
        for (int n = 2; n <= 6; ++n) {
            FixtureRecord f;
            f.name = "a1_" + std::to_string(n);
            std::string poly;
            for (int i = 1; i <= n; ++i) {
                if (i > 1) poly += "+";
                poly += "y" + std::to_string(i) + "^2";
                f.vars.push_back("y" + std::to_string(i));
                f.weights.push_back("1/2");
            }
            f.poly = poly;
            f.q_homology_manifold = (n % 2 == 1);
            f.expected["mu"] = "1";
            f.expected["tau"] = "1";
            f.expected["spectrum"] = SpectrumPoly::singleton(Rat(n, 2)).str();
            f.expected["tjurina_subspectrum"] = f.expected["spectrum"];
            f.expected["alpha_tilde"] = Rat(n, 2).str();
            f.expected["alpha_min_int"] = (n % 2 == 0) ? Rat(n, 2).str() : "inf";
            f.provenance = {{"mu", "direct"},
                            {"tau", "direct"},
                            {"spectrum", "literature"},
                            {"tjurina_subspectrum", "direct"},
                            {"alpha_tilde", "literature"},
                            {"alpha_min_int", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "fermat_x6y5";
            f.poly = "x^6+y^5";
            f.vars = {"x", "y"};
            f.weights = {"1/6", "1/5"};
            f.q_homology_manifold = true;  // irreducible plane branch
            f.expected["mu"] = "20";
            f.expected["tau"] = "20";
            f.expected["spectrum"] = grid_spectrum(6, 5).str();
            f.expected["tjurina_subspectrum"] = f.expected["spectrum"];
            f.expected["alpha_tilde"] = "11/30";
            f.expected["alpha_min_int"] = "inf";
            f.provenance = {{"mu", "direct"},
                            {"tau", "direct"},
                            {"spectrum", "literature"},
                            {"tjurina_subspectrum", "direct"},
                            {"alpha_tilde", "literature"},
                            {"alpha_min_int", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "sextic_x6y5x3y3";
            f.poly = "x^6+y^5+x^3*y^3";
            f.vars = {"x", "y"};
            f.weights = {"1/6", "1/5"};
            f.semi_qh = true;
            f.q_homology_manifold = true;  // mu-constant deformation of the Fermat branch
            f.expected["mu"] = "20";
            f.expected["tau"] = "18";
            f.expected["spectrum"] = grid_spectrum(6, 5).str();
            // the top two spectral numbers drop out of the Tjurina algebra
            SpectrumPoly sptj;
            SpectrumPoly full = grid_spectrum(6, 5);
            for (const auto& [a, m] : full.entries())
                if (a != Rat(49, 30) && a != Rat(22, 15)) sptj.add(a, m);
            f.expected["tjurina_subspectrum"] = sptj.str();
            f.expected["alpha_tilde"] = "11/30";
            f.expected["alpha_min_int"] = "inf";
            f.provenance = {{"mu", "literature"},
                            {"tau", "computed"},
                            {"spectrum", "literature"},
                            {"tjurina_subspectrum", "computed"},
                            {"alpha_tilde", "literature"},
                            {"alpha_min_int", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "cusp_z5w3";
            f.poly = "z^5+w^3";
            f.vars = {"z", "w"};
            f.weights = {"1/5", "1/3"};
            f.q_homology_manifold = true;
            f.expected["mu"] = "8";
            f.expected["tau"] = "8";
            f.expected["spectrum"] = grid_spectrum(5, 3).str();
            f.expected["tjurina_subspectrum"] = f.expected["spectrum"];
            f.expected["alpha_tilde"] = "8/15";
            f.expected["alpha_min_int"] = "inf";
            f.provenance = {{"mu", "direct"},
                            {"tau", "direct"},
                            {"spectrum", "literature"},
                            {"tjurina_subspectrum", "direct"},
                            {"alpha_tilde", "literature"},
                            {"alpha_min_int", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "node_2";
            f.poly = "y1*y2";
            f.vars = {"y1", "y2"};
            f.weights = {"1/2", "1/2"};
            f.expected["mu"] = "1";
            f.expected["tau"] = "1";
            f.expected["spectrum"] = "1,1";
            f.expected["tjurina_subspectrum"] = "1,1";
            f.expected["alpha_tilde"] = "1";
            f.expected["alpha_min_int"] = "1";
            f.provenance = {{"mu", "direct"},
                            {"tau", "direct"},
                            {"spectrum", "direct"},
                            {"tjurina_subspectrum", "direct"},
                            {"alpha_tilde", "direct"},
                            {"alpha_min_int", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "whitney_umbrella";
            f.poly = "x^2+y^2*z";
            f.vars = {"x", "y", "z"};
            f.weights = {"1/2", "1/4", "1/2"};
            f.expected["mu"] = "inf";  // the singular locus is the z-axis
            f.provenance = {{"mu", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "node_4";
            f.poly = "y1*y2";
            f.vars = {"y1", "y2", "y3", "y4"};
            f.expected["mu"] = "inf";  // one-dimensional critical locus
            f.provenance = {{"mu", "direct"}};
            out.push_back(std::move(f));
        }

        {
            FixtureRecord f;
            f.name = "smooth_line";
            f.poly = "x";
            f.vars = {"x", "y"};
            f.expected["mu"] = "0";
            f.provenance = {{"mu", "direct"}};
            out.push_back(std::move(f));
        }

        return out;
    }();
    return fixtures;
}

inline const FixtureRecord& fixture_by_name(const std::string& name) {
    for (const auto& f : bundled_fixtures())
        if (f.name == name) return f;
    throw error("unknown fixture '" + name + "'");
}

// Root multisets paired with spectra for the integral-shift check.
// Beta values are bundled data, never computed here.
struct BetaFixture {
    std::string name;
    SpectrumPoly alpha;
    SpectrumPoly beta;
    std::string join_partner;          // fixture to Thom-Sebastiani with
    std::string joined_alpha_min_int;  // expected extrema of the join
    std::string joined_beta_min_int;
};

inline const std::vector<BetaFixture>& beta_fixtures() {
    static const std::vector<BetaFixture> fixtures = [] {
        std::vector<BetaFixture> out;
        {
            BetaFixture b;
            b.name = "sextic_x6y5x3y3";
            b.alpha = grid_spectrum(6, 5);
            // beta: replace the top two spectral numbers by their integer
            // shifts downward
            SpectrumPoly beta;
            for (const auto& [a, m] : b.alpha.entries()) beta.add(a, m);
            SpectrumPoly drop;
            drop.add(Rat(5, 6) + Rat(4, 5));  // 49/30
            drop.add(Rat(4, 6) + Rat(4, 5));  // 22/15
            SpectrumPoly fixed;
            for (const auto& [a, m] : beta.entries()) {
                unsigned long keep = m - drop.multiplicity(a);
                if (keep) fixed.add(a, keep);
            }
            fixed.add(Rat(5, 6) + Rat(4, 5) - Rat(1));  // 19/30
            fixed.add(Rat(4, 6) + Rat(4, 5) - Rat(1));  // 7/15
            b.beta = fixed;
            b.join_partner = "cusp_z5w3";
            b.joined_alpha_min_int = "2";
            b.joined_beta_min_int = "1";
            out.push_back(std::move(b));
        }
        {
            BetaFixture b;
            b.name = "cusp_z5w3";
            b.alpha = grid_spectrum(5, 3);
            b.beta = b.alpha;  // weighted-homogeneous: the multisets agree
            out.push_back(std::move(b));
        }
        return out;
    }();
    return fixtures;
}

inline const BetaFixture& beta_fixture_by_name(const std::string& name) {
    for (const auto& f : beta_fixtures())
        if (f.name == name) return f;
    throw error("unknown beta fixture '" + name + "'");
}

}  // namespace hsinv
