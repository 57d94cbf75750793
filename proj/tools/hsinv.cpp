// Command-line front end: exact invariants of isolated hypersurface
// singularities. Exit codes: 0 success, 1 check failure or corpus
// mismatch, 2 usage/parse error.
#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hsinv/hsinv.hpp"

namespace {

using namespace hsinv;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Input {
    std::string poly;
    std::string vars_csv;
    std::string weights_csv;
    bool semi_qh = false;
    bool q_homology_manifold = false;
    std::string format = "text";
};

void add_input_options(CLI::App* cmd, Input& in, bool with_flags = true) {
    cmd->add_option("poly", in.poly, "polynomial expression")->required();
    cmd->add_option("--vars", in.vars_csv,
                    "comma-separated variable names (default: order of first appearance)");
    cmd->add_option("--weights", in.weights_csv,
                    "comma-separated exact fractions, e.g. 1/6,1/5");
    if (with_flags) {
        cmd->add_flag("--semi-qh", in.semi_qh,
                      "declare f semi-weighted-homogeneous for the given weights");
        cmd->add_flag("--q-homology-manifold", in.q_homology_manifold,
                      "declare X a rational homology manifold (forces the minimal integral "
                      "spectral number to +inf)");
    }
    cmd->add_option("--format", in.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

std::vector<std::string> resolve_vars(const Input& in) {
    if (!in.vars_csv.empty()) return split_csv(in.vars_csv);
    auto vars = scan_variables(in.poly);
    if (vars.empty()) throw error("no variables found; pass --vars");
    return vars;
}

std::optional<WeightSystem> resolve_weights(const Input& in, size_t nvars) {
    if (in.weights_csv.empty()) return std::nullopt;
    std::vector<Rat> w;
    for (const auto& s : split_csv(in.weights_csv)) w.push_back(Rat::parse(s));
    if (w.size() != nvars)
        throw error("got " + std::to_string(w.size()) + " weights for " +
                    std::to_string(nvars) + " variables");
    return WeightSystem(std::move(w));
}

void print_graded(std::ostream& os, const std::string& label, const GradedDims& dims) {
    os << label << (dims.truncated ? " (truncated)" : "") << "\n";
    for (const auto& [d, v] : dims.entries) os << "  " << d.str() << "  " << v << "\n";
    os << "  total " << dims.total() << "\n";
}

int run_analyze(const Input& in) {
    auto vars = resolve_vars(in);
    auto weights = resolve_weights(in, vars.size());
    SingularityReport rep =
        analyze(in.poly, vars, weights, in.semi_qh, in.q_homology_manifold);
    if (in.format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << report_text(rep);
    return rep.any_check_failed() ? 1 : 0;
}

int run_spectrum(const Input& in, bool shifted) {
    auto vars = resolve_vars(in);
    auto ring = make_ring(vars);
    MPoly f = parse_poly(in.poly, ring);
    auto weights = resolve_weights(in, vars.size());
    if (!weights) {
        weights = infer_weights(f);
        if (!weights) throw error("no unique positive weight system; pass --weights");
    }
    SpectrumPoly sp = spectrum_qh(f, *weights, in.semi_qh);
    SpectrumPoly sptj = tjurina_subspectrum(f, *weights, in.semi_qh);
    auto alpha = alpha_invariants(sp, sptj);
    if (shifted) {
        // the (-1, n-1) normalization, shifted down by one
        SpectrumPoly s2, t2;
        for (const auto& [a, m] : sp.entries()) s2.add(a - Rat(1), m);
        for (const auto& [a, m] : sptj.entries()) t2.add(a - Rat(1), m);
        sp = s2;
        sptj = t2;
    }
    if (in.format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["spectrum"] = sp.str();
        j["tjurina_subspectrum"] = sptj.str();
        j["alpha_tilde"] = alpha.alpha_tilde.str();
        j["alpha_min_int"] = alpha.alpha_min_int.str();
        j["alpha_max_tj"] = alpha.alpha_max_tj.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "spectrum:            " << sp.str() << "\n";
        std::cout << "tjurina subspectrum: " << sptj.str() << "\n";
        std::cout << "alpha_tilde = " << alpha.alpha_tilde.str()
                  << "  min integral = " << alpha.alpha_min_int.str()
                  << "  max tjurina = " << alpha.alpha_max_tj.str() << "\n";
    }
    return 0;
}

int run_koszul(const Input& in, int p, const std::string& max_degree) {
    auto vars = resolve_vars(in);
    auto ring = make_ring(vars);
    MPoly f = parse_poly(in.poly, ring);
    auto weights = resolve_weights(in, vars.size());
    WeightSystem w = weights ? *weights : WeightSystem::uniform(vars.size());
    Rat hi = max_degree.empty() ? Rat(static_cast<long>(vars.size())) : Rat::parse(max_degree);

    GradedDims dims;
    if (is_quasi_homogeneous(f, w)) {
        dims = koszul_cohomology(f, w, p, Rat(0), hi);
    } else {
        int cap = std::clamp(static_cast<int>(hi.floor_long()), 2, 16);
        dims = koszul_cohomology_truncated(f, p, cap);
    }
    if (in.format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["p"] = p;
        j["dims"] = graded_dims_json(dims);
        std::cout << j.dump(2) << "\n";
    } else {
        print_graded(std::cout, "koszul cohomology h" + std::to_string(p), dims);
    }
    return 0;
}

int run_dubois(const Input& in, int p, const std::string& max_degree, bool cross_check) {
    auto vars = resolve_vars(in);
    auto ring = make_ring(vars);
    MPoly f = parse_poly(in.poly, ring);
    auto weights = resolve_weights(in, vars.size());
    if (!weights) {
        weights = infer_weights(f);
        if (!weights) throw error("no unique positive weight system; pass --weights");
    }
    WeightSystem w = weights->normalized();
    Rat hi;
    if (max_degree.empty()) {
        Rat alpha = w.weight_sum();
        hi = Rat(static_cast<long>(vars.size())) - alpha + Rat(1);
    } else {
        hi = Rat::parse(max_degree);
    }

    auto assembled = du_bois_graded_dims(f, w, p, hi);
    bool mismatch = false;
    std::map<int, GradedDims> cone;
    if (cross_check) {
        cone = cone_graded_dims(f, w, p, hi);
        for (int j = 0; j <= p; ++j)
            if (!(assembled.at(j) == cone.at(j))) mismatch = true;
    }

    if (in.format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["p"] = p;
        for (const auto& [jj, dims] : assembled)
            j["h" + std::to_string(jj)] = graded_dims_json(dims);
        if (cross_check) j["cone_agrees"] = !mismatch;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [jj, dims] : assembled)
            print_graded(std::cout, "du bois h" + std::to_string(jj), dims);
        if (cross_check)
            std::cout << (mismatch ? "cone cross-check: MISMATCH\n"
                                   : "cone cross-check: agree\n");
    }
    return mismatch ? 1 : 0;
}

int run_classify(const Input& in, int p_opt) {
    auto vars = resolve_vars(in);
    auto ring = make_ring(vars);
    MPoly f = parse_poly(in.poly, ring);
    auto weights = resolve_weights(in, vars.size());
    SingularityReport rep =
        analyze(in.poly, vars, weights, in.semi_qh, in.q_homology_manifold);

    ordered_json j;
    j["schema_version"] = 1;
    j["max_du_bois_level"] = rep.level.str();
    std::vector<std::pair<int, std::vector<std::string>>> ideals;
    if (!rep.smooth && rep.weights && rep.spectrum_model == "exact") {
        int top = p_opt >= 0 ? p_opt
                             : static_cast<int>(std::max<long>(rep.level.infinite
                                                                   ? 0
                                                                   : rep.level.value + 1,
                                                               1));
        for (int p = p_opt >= 0 ? p_opt : 0; p <= top; ++p) {
            std::vector<std::string> gens;
            for (const auto& g : hodge_ideal_generators_qh(f, *rep.weights, p))
                gens.push_back(g.str());
            ideals.emplace_back(p, std::move(gens));
        }
    }
    if (in.format == "json") {
        ordered_json hi = ordered_json::array();
        for (const auto& [p, gens] : ideals)
            hi.push_back(ordered_json{{"p", p}, {"generators", gens}});
        j["hodge_ideals"] = hi;
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks)
            checks.push_back(ordered_json{{"name", c.name},
                                          {"status", to_string(c.status)},
                                          {"witness", c.witness}});
        j["checks"] = checks;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "max du bois / log canonical level: " << rep.level.str() << "\n";
        for (const auto& [p, gens] : ideals) {
            std::cout << "hodge ideal p=" << p << ": ";
            bool unit = gens.size() == 1 && gens[0] == "1";
            if (unit) {
                std::cout << "(1)\n";
            } else {
                for (size_t i = 0; i < gens.size(); ++i)
                    std::cout << (i ? ", " : "(") << gens[i];
                std::cout << ")\n";
            }
        }
        for (const auto& c : rep.checks)
            std::cout << "  [" << to_string(c.status) << "] " << c.name << ": " << c.witness
                      << "\n";
    }
    return rep.any_check_failed() ? 1 : 0;
}

int run_corpus_verify(const std::string& path, const std::string& format) {
    CorpusOutcome out = verify_corpus_file(path);
    if (format == "json") {
        ordered_json j;
        j["schema_version"] = 1;
        j["fixtures_checked"] = out.fixtures_checked;
        j["values_checked"] = out.values_checked;
        j["ok"] = out.ok;
        j["diffs"] = out.diffs;
        std::cout << j.dump(2) << "\n";
    } else {
        if (out.empty) std::cout << "warning: empty corpus\n";
        for (const auto& d : out.diffs) std::cout << "mismatch: " << d << "\n";
        std::cout << (out.ok ? "ok" : "FAILED") << ": " << out.fixtures_checked
                  << " fixtures, " << out.values_checked << " values\n";
    }
    return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of isolated hypersurface singularities"};
    app.require_subcommand(1);

    Input in_analyze, in_spectrum, in_koszul, in_dubois, in_classify;
    int koszul_p = 0, dubois_p = 0, classify_p = -1;
    std::string koszul_max, dubois_max;
    bool dubois_cross = false;
    std::string corpus_path, corpus_format = "text";

    auto* c_analyze = app.add_subcommand("analyze", "full invariant report");
    add_input_options(c_analyze, in_analyze);

    auto* c_spectrum = app.add_subcommand("spectrum", "spectrum and Tjurina subspectrum");
    add_input_options(c_spectrum, in_spectrum);
    bool spectrum_shifted = false;
    c_spectrum->add_flag("--shifted", spectrum_shifted,
                         "emit the shifted (-1, n-1) normalization instead of (0, n)");

    auto* c_koszul = app.add_subcommand("koszul", "graded Koszul cohomology dimensions");
    add_input_options(c_koszul, in_koszul, false);
    c_koszul->add_option("--p", koszul_p, "form index")->required();
    c_koszul->add_option("--max-degree", koszul_max, "upper end of the degree window");

    auto* c_dubois = app.add_subcommand("dubois", "graded Du Bois cohomology dimensions");
    add_input_options(c_dubois, in_dubois, false);
    c_dubois->add_option("--p", dubois_p, "level (computes H^0..H^p)")->required();
    c_dubois->add_option("--max-degree", dubois_max, "upper end of the degree window");
    c_dubois->add_flag("--cross-check", dubois_cross,
                       "recompute through the mapping cone and compare");

    auto* c_classify = app.add_subcommand("classify", "du bois level and hodge ideals");
    add_input_options(c_classify, in_classify);
    c_classify->add_option("--p", classify_p, "single hodge-ideal level to emit");

    auto* c_corpus = app.add_subcommand("corpus-verify", "recompute a fixture corpus");
    c_corpus->add_option("path", corpus_path, "corpus JSON file")->required();
    c_corpus->add_option("--format", corpus_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_analyze->parsed()) return run_analyze(in_analyze);
        if (c_spectrum->parsed()) return run_spectrum(in_spectrum, spectrum_shifted);
        if (c_koszul->parsed()) return run_koszul(in_koszul, koszul_p, koszul_max);
        if (c_dubois->parsed()) return run_dubois(in_dubois, dubois_p, dubois_max, dubois_cross);
        if (c_classify->parsed()) return run_classify(in_classify, classify_p);
        if (c_corpus->parsed()) return run_corpus_verify(corpus_path, corpus_format);
    } catch (const hsinv::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
