/// Optional on-disk memo for computed bases, keyed by a content hash of
/// (ring, order, sorted generators). Purely an accelerator: a stale or
/// mismatching entry is ignored and recomputed. Enabled by setting the
/// HSINV_CACHE_DIR environment variable.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "order.hpp"
#include "parse.hpp"
#include "poly.hpp"

namespace hsinv {

inline const char* cache_dir_env = "HSINV_CACHE_DIR";

namespace cache_detail {

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string basis_key(const std::vector<MPoly>& gens, const MonomialOrder& ord,
                             const RingPtr& ring) {
    std::ostringstream os;
    os << (ord.is_global() ? "global-wdegrevlex" : "local-wdegrevlex");
    os << "|target=" << ord.weights.target.str() << "|w=";
    for (const auto& wi : ord.weights.w) os << wi.str() << ",";
    os << "|ring=";
    for (const auto& v : ring->vars) os << v << ",";
    std::vector<std::string> gs;
    gs.reserve(gens.size());
    for (const auto& g : gens) gs.push_back(g.str());
    std::sort(gs.begin(), gs.end());
    os << "|gens=";
    for (const auto& g : gs) os << g << ";";
    return os.str();
}

inline std::optional<std::filesystem::path> cache_path_for(const std::string& key) {
    const char* dir = std::getenv(cache_dir_env);
    if (!dir || !*dir) return std::nullopt;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    return std::filesystem::path(dir) / ("basis-" + std::to_string(fnv1a(key)) + ".txt");
}

inline std::optional<std::vector<MPoly>> load_basis(const std::string& key,
                                                    const RingPtr& ring) {
    auto path = cache_path_for(key);
    if (!path || !std::filesystem::exists(*path)) return std::nullopt;
    std::ifstream in(*path);
    std::string version, stored_key;
    if (!std::getline(in, version) || version != "hsinv-basis-cache-v1") return std::nullopt;
    if (!std::getline(in, stored_key) || stored_key != key) return std::nullopt;
    size_t count = 0;
    in >> count;
    in.ignore();
    std::vector<MPoly> basis;
    basis.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        std::string line;
        if (!std::getline(in, line)) return std::nullopt;
        try {
            basis.push_back(parse_poly(line, ring));
        } catch (const error&) {
            return std::nullopt;
        }
    }
    return basis;
}

inline void store_basis(const std::string& key, const std::vector<MPoly>& basis) {
    auto path = cache_path_for(key);
    if (!path) return;
    std::ofstream out(*path, std::ios::trunc);
    if (!out) return;
    out << "hsinv-basis-cache-v1\n" << key << "\n" << basis.size() << "\n";
    for (const auto& g : basis) out << g.str() << "\n";
}

}  // namespace cache_detail

}  // namespace hsinv
