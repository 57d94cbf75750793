/// Finite multisets of rationals with positive multiplicities. Carries
/// singularity spectra, Tjurina subspectra, and root multisets.
#pragma once

#include <map>
#include <sstream>
#include <string>

#include "rational.hpp"

namespace hsinv {

class SpectrumPoly {
public:
    using Map = std::map<Rat, unsigned long>;

    SpectrumPoly() = default;

    static SpectrumPoly singleton(const Rat& a, unsigned long mult = 1) {
        SpectrumPoly s;
        s.add(a, mult);
        return s;
    }

    void add(const Rat& a, unsigned long mult = 1) {
        if (mult == 0) return;
        entries_[a] += mult;
    }

    const Map& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    unsigned long total() const {
        unsigned long t = 0;
        for (const auto& [a, m] : entries_) t += m;
        return t;
    }

    unsigned long multiplicity(const Rat& a) const {
        auto it = entries_.find(a);
        return it == entries_.end() ? 0ul : it->second;
    }

    const Rat& min() const {
        if (entries_.empty()) throw error("SpectrumPoly: min of empty multiset");
        return entries_.begin()->first;
    }
    const Rat& max() const {
        if (entries_.empty()) throw error("SpectrumPoly: max of empty multiset");
        return entries_.rbegin()->first;
    }

    // Smallest integer member, +inf when none exists.
    ExtRat min_integral() const {
        for (const auto& [a, m] : entries_)
            if (a.is_integer()) return ExtRat(a);
        return ExtRat::infinity();
    }

    // Multiset of pairwise sums with product multiplicities
    // (Thom-Sebastiani rule for joins in disjoint variables).
    friend SpectrumPoly operator*(const SpectrumPoly& a, const SpectrumPoly& b) {
        SpectrumPoly r;
        for (const auto& [x, mx] : a.entries_)
            for (const auto& [y, my] : b.entries_) r.add(x + y, mx * my);
        return r;
    }

    // Invariance under a -> center - a.
    bool symmetric_about(const Rat& center) const {
        for (const auto& [a, m] : entries_)
            if (multiplicity(center - a) != m) return false;
        return true;
    }

    // Number of members in the half-open interval (a, a+1].
    unsigned long count_in_unit_interval(const Rat& a) const {
        unsigned long c = 0;
        for (const auto& [x, m] : entries_)
            if (a < x && x <= a + Rat(1)) c += m;
        return c;
    }

    friend bool operator==(const SpectrumPoly& a, const SpectrumPoly& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const SpectrumPoly& a, const SpectrumPoly& b) { return !(a == b); }

    // Sorted "value,multiplicity" pairs, exact fraction syntax.
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [a, m] : entries_) {
            if (!first) os << " ";
            os << a.str() << "," << m;
            first = false;
        }
        return os.str();
    }

    static SpectrumPoly parse(const std::string& text) {
        SpectrumPoly s;
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw error("SpectrumPoly: bad entry '" + tok + "'");
            Rat a = Rat::parse(tok.substr(0, comma));
            unsigned long m = std::stoul(tok.substr(comma + 1));
            s.add(a, m);
        }
        return s;
    }

private:
    Map entries_;
};

}  // namespace hsinv
