/// Sparse multivariate polynomials over Q with a fixed variable ring.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <vector>

#include "rational.hpp"

namespace hsinv {

// Exponent vector; its length is fixed by the ambient ring.
using Monomial = std::vector<uint32_t>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (uint32_t e : m) d += static_cast<int>(e);
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// Ring of polynomials in a fixed ordered list of variables.
// Polynomials from rings with different variable lists never mix.
struct Ring {
    std::vector<std::string> vars;

    explicit Ring(std::vector<std::string> v) : vars(std::move(v)) {
        if (vars.empty()) throw error("Ring: needs at least one variable");
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j]) throw error("Ring: duplicate variable " + vars[i]);
    }

    size_t size() const { return vars.size(); }

    int index_of(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.vars == b.vars; }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

inline RingPtr make_ring(std::initializer_list<const char*> vars) {
    std::vector<std::string> v(vars.begin(), vars.end());
    return make_ring(std::move(v));
}

class MPoly {
public:
    using TermMap = std::map<Monomial, Rat>;  // lex on exponent vectors

    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }

    static MPoly constant(RingPtr ring, const Rat& c) {
        MPoly p(std::move(ring));
        if (!c.is_zero()) p.terms_[Monomial(p.ring_->size(), 0)] = c;
        return p;
    }

    static MPoly variable(RingPtr ring, size_t i) {
        MPoly p(std::move(ring));
        Monomial m(p.ring_->size(), 0);
        m.at(i) = 1;
        p.terms_[m] = Rat(1);
        return p;
    }

    static MPoly term(RingPtr ring, Monomial m, const Rat& c) {
        MPoly p(std::move(ring));
        if (m.size() != p.ring_->size()) throw error("MPoly: exponent length mismatch");
        if (!c.is_zero()) p.terms_[std::move(m)] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rat constant_term() const {
        Monomial one(ring_->size(), 0);
        auto it = terms_.find(one);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int degree() const {  // total degree, -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }

    MPoly operator-() const {
        MPoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_ring(b);
        MPoly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

    MPoly scaled(const Rat& c) const {
        MPoly r(ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    MPoly mono_shifted(const Monomial& m) const {  // multiply by x^m
        MPoly r(ring_);
        for (const auto& [k, c] : terms_) r.terms_[mono_mul(k, m)] = c;
        return r;
    }

    MPoly pow(unsigned e) const {
        MPoly r = constant(ring_, Rat(1));
        MPoly base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Canonical display: terms sorted by total degree descending, then
    // lexicographically; round-trips through the parser.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
            int da = total_degree(a->first), db = total_degree(b->first);
            if (da != db) return da > db;
            return a->first > b->first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* t : ts) {
            const auto& [m, c] = *t;
            Rat a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool unit_coeff = (a == Rat(1)) && total_degree(m) > 0;
            if (!unit_coeff) os << a.str();
            bool printed = !unit_coeff;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (printed) os << "*";
                os << ring_->vars[i];
                if (m[i] > 1) os << "^" << m[i];
                printed = true;
            }
        }
        return os.str();
    }

    void check_ring(const MPoly& o) const {
        if (!(*ring_ == *o.ring_)) throw error("MPoly: mixed rings");
    }

private:
    RingPtr ring_;
    TermMap terms_;
};

// Partial derivative with respect to variable i.
inline MPoly partial(const MPoly& f, size_t i) {
    MPoly r(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        r.add_term(d, c * Rat(static_cast<long>(m[i])));
    }
    return r;
}

// Gradient [df/dx_1, ..., df/dx_n].
inline std::vector<MPoly> partials(const MPoly& f) {
    std::vector<MPoly> out;
    out.reserve(f.ring()->size());
    for (size_t i = 0; i < f.ring()->size(); ++i) out.push_back(partial(f, i));
    return out;
}

}  // namespace hsinv
