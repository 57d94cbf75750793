/// Exact rational scalar type used throughout the library.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hsinv {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational, always stored canonically:
// gcd(|num|, den) = 1 and den >= 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "n" or "n/d" with optional sign, exact decimal rejected.
    static Rat parse(const std::string& s) {
        if (s.empty()) throw error("Rat: empty literal");
        if (s.find('.') != std::string::npos)
            throw error("Rat: decimal literals are not accepted, use p/q: '" + s + "'");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw error("Rat: bad literal '" + s + "'");
        if (q.get_den() == 0) throw error("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(std::move(q));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Largest integer <= *this, as a machine integer.
    long floor_long() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        if (!q.fits_slong_p()) throw error("Rat: floor out of range");
        return q.get_si();
    }

    long to_long() const {
        if (!is_integer()) throw error("Rat: not an integer: " + str());
        if (!v_.get_num().fits_slong_p()) throw error("Rat: out of long range");
        return v_.get_num().get_si();
    }

    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

// A rational extended with +infinity; covers smooth inputs and
// "no integral spectral number" situations.
class ExtRat {
public:
    ExtRat() : inf_(true) {}
    ExtRat(Rat v) : inf_(false), v_(std::move(v)) {}
    static ExtRat infinity() { return ExtRat(); }

    bool is_infinite() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw error("ExtRat: value of +inf");
        return v_;
    }

    std::string str() const { return inf_ ? "inf" : v_.str(); }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a == b || a < b; }
    friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

private:
    bool inf_;
    Rat v_;
};

}  // namespace hsinv
