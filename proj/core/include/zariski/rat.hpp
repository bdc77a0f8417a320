#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "zariski/errors.hpp"

namespace zariski {

using Int = mpz_class;

// Exact rational, kept in lowest terms with a positive denominator at all
// times. Denominators are the quantity this library measures, so canonical
// form is not optional.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw InvalidParameter("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Largest integer <= value.
    Int floor() const {
        Int r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    Rat operator-() const {
        Rat r;
        r.q_ = -q_;
        return r;
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw InvalidParameter("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Renders "p/q", or just "p" for integers; parse() accepts both forms.
    std::string str() const {
        std::string s = q_.get_num().get_str();
        if (q_.get_den() != 1) s += "/" + q_.get_den().get_str();
        return s;
    }

    static Rat parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

}  // namespace zariski
