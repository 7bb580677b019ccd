#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace hodgemc {

// Element of Q(i): re + im*sqrt(-1), both arbitrary-precision rationals.
// All arithmetic is exact; conjugation negates the imaginary part.
struct Scalar {
    mpq_class re;
    mpq_class im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}
    Scalar(const mpq_class& r) : re(r), im(0) {}
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar of(long num, long den);

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        mpq_class r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inv(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;
};

// Parses "p/q" (canonicalized, denominator > 0). Throws input_error on malformed
// or zero-denominator input.
mpq_class parse_rational(const std::string& s);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hodgemc
