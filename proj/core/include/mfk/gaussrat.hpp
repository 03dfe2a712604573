#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "mfk/error.hpp"

namespace mfk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// An exact element of Q(i).  Both parts are arbitrary-precision rationals
/// kept normalized (lowest terms, positive denominator) by the backend.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(int n) : re_(n) {}            // NOLINT: implicit on purpose
    GaussRat(long long n) : re_(n) {}      // NOLINT
    explicit GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }
    static GaussRat ratio(long long num, long long den);

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return im_.is_zero() && re_ == 1; }
    bool is_real() const { return im_.is_zero(); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    /// Multiplicative inverse; throws on zero.
    GaussRat inverse() const;

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    /// Canonical text: `p`, `p/q`, or `(p/q+r/s*i)` with unit denominators
    /// omitted and the imaginary sign folded into the separator.
    std::string str() const;

    /// Parses the canonical text form (also accepts a bare `i`-free rational
    /// or the parenthesized complex form with either sign).
    static GaussRat parse(std::string_view s);

private:
    Rat re_{0};
    Rat im_{0};
};

std::string rat_str(const Rat& r);

}  // namespace mfk
