#include "mfk/gaussrat.hpp"

#include <cctype>

namespace mfk {

GaussRat GaussRat::ratio(long long num, long long den) {
    if (den == 0) throw Error("GaussRat::ratio: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return GaussRat(Rat(Int(num), Int(den)));
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw Error("GaussRat: division by zero");
    Rat norm = re_ * re_ + im_ * im_;
    return GaussRat(re_ / norm, -im_ / norm);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw Error("GaussRat: division by zero");
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rat_str(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string GaussRat::str() const {
    if (im_.is_zero()) return rat_str(re_);
    std::string s = "(";
    s += rat_str(re_);
    if (im_ < 0) {
        s += "-";
        s += rat_str(Rat(-im_));
    } else {
        s += "+";
        s += rat_str(im_);
    }
    s += "*i)";
    return s;
}

namespace {

// Parses [-]digits[/digits] starting at pos; advances pos.
Rat parse_rat(std::string_view s, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) throw ParseError("expected number at '" + std::string(s.substr(start)) + "'");
    Int num(std::string(s.substr(d0, pos - d0)));
    Int den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t d1 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == d1) throw ParseError("expected denominator in rational");
        den = Int(std::string(s.substr(d1, pos - d1)));
        if (den.is_zero()) throw ParseError("zero denominator");
    }
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

}  // namespace

GaussRat GaussRat::parse(std::string_view s) {
    size_t pos = 0;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) throw ParseError("empty coefficient");
    if (s[pos] == '(') {
        ++pos;
        Rat re = parse_rat(s, pos);
        if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
            throw ParseError("expected sign in complex coefficient");
        bool neg = s[pos] == '-';
        ++pos;
        Rat im = parse_rat(s, pos);
        if (neg) im = -im;
        if (pos + 2 >= s.size() || s[pos] != '*' || s[pos + 1] != 'i' || s[pos + 2] != ')')
            throw ParseError("expected '*i)' in complex coefficient");
        pos += 3;
        return GaussRat(re, im);
    }
    Rat re = parse_rat(s, pos);
    return GaussRat(re);
}

}  // namespace mfk
