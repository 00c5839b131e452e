#include "fleib/qi.hpp"

#include <cctype>
#include <ostream>

#include "fleib/error.hpp"

namespace fleib {

QiScalar QiScalar::rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return QiScalar(q);
}

QiScalar QiScalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    mpq_class n = norm();
    return QiScalar(re_ / n, -im_ / n);
}

QiScalar QiScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QiScalar acc = 1;
    QiScalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return mpq_class(num) / mpq_class(den);
}

} // namespace

std::optional<QiScalar> QiScalar::sqrt_in_field() const {
    if (is_zero()) return QiScalar(0);
    if (im_ == 0) {
        if (re_ > 0) {
            auto r = sqrt_rational(re_);
            if (!r) return std::nullopt;
            return QiScalar(*r);
        }
        auto r = sqrt_rational(mpq_class(-re_));
        if (!r) return std::nullopt;
        return QiScalar(mpq_class(0), *r);
    }
    // (c+di)^2 = a+bi requires |a+bi| rational, then c^2 = (a+|z|)/2.
    auto r = sqrt_rational(norm());
    if (!r) return std::nullopt;
    auto c = sqrt_rational((re_ + *r) / 2);
    if (!c || *c == 0) return std::nullopt;
    mpq_class d = im_ / (2 * (*c));
    return QiScalar(*c, d);
}

namespace {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Parses [sign] digits [/ digits] starting at pos; advances pos.
mpq_class parse_rat(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_begin) throw ParseError("expected digits in scalar: '" + s + "'");
    std::string num = s.substr(start, pos - start);
    if (!num.empty() && num[0] == '+') num.erase(0, 1); // mpq_set_str rejects '+'
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_begin) throw ParseError("expected denominator digits in scalar: '" + s + "'");
        den = s.substr(den_begin, pos - den_begin);
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw ParseError("bad rational in scalar: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in scalar: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

std::string QiScalar::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string out = rat_str(re_);
    if (im_ > 0) {
        out += "+" + rat_str(im_);
    } else {
        out += rat_str(im_); // leading '-' comes from the numerator
    }
    out += "*i";
    return out;
}

QiScalar QiScalar::parse(const std::string& text) {
    size_t pos = 0;
    mpq_class re = parse_rat(text, pos);
    if (pos == text.size()) return QiScalar(re);
    if (text[pos] != '+' && text[pos] != '-')
        throw ParseError("unexpected character in scalar: '" + text + "'");
    mpq_class im = parse_rat(text, pos);
    if (text.compare(pos, 2, "*i") != 0 || pos + 2 != text.size())
        throw ParseError("expected trailing '*i' in scalar: '" + text + "'");
    return QiScalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const QiScalar& v) { return os << v.str(); }

} // namespace fleib
