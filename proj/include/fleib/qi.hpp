#ifndef FLEIB_QI_HPP
#define FLEIB_QI_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace fleib {

// Gaussian rational: a/b + (c/d)*i with arbitrary-precision components.
// Values are immutable in spirit: every operation returns a fresh,
// canonicalized scalar (denominators positive, fractions in lowest terms).
class QiScalar {
public:
    QiScalar() : re_(0), im_(0) {}
    QiScalar(long v) : re_(v), im_(0) {} // NOLINT: implicit by design
    explicit QiScalar(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    QiScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static QiScalar i() { return QiScalar(mpq_class(0), mpq_class(1)); }
    // num/den as integers; den must be nonzero.
    static QiScalar rational(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

    QiScalar operator-() const { return QiScalar(-re_, -im_); }
    QiScalar operator+(const QiScalar& o) const { return QiScalar(re_ + o.re_, im_ + o.im_); }
    QiScalar operator-(const QiScalar& o) const { return QiScalar(re_ - o.re_, im_ - o.im_); }
    QiScalar operator*(const QiScalar& o) const {
        return QiScalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    QiScalar operator/(const QiScalar& o) const { return *this * o.inverse(); }

    QiScalar& operator+=(const QiScalar& o) { return *this = *this + o; }
    QiScalar& operator-=(const QiScalar& o) { return *this = *this - o; }
    QiScalar& operator*=(const QiScalar& o) { return *this = *this * o; }
    QiScalar& operator/=(const QiScalar& o) { return *this = *this / o; }

    bool operator==(const QiScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const QiScalar& o) const { return !(*this == o); }
    // Total order for use as a map key (lexicographic on re, im).
    bool operator<(const QiScalar& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return cmp(im_, o.im_) < 0;
    }

    // Throws ArithmeticError on zero.
    QiScalar inverse() const;
    QiScalar conj() const { return QiScalar(re_, -im_); }
    // |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    QiScalar pow(long e) const;

    // Square root within Q(i), if one exists.
    std::optional<QiScalar> sqrt_in_field() const;

    // Text format: "a/b" or "a/b+c/d*i", denominator omitted when 1.
    // Examples: "-2", "1/3", "0+1*i", "1/2-3/4*i".
    std::string str() const;
    static QiScalar parse(const std::string& text);

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const QiScalar& v);

} // namespace fleib

#endif
