#ifndef FLEIB_ROOT_EXT_HPP
#define FLEIB_ROOT_EXT_HPP

#include <vector>

#include "fleib/error.hpp"
#include "fleib/qi.hpp"

namespace fleib {

// Element of Q(i)[w] / (w^k - c), c != 0. Degree 1 degenerates to Q(i)
// itself, which lets concrete and root-extended witnesses share one code
// path. Arithmetic folds w^k back to c, so identities verified here hold
// for every complex root of w^k = c.
class RootExt {
public:
    RootExt() : k_(1), c_(1), coef_(1, QiScalar(0)) {}
    RootExt(int k, QiScalar c, std::vector<QiScalar> coef)
        : k_(k), c_(std::move(c)), coef_(std::move(coef)) {
        if (k_ < 1) throw ArithmeticError("root extension degree must be >= 1");
        if (c_.is_zero()) throw ArithmeticError("root of zero is not invertible");
        coef_.resize(k_, QiScalar(0));
    }

    static RootExt scalar(int k, const QiScalar& c, const QiScalar& v) {
        std::vector<QiScalar> coef(k, QiScalar(0));
        coef[0] = v;
        return RootExt(k, c, std::move(coef));
    }
    // The adjoined root w itself.
    static RootExt root(int k, const QiScalar& c) {
        if (k == 1) return scalar(1, c, c); // w = c when the extension is trivial
        std::vector<QiScalar> coef(k, QiScalar(0));
        coef[1] = 1;
        return RootExt(k, c, std::move(coef));
    }

    int degree() const { return k_; }
    const QiScalar& root_of() const { return c_; }
    const std::vector<QiScalar>& coefficients() const { return coef_; }

    bool is_zero() const {
        for (const auto& q : coef_)
            if (!q.is_zero()) return false;
        return true;
    }
    bool is_scalar() const {
        for (size_t j = 1; j < coef_.size(); ++j)
            if (!coef_[j].is_zero()) return false;
        return true;
    }
    const QiScalar& scalar_value() const { return coef_[0]; }

    RootExt operator+(const RootExt& o) const;
    RootExt operator-(const RootExt& o) const;
    RootExt operator*(const RootExt& o) const;
    RootExt operator-() const;
    RootExt scaled(const QiScalar& s) const;
    // Multiplicative inverse via the k x k multiplication matrix; throws
    // ArithmeticError for zero divisors.
    RootExt inverse() const;
    RootExt pow(long e) const;

    bool operator==(const RootExt& o) const {
        return k_ == o.k_ && c_ == o.c_ && coef_ == o.coef_;
    }
    bool operator!=(const RootExt& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check_context(const RootExt& o) const {
        if (k_ != o.k_ || c_ != o.c_)
            throw DimensionMismatch("mixing incompatible root extensions");
    }

    int k_;
    QiScalar c_;
    std::vector<QiScalar> coef_; // coef_[j] * w^j
};

} // namespace fleib

#endif
