#include "fleib/root_ext.hpp"

namespace fleib {

RootExt RootExt::operator+(const RootExt& o) const {
    check_context(o);
    RootExt out = *this;
    for (int j = 0; j < k_; ++j) out.coef_[j] += o.coef_[j];
    return out;
}

RootExt RootExt::operator-(const RootExt& o) const {
    check_context(o);
    RootExt out = *this;
    for (int j = 0; j < k_; ++j) out.coef_[j] -= o.coef_[j];
    return out;
}

RootExt RootExt::operator-() const {
    RootExt out = *this;
    for (auto& q : out.coef_) q = -q;
    return out;
}

RootExt RootExt::scaled(const QiScalar& s) const {
    RootExt out = *this;
    for (auto& q : out.coef_) q *= s;
    return out;
}

RootExt RootExt::operator*(const RootExt& o) const {
    check_context(o);
    std::vector<QiScalar> prod(2 * k_ - 1, QiScalar(0));
    for (int a = 0; a < k_; ++a) {
        if (coef_[a].is_zero()) continue;
        for (int b = 0; b < k_; ++b) {
            if (o.coef_[b].is_zero()) continue;
            prod[a + b] += coef_[a] * o.coef_[b];
        }
    }
    RootExt out = scalar(k_, c_, 0);
    for (int j = 0; j < static_cast<int>(prod.size()); ++j) {
        if (j < k_)
            out.coef_[j] += prod[j];
        else
            out.coef_[j - k_] += prod[j] * c_; // w^k = c
    }
    return out;
}

RootExt RootExt::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in root extension");
    if (is_scalar()) return scalar(k_, c_, coef_[0].inverse());
    // Solve (this) * x = 1 as a linear system over Q(i) in the basis
    // 1, w, ..., w^{k-1}. Column j of M is (this) * w^j.
    int k = k_;
    std::vector<std::vector<QiScalar>> m(k, std::vector<QiScalar>(k + 1, QiScalar(0)));
    RootExt col = *this;
    RootExt w = root(k_, c_);
    for (int j = 0; j < k; ++j) {
        for (int r = 0; r < k; ++r) m[r][j] = col.coef_[r];
        col = col * w;
    }
    m[0][k] = 1;
    for (int piv = 0; piv < k; ++piv) {
        int row = -1;
        for (int r = piv; r < k; ++r)
            if (!m[r][piv].is_zero()) {
                row = r;
                break;
            }
        if (row < 0) throw ArithmeticError("zero divisor in root extension");
        std::swap(m[piv], m[row]);
        QiScalar inv = m[piv][piv].inverse();
        for (int cidx = piv; cidx <= k; ++cidx) m[piv][cidx] *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == piv || m[r][piv].is_zero()) continue;
            QiScalar f = m[r][piv];
            for (int cidx = piv; cidx <= k; ++cidx) m[r][cidx] -= f * m[piv][cidx];
        }
    }
    std::vector<QiScalar> coef(k);
    for (int r = 0; r < k; ++r) coef[r] = m[r][k];
    return RootExt(k_, c_, std::move(coef));
}

RootExt RootExt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RootExt acc = scalar(k_, c_, 1);
    RootExt base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string RootExt::str() const {
    std::string out;
    for (int j = 0; j < k_; ++j) {
        if (coef_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coef_[j].str() + ")";
        if (j == 1) out += "*w";
        if (j > 1) out += "*w^" + std::to_string(j);
    }
    if (out.empty()) return "0";
    return out;
}

} // namespace fleib
