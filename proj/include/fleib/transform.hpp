#ifndef FLEIB_TRANSFORM_HPP
#define FLEIB_TRANSFORM_HPP

#include <vector>

#include "fleib/param.hpp"
#include "fleib/psi.hpp"
#include "fleib/qi.hpp"

namespace fleib {

// Adapted base change (A, B, D) with AD != 0.
struct TransformParams {
    QiScalar A, B, D;

    TransformParams() : A(1), B(0), D(1) {}
    TransformParams(QiScalar a, QiScalar b, QiScalar d)
        : A(std::move(a)), B(std::move(b)), D(std::move(d)) {
        validate();
    }

    void validate() const {
        if (A.is_zero() || D.is_zero())
            throw ArithmeticError("adapted base change requires A*D != 0");
    }

    QiScalar x() const { return A.inverse(); }
    QiScalar y() const { return B / A; }
    QiScalar u() const { return D / A; }

    static TransformParams identity() { return {}; }
    bool is_identity() const { return A.is_one() && B.is_zero() && D.is_one(); }

    bool operator==(const TransformParams& o) const {
        return A == o.A && B == o.B && D == o.D;
    }
};

// Shared cache of psi systems (construction is ordered; results immutable).
const PsiSystem& psi_cached(int n);

// beta'_t = x^{t-2} u psi_t(y; beta) for 3 <= t <= n-1,
// beta'_n = x^{n-2} u (y gamma + psi_n(y; beta)),
// gamma'  = x^{n-2} u^2 gamma,  with x = 1/A, y = B/A, u = D/A.
ParamVector rho_apply(const TransformParams& tp, const ParamVector& p);

// Same map evaluated at raw arguments (x, y, u); x and u must be nonzero.
ParamVector rho_apply_xyu(const QiScalar& x, const QiScalar& y, const QiScalar& u,
                          const ParamVector& p);

// rho_apply(tp2, rho_apply(tp1, p)) == rho_apply(rho_compose(tp1, tp2), p):
// (A1 A2, B1 A2 + B2 D1, D1 D2).
TransformParams rho_compose(const TransformParams& tp1, const TransformParams& tp2);

// Parameters undoing tp: (1/A, -B/(A D), 1/D).
TransformParams rho_invert(const TransformParams& tp);

// Ring-generic core. Applies the base change with all values living in a
// commutative ring R (QiScalar, RootExt, ...); `embed` lifts coefficients.
template <typename R, typename Embed>
std::vector<R> rho_apply_in(const PsiSystem& sys, const R& x, const R& y, const R& u,
                            const std::vector<R>& beta, const R& gamma, const R& one,
                            Embed embed) {
    const int n = sys.n;
    if (static_cast<int>(beta.size()) != n - 2)
        throw DimensionMismatch("rho_apply: beta length != n-2");
    std::vector<R> assign;
    assign.reserve(sys.var_count());
    assign.push_back(y);
    for (const auto& b : beta) assign.push_back(b);
    assign.push_back(gamma);

    std::vector<R> out; // beta'_3..beta'_n, gamma'
    out.reserve(n - 1);
    R xp = x; // x^{t-2}
    for (int t = 3; t <= n; ++t) {
        if (t > 3) xp = xp * x;
        R val = sys.psi(t).eval_in(assign, one, embed);
        if (t == n) val = val + y * gamma;
        out.push_back(xp * u * val);
    }
    out.push_back(xp * u * u * gamma); // xp = x^{n-2} after the loop
    return out;
}

} // namespace fleib

#endif
