#include "fleib/transform.hpp"

#include <map>
#include <mutex>

namespace fleib {

const PsiSystem& psi_cached(int n) {
    static std::mutex mu;
    static std::map<int, PsiSystem> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, psi_generate(n)).first;
    return it->second;
}

ParamVector rho_apply_xyu(const QiScalar& x, const QiScalar& y, const QiScalar& u,
                          const ParamVector& p) {
    if (x.is_zero() || u.is_zero())
        throw ArithmeticError("base change requires x != 0 and u != 0");
    const PsiSystem& sys = psi_cached(p.n);
    std::vector<QiScalar> vals = rho_apply_in<QiScalar>(
        sys, x, y, u, p.beta, p.gamma, QiScalar(1), [](const QiScalar& c) { return c; });
    QiScalar gamma = vals.back();
    vals.pop_back();
    return ParamVector(p.n, std::move(vals), std::move(gamma));
}

ParamVector rho_apply(const TransformParams& tp, const ParamVector& p) {
    tp.validate();
    return rho_apply_xyu(tp.x(), tp.y(), tp.u(), p);
}

TransformParams rho_compose(const TransformParams& tp1, const TransformParams& tp2) {
    return TransformParams(tp1.A * tp2.A, tp1.B * tp2.A + tp2.B * tp1.D, tp1.D * tp2.D);
}

TransformParams rho_invert(const TransformParams& tp) {
    QiScalar a_inv = tp.A.inverse();
    return TransformParams(a_inv, -tp.B * a_inv * tp.D.inverse(), tp.D.inverse());
}

} // namespace fleib
