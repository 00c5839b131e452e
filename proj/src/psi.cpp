#include "fleib/psi.hpp"

#include <gmpxx.h>

namespace fleib {

namespace {

QiScalar binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return QiScalar(mpq_class(b));
}

// Sum over nondecreasing chains lo <= i_1 <= ... <= i_{m-1} <= t of the
// z-products described in the header. Iterative odometer over the chain.
MultiPoly chain_sum(int vars, int t, int k, int m) {
    const int lo = k + m;
    MultiPoly sum(vars);
    if (m == 1) {
        return MultiPoly::variable(vars, PsiSystem::z_index(t + 2 - k));
    }
    if (lo > t) return sum; // empty range
    std::vector<int> idx(m - 1, lo);
    while (true) {
        Exponents e(vars, 0);
        e[PsiSystem::z_index(t + 3 - idx[m - 2])] += 1;
        for (int j = m - 2; j >= 1; --j) e[PsiSystem::z_index(idx[j] + 3 - idx[j - 1])] += 1;
        e[PsiSystem::z_index(idx[0] + 3 - k - m)] += 1;
        sum.add_term(e, 1);

        // Advance the nondecreasing chain: i_1 <= i_2 <= ... <= i_{m-1} <= t.
        int pos = 0;
        while (pos < m - 1) {
            int cap = (pos + 1 < m - 1) ? idx[pos + 1] : t;
            if (idx[pos] < cap) {
                ++idx[pos];
                for (int r = 0; r < pos; ++r) idx[r] = lo;
                break;
            }
            ++pos;
        }
        if (pos == m - 1) break;
    }
    return sum;
}

} // namespace

PsiSystem psi_generate(int n) {
    if (n < 3) throw DimensionMismatch("psi_generate requires n >= 3");
    PsiSystem sys;
    sys.n = n;
    const int vars = sys.var_count();

    for (int t = 3; t <= n; ++t) {
        MultiPoly psi_t = MultiPoly::variable(vars, PsiSystem::z_index(t));
        for (int k = 3; k <= t - 1; ++k) {
            MultiPoly bracket(vars);
            for (int m = 1; m <= k - 1; ++m) {
                if (m >= 2 && k + m > t) break; // deeper sums are empty
                MultiPoly s = chain_sum(vars, t, k, m);
                if (s.is_zero()) continue;
                MultiPoly ym = MultiPoly::variable(vars, 0, m);
                bracket = bracket + (ym * s).scaled(binom(k - 1, k - 1 - m));
            }
            psi_t = psi_t - bracket * sys.polys[k - 3];
        }
        sys.polys.push_back(std::move(psi_t));
    }
    sys.polys.push_back(MultiPoly::variable(vars, PsiSystem::z_index(n + 1)));
    return sys;
}

} // namespace fleib
